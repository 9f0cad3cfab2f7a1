#include "shimura/quotient.hpp"

#include <algorithm>

#include "shimura/errors.hpp"

namespace shimura {

QuotientInfo quotient_signature(const PermGroup& g, const GeneratingVector& v, ElementSet h) {
  const int n = g.order();
  QuotientInfo q;
  q.subgroup = h;
  q.order = set_size(h);
  if (n % q.order != 0) throw IntegralityDefect("subgroup order does not divide group order");
  q.index = n / q.order;
  const auto hs = set_elements(h);

  int twice = q.index * (2 * v.gprime - 2);
  for (Element gamma : v.branch) {
    const int m = g.element_order(gamma);
    const ElementSet cyc = g.closure(std::vector<Element>{gamma});
    // left cosets x<gamma>, keyed by their minimal element
    std::vector<int> coset_of(n, -1);
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
      if (coset_of[x] >= 0) continue;
      for (Element c : set_elements(cyc)) coset_of[g.mul(x, c)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    std::vector<bool> seen(reps.size(), false);
    std::vector<int> ram;
    int orbits = 0;
    int degree = 0;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (seen[c]) continue;
      ++orbits;
      int size = 0;
      for (Element y : hs) {
        int d = coset_of[g.mul(y, reps[c])];
        if (!seen[d]) {
          seen[d] = true;
          ++size;
        }
      }
      int stab = 0;
      for (Element y : hs)
        if (contains(cyc, g.mul(g.mul(g.inv(reps[c]), y), reps[c]))) ++stab;
      if (size * stab != q.order || m % stab != 0) throw IntegralityDefect("orbit-stabilizer mismatch in quotient");
      if (stab > 1) q.top.m.push_back(stab);
      int e = m / stab;
      degree += e;
      if (e > 1) ram.push_back(e);
    }
    if (degree != q.index) throw IntegralityDefect("ramification indices do not add up to the degree");
    std::sort(ram.begin(), ram.end());
    q.bottom.push_back(ram);
    twice += q.index - orbits;
  }
  if (twice % 2 != 0 || twice < -2) throw IntegralityDefect("quotient genus is not a nonnegative integer");
  q.genus = twice / 2 + 1;
  q.top.gprime = q.genus;
  std::sort(q.top.m.begin(), q.top.m.end());

  // C -> C/H must give back the genus of C
  Signature full = signature_of(g, v);
  auto g_total = riemann_hurwitz_genus(full, n);
  auto g_top = riemann_hurwitz_genus(q.top, q.order);
  if (!g_total || !g_top || *g_total != *g_top) throw IntegralityDefect("quotient signature fails Riemann-Hurwitz");
  return q;
}

int invariant_h0_dim(const CharacterTable& t, const std::vector<int>& nu, ElementSet h) {
  int s = 0;
  for (int chi = 0; chi < t.size(); ++chi)
    if (nu[chi] != 0) s += nu[chi] * restriction_invariant_dim(t, chi, h);
  return s;
}

std::vector<int> h0_eigen_counts(const CharacterTable& t, const std::vector<int>& nu, Element x) {
  const int cls = t.group().class_of(x);
  std::vector<int> out(t.group().element_order(x), 0);
  for (int chi = 0; chi < t.size(); ++chi)
    if (nu[chi] != 0)
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += nu[chi] * t.eigen_counts(chi, cls)[a];
  return out;
}

namespace {

// Some isomorphism K -> H carries the super family's H^0 representation to
// the restriction of the sub family's.
bool same_h0_action(const CharacterTable& tg, const std::vector<int>& nu_g, ElementSet h, const CharacterTable& tk,
                    const std::vector<int>& nu_k) {
  const PermGroup& k = tk.group();
  for (const auto& iso : isomorphisms_onto(tg.group(), h, k)) {
    bool ok = true;
    for (Element x = 0; x < k.order() && ok; ++x)
      ok = h0_eigen_counts(tg, nu_g, iso[x]) == h0_eigen_counts(tk, nu_k, x);
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<InclusionEdge> detect_inclusions(const FamilyFixture& sub, const std::vector<const FamilyFixture*>& supers) {
  const PermGroup& g = *sub.group;
  const CharacterTable tg = character_table(g);
  const auto nu_g = chevalley_weil(tg, sub.vector);
  std::vector<InclusionEdge> out;
  for (const auto& rec : subgroups_up_to_conjugacy(g)) {
    QuotientInfo q = quotient_signature(g, sub.vector, rec.elements);
    for (const FamilyFixture* sup : supers) {
      if (sup->label == sub.label) continue;
      const PermGroup& k = *sup->group;
      if (k.order() != rec.order || q.genus != sup->vector.gprime) continue;
      auto m = signature_of(k, sup->vector).m;
      std::sort(m.begin(), m.end());
      if (m != q.top.m) continue;
      const CharacterTable tk = character_table(k);
      if (!same_h0_action(tg, nu_g, rec.elements, tk, chevalley_weil(tk, sup->vector))) continue;
      out.push_back({sub.label, sup->label, rec.elements, rec.generators, q});
    }
  }
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::prym_fibre: return "prym_fibre";
    case Membership::phi_fibre: return "phi_fibre";
    case Membership::neither: return "neither";
    case Membership::both: return "both";
  }
  return "?";
}

MembershipReport fibre_membership(const CharacterTable& t, const HodgeData& sub, const DecompositionReport& dec,
                                  ElementSet witness, const HodgeData& super) {
  MembershipReport rep;
  bool e_fixed = true;
  bool prym_fixed = true;
  for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i) {
    const auto& b = dec.blocks[i];
    int inv = 0;
    for (int chi : b.orbit)
      if (sub.nu[chi] != 0) inv += sub.nu[chi] * restriction_invariant_dim(t, chi, witness);
    bool on_e = inv > 0;
    bool on_prym = inv < b.h0_dim;
    if (on_e) rep.e_blocks.push_back(i);
    if (on_prym) rep.prym_blocks.push_back(i);
    if (on_e && on_prym) rep.straddling.push_back(i);
    if (on_e && b.moving) e_fixed = false;
    if (on_prym && b.moving) prym_fixed = false;
  }
  if (e_fixed && prym_fixed) rep.verdict = Membership::both;
  else if (e_fixed) rep.verdict = Membership::phi_fibre;
  else if (prym_fixed) rep.verdict = Membership::prym_fibre;
  else rep.verdict = Membership::neither;

  rep.sub_dim = sub.dimM;
  switch (rep.verdict) {
    case Membership::prym_fibre: rep.super_fibre_dim = super.prym_fibre_dim; break;
    case Membership::phi_fibre: rep.super_fibre_dim = super.phi_fibre_dim; break;
    case Membership::both: rep.super_fibre_dim = std::min(super.prym_fibre_dim, super.phi_fibre_dim); break;
    case Membership::neither: rep.super_fibre_dim = -1; break;
  }
  rep.full_fibre = rep.verdict != Membership::neither && rep.sub_dim == rep.super_fibre_dim;
  return rep;
}

}  // namespace shimura
