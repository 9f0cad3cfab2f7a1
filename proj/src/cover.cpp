#include "shimura/cover.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/cyclotomic.hpp"

namespace shimura {

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(" << gprime << ";";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : " ") << m[i];
  os << ")";
  return os.str();
}

std::string to_string(VectorVerdict v) {
  switch (v) {
    case VectorVerdict::ok: return "ok";
    case VectorVerdict::relation_fails: return "relation-fails";
    case VectorVerdict::not_surjective: return "not-surjective";
    case VectorVerdict::identity_branch_element: return "identity-branch-element";
  }
  return "?";
}

std::optional<int> riemann_hurwitz_genus(const Signature& sig, int n) {
  if (n < 1 || sig.gprime < 0) return std::nullopt;
  Rational twice = Rational(n) * Rational(2 * sig.gprime - 2);
  for (int m : sig.m) {
    if (m < 2) return std::nullopt;
    twice += Rational(n) * (Rational(1) - Rational(1, m));
  }
  // twice = 2g - 2
  if (twice.denominator() != 1 || twice.numerator() % 2 != 0 || twice.numerator() < -2) return std::nullopt;
  return static_cast<int>(twice.numerator() / 2 + 1);
}

Element relation_product(const PermGroup& g, const GeneratingVector& v) {
  Element acc = g.identity();
  for (Element x : v.branch) acc = g.mul(acc, x);
  for (auto [a, b] : v.hyperbolic) acc = g.mul(acc, g.commutator(a, b));
  return acc;
}

VectorVerdict validate_generating_vector(const PermGroup& g, const GeneratingVector& v) {
  for (Element x : v.branch)
    if (x == g.identity()) return VectorVerdict::identity_branch_element;
  if (relation_product(g, v) != g.identity()) return VectorVerdict::relation_fails;
  std::vector<Element> all = v.branch;
  for (auto [a, b] : v.hyperbolic) {
    all.push_back(a);
    all.push_back(b);
  }
  if (!g.generates(all)) return VectorVerdict::not_surjective;
  return VectorVerdict::ok;
}

Signature signature_of(const PermGroup& g, const GeneratingVector& v) {
  Signature s{v.gprime, {}};
  for (Element x : v.branch) s.m.push_back(g.element_order(x));
  return s;
}

Passport passport_of(const PermGroup& g, const GeneratingVector& v) {
  Passport p{g.id(), v.gprime, {}};
  for (Element x : v.branch) p.classes.push_back(g.class_of(x));
  std::sort(p.classes.begin(), p.classes.end());
  return p;
}

}  // namespace shimura
