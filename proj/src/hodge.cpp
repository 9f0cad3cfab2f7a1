#include "shimura/hodge.hpp"

#include <stdexcept>

#include "shimura/errors.hpp"

namespace shimura {

std::vector<int> chevalley_weil(const CharacterTable& t, const GeneratingVector& v, Orientation o) {
  const PermGroup& g = t.group();
  std::vector<int> nu(t.size(), 0);
  nu[0] = v.gprime;
  for (int chi = 1; chi < t.size(); ++chi) {
    Rational s = Rational(t.degree(chi) * (v.gprime - 1));
    for (Element x : v.branch) {
      const auto& counts = t.eigen_counts(chi, g.class_of(x));
      const int m = static_cast<int>(counts.size());
      for (int a = 1; a < m; ++a) s += Rational(a, m) * Rational(counts[o == Orientation::inverse ? m - a : a]);
    }
    if (s.denominator() != 1 || s.numerator() < 0)
      throw IntegralityDefect("Chevalley-Weil multiplicity " + std::to_string(s.numerator()) + "/" +
                              std::to_string(s.denominator()) + " for character " + std::to_string(chi) + " of " +
                              g.id().to_string());
    nu[chi] = static_cast<int>(s.numerator());
  }
  return nu;
}

ClassFunction h0_character(const CharacterTable& t, const std::vector<int>& nu) {
  ClassFunction f = t.zero();
  for (int chi = 0; chi < t.size(); ++chi)
    if (nu[chi] != 0) f += t.character(chi) * Rational(nu[chi]);
  return f;
}

int n_delta(const CharacterTable& t, const ClassFunction& h0_char) {
  return invariant_dim(t, sym2_character(t, h0_char));
}

bool satisfies_star(const HodgeData& h) { return h.N == 3 * h.gprime - 3 + h.r; }

HodgeData hodge_data(const CharacterTable& t, const GeneratingVector& v, Orientation o) {
  HodgeData h;
  h.gprime = v.gprime;
  h.r = static_cast<int>(v.branch.size());
  h.nu = chevalley_weil(t, v, o);
  for (int chi = 0; chi < t.size(); ++chi) h.genus += h.nu[chi] * t.degree(chi);
  h.h0_char = h0_character(t, h.nu);
  auto minus = h.nu;
  minus[0] = 0;
  h.h0_minus_char = h0_character(t, minus);
  h.N = n_delta(t, h.h0_char);
  h.dimM = 3 * h.gprime - 3 + h.r;
  h.star = satisfies_star(h);
  h.dimP = n_delta(t, h.h0_minus_char);
  h.prym_fibre_dim = h.gprime * (h.gprime + 1) / 2;
  h.phi_fibre_dim = h.N - h.prym_fibre_dim;
  return h;
}

FibrationDims fibration_dimensions(const HodgeData& h) {
  if (h.gprime < 1) throw std::domain_error("fibration dimensions need g' >= 1");
  if (!h.star) throw std::domain_error("fibration dimensions need N = 3g'-3+r");
  return {h.dimM, h.dimP, h.prym_fibre_dim, h.phi_fibre_dim};
}

}  // namespace shimura
