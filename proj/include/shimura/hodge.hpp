#pragma once

#include <vector>

#include "shimura/characters.hpp"
#include "shimura/cover.hpp"

namespace shimura {

/// Which eigenvalue count the weight a/m multiplies in the Chevalley-Weil
/// sum. `inverse` (the default) pairs a/m with the eigenvalue zeta_m^(-a).
enum class Orientation { inverse, direct };

/// Multiplicity of each irreducible character (table order) in H^0(K_C).
/// nu_trivial = g'; for chi nontrivial
///   nu = chi(1)(g'-1) + sum_j sum_{a=1}^{m_j-1} (a/m_j) N_{j, sigma(a)}.
/// Throws IntegralityDefect unless every entry is a nonnegative integer.
std::vector<int> chevalley_weil(const CharacterTable& t, const GeneratingVector& v,
                                Orientation o = Orientation::inverse);

struct FibrationDims {
  int dimM = 0;
  int dimP = 0;
  int prym_fibre = 0;
  int phi_fibre = 0;
  friend bool operator==(const FibrationDims&, const FibrationDims&) = default;
};

struct HodgeData {
  int gprime = 0;
  int r = 0;
  std::vector<int> nu;
  int genus = 0;
  ClassFunction h0_char;
  ClassFunction h0_minus_char;
  int N = 0;
  int dimM = 0;
  bool star = false;
  int dimP = 0;
  int prym_fibre_dim = 0;
  int phi_fibre_dim = 0;
};

HodgeData hodge_data(const CharacterTable& t, const GeneratingVector& v, Orientation o = Orientation::inverse);

/// dim (S^2 H^0(K_C))^G for the given H^0 character.
int n_delta(const CharacterTable& t, const ClassFunction& h0_char);

/// N = 3g' - 3 + r.
bool satisfies_star(const HodgeData& h);

/// (dim M, dim P, Prym fibre, phi fibre). Throws std::domain_error unless
/// g' >= 1 and the condition holds.
FibrationDims fibration_dimensions(const HodgeData& h);

/// sum_chi nu_chi chi.
ClassFunction h0_character(const CharacterTable& t, const std::vector<int>& nu);

}  // namespace shimura
