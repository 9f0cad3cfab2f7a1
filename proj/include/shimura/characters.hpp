#pragma once

#include <vector>

#include "shimura/cyclotomic.hpp"
#include "shimura/group.hpp"

namespace shimura {

/// A function on conjugacy classes with values in Q(zeta_L), L = exp(G).
struct ClassFunction {
  std::vector<Cyclotomic> values;

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator*=(const ClassFunction& rhs);
  ClassFunction& operator*=(Rational s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, Rational s) { return a *= s; }
  ClassFunction conj() const;
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// Exact irreducible characters of a finite group together with the data
/// every character-level computation needs. The group must outlive it.
class CharacterTable {
 public:
  const PermGroup& group() const { return *group_; }
  int conductor() const { return conductor_; }
  int size() const { return static_cast<int>(chars_.size()); }
  /// Prime used for the modular splitting.
  int prime() const { return prime_; }

  const Cyclotomic& value(int chi, int cls) const { return chars_[chi][cls]; }
  const ClassFunction& character(int chi) const { return functions_[chi]; }
  int degree(int chi) const { return degrees_[chi]; }
  int indicator(int chi) const { return indicators_[chi]; }
  /// Index of the complex-conjugate character.
  int dual(int chi) const { return dual_[chi]; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int chi) const { return orbit_of_[chi]; }
  /// Multiplicity of each eigenvalue zeta_m^a (a = 0..m-1, m the class
  /// element order) of a representative of `cls` acting on V_chi.
  const std::vector<int>& eigen_counts(int chi, int cls) const { return eigen_[chi][cls]; }

  ClassFunction constant(Rational v) const;
  ClassFunction trivial() const { return constant(1); }
  ClassFunction zero() const { return constant(0); }
  ClassFunction regular() const;

 private:
  friend CharacterTable character_table(const PermGroup&);
  const PermGroup* group_ = nullptr;
  int conductor_ = 1;
  int prime_ = 0;
  std::vector<std::vector<Cyclotomic>> chars_;
  std::vector<ClassFunction> functions_;
  std::vector<int> degrees_;
  std::vector<int> indicators_;
  std::vector<int> dual_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<std::vector<std::vector<int>>> eigen_;
};

/// Irreducible characters by simultaneous diagonalization of the class
/// multiplication matrices over a prime field F_p with p = 1 mod exp(G),
/// lifted to cyclotomic values through eigenvalue multiplicities.
/// Characters are ordered trivial first, then by degree, then by values.
CharacterTable character_table(const PermGroup& g);

/// (1/|G|) sum_g chi(g^2), in {-1, 0, 1}.
int frobenius_schur(const CharacterTable& t, int chi);

/// Partition of the characters into Galois orbits, each sorted, ordered by
/// smallest member. The trivial character is alone in orbit 0.
std::vector<std::vector<int>> galois_orbits(const CharacterTable& t);

/// <f, g> = (1/|G|) sum_x f(x) conj(g(x)).
Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g);

/// dim of the G-invariants of a representation with character f. Throws
/// IntegralityDefect unless the result is a nonnegative integer.
int invariant_dim(const CharacterTable& t, const ClassFunction& f);

/// Character of the symmetric square: x -> (f(x)^2 + f(x^2)) / 2.
ClassFunction sym2_character(const CharacterTable& t, const ClassFunction& f);
/// Character of the exterior square: x -> (f(x)^2 - f(x^2)) / 2.
ClassFunction alt2_character(const CharacterTable& t, const ClassFunction& f);

/// Eigenvalue multiplicities N_a of V_chi(x), computed exactly as
/// (1/m) sum_t chi(x^t) zeta_m^(-a t). Throws IntegralityDefect if any N_a
/// is not a nonnegative integer.
std::vector<int> eigenvalue_counts(const CharacterTable& t, int chi, Element x);

/// dim V_chi^H = (1/|H|) sum_{h in H} chi(h).
int restriction_invariant_dim(const CharacterTable& t, int chi, ElementSet subgroup);
int restriction_invariant_dim(const CharacterTable& t, const ClassFunction& f, ElementSet subgroup);

}  // namespace shimura
