#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace shimura {

using Rational = boost::rational<std::int64_t>;

/// Element of the cyclotomic field Q(zeta_L), stored as rational
/// coefficients in the power basis 1, zeta, ..., zeta^(phi(L)-1), always
/// reduced modulo the L-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, Rational value);

  /// Reduces sum_i poly[i] zeta^i (any length) into the field.
  static Cyclotomic from_polynomial(int conductor, std::vector<Rational> poly);

  /// zeta_L^k.
  static Cyclotomic root_of_unity(int conductor, int k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational rational() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(Rational s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, Rational s) { return a *= s; }
  Cyclotomic operator-() const { return *this * Rational(-1); }

  /// Image under the Galois automorphism zeta -> zeta^k (gcd(k, L) = 1).
  Cyclotomic galois(int k) const;
  Cyclotomic conj() const { return galois(-1); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  /// Total order on coefficient vectors, for deterministic sorting only.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.coeffs_ < b.coeffs_; }

 private:
  void check_same_field(const Cyclotomic& rhs) const;
  static std::vector<Rational> reduce(int conductor, std::vector<Rational> poly);

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

}  // namespace shimura
