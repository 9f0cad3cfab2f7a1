#include "shimura/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace shimura {

namespace {

constexpr int kMaxConductor = 96;

std::vector<std::vector<std::int64_t>> build_cyclotomic_table() {
  std::vector<std::vector<std::int64_t>> table(kMaxConductor + 1);
  for (int n = 1; n <= kMaxConductor; ++n) {
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d) continue;
      const auto& den = table[d];
      const int dd = static_cast<int>(den.size()) - 1;
      std::vector<std::int64_t> quot(num.size() - dd, 0);
      for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
        std::int64_t c = num[i];  // den is monic
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      }
      num = std::move(quot);
    }
    table[n] = std::move(num);
  }
  return table;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static const auto table = build_cyclotomic_table();
  if (n < 1 || n > kMaxConductor) throw std::invalid_argument("cyclotomic index out of range: " + std::to_string(n));
  return table[n];
}

Cyclotomic::Cyclotomic(int conductor) : conductor_(conductor) {
  coeffs_.assign(cyclotomic_polynomial(conductor).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(int conductor, Rational value) : Cyclotomic(conductor) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::from_polynomial(int conductor, std::vector<Rational> poly) {
  Cyclotomic out(conductor);
  if (poly.size() < out.coeffs_.size()) poly.resize(out.coeffs_.size(), Rational(0));
  out.coeffs_ = reduce(conductor, std::move(poly));
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, int k) {
  k %= conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> poly(k + 1, Rational(0));
  poly[k] = 1;
  Cyclotomic out(conductor);
  out.coeffs_ = reduce(conductor, std::move(poly));
  return out;
}

std::vector<Rational> Cyclotomic::reduce(int conductor, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    Rational c = poly[i];
    if (c.numerator() == 0) continue;
    for (int j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, Rational(0));
  return poly;
}

void Cyclotomic::check_same_field(const Cyclotomic& rhs) const {
  if (conductor_ != rhs.conductor_) throw std::logic_error("cyclotomic values from different fields");
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c.numerator() != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i].numerator() != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  std::vector<Rational> prod(coeffs_.size() * 2, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = reduce(conductor_, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(Rational s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Cyclotomic Cyclotomic::galois(int k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  std::vector<Rational> poly(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(i * k) % conductor_] += coeffs_[i];
  Cyclotomic out(conductor_);
  out.coeffs_ = reduce(conductor_, std::move(poly));
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double angle = 2 * std::numbers::pi * static_cast<double>(i) / conductor_;
    z += boost::rational_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.numerator() == 0) continue;
    if (any) os << (c.numerator() < 0 ? " - " : " + ");
    else if (c.numerator() < 0) os << "-";
    Rational a = c.numerator() < 0 ? -c : c;
    if (i == 0 || a != Rational(1)) os << a;
    if (i > 0) os << (a != Rational(1) ? "*" : "") << "z" << conductor_ << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace shimura
