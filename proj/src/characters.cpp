#include "shimura/characters.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shimura/errors.hpp"

namespace shimura {

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += rhs.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= rhs.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(Rational s) {
  for (auto& v : values) v *= s;
  return *this;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out = *this;
  for (auto& v : out.values) v = v.conj();
  return out;
}

ClassFunction CharacterTable::constant(Rational v) const {
  return ClassFunction{std::vector<Cyclotomic>(group_->class_count(), Cyclotomic(conductor_, v))};
}

ClassFunction CharacterTable::regular() const {
  ClassFunction f = zero();
  f.values[0] = Cyclotomic(conductor_, Rational(group_->order()));
  return f;
}

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 p) { return ((a % p) + p) % p; }

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) {
  if (mod(a, p) == 0) throw std::logic_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 choose_prime(int order, int exponent) {
  for (i64 p = exponent + 1;; p += exponent)
    if (is_prime(p) && p * p > 4 * static_cast<i64>(order)) return p;
}

i64 primitive_root_of_order(int e, i64 p) {
  for (i64 g = 2; g < p; ++g) {
    i64 z = powmod(g, (p - 1) / e, p);
    bool ok = true;
    for (int d = 1; d < e && ok; ++d)
      if (e % d == 0 && powmod(z, d, p) == 1) ok = false;
    if (ok) return z;
  }
  return 1;  // e == 1
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

// Null space of a rows x cols matrix over F_p, as a list of basis vectors.
std::vector<Vec> null_space(Mat a, i64 p) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    i64 s = invmod(a[r][c], p);
    for (auto& v : a[r]) v = v * s % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      i64 f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = mod(-a[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Columns of `space` span a subspace invariant under m. Split it into
// eigenspaces of m.
std::vector<std::vector<Vec>> split_space(const Mat& m, const std::vector<Vec>& space, i64 p) {
  const int k = static_cast<int>(m.size());
  const int d = static_cast<int>(space.size());
  Mat img(k, Vec(d, 0));  // m * B
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < d; ++c) {
      i64 s = 0;
      for (int j = 0; j < k; ++j) s = (s + m[i][j] * space[c][j]) % p;
      img[i][c] = s;
    }
  std::vector<std::vector<Vec>> parts;
  int found = 0;
  for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
    Mat a = img;
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < d; ++c) a[i][c] = mod(a[i][c] - lambda * space[c][i], p);
    auto ker = null_space(a, p);
    if (ker.empty()) continue;
    std::vector<Vec> part;
    for (const auto& coeff : ker) {
      Vec v(k, 0);
      for (int c = 0; c < d; ++c)
        for (int i = 0; i < k; ++i) v[i] = (v[i] + coeff[c] * space[c][i]) % p;
      part.push_back(std::move(v));
    }
    found += static_cast<int>(part.size());
    parts.push_back(std::move(part));
  }
  if (found != d) throw std::runtime_error("class algebra not split over F_p");
  return parts;
}

bool lex_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CharacterTable character_table(const PermGroup& g) {
  const int n = g.order();
  const int k = g.class_count();
  const int e = g.exponent();
  const auto& cls = g.classes();

  // a[i][j][l] = #{x in C_i : x^-1 z_l in C_j}
  std::vector<Mat> m(k, Mat(k, Vec(k, 0)));
  for (int l = 0; l < k; ++l) {
    Element z = cls[l].representative;
    for (Element x = 0; x < n; ++x) {
      int i = g.class_of(x);
      int j = g.class_of(g.mul(g.inv(x), z));
      ++m[i][j][l];
    }
  }

  const i64 p = choose_prime(n, e);
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (int i = 1; i < k; ++i) {
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& part : split_space(m[i], s, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) throw std::runtime_error("character splitting incomplete for " + g.id().to_string());

  const i64 z = primitive_root_of_order(e, p);
  CharacterTable t;
  t.group_ = &g;
  t.conductor_ = e;
  t.prime_ = static_cast<int>(p);

  std::vector<std::pair<int, std::vector<Cyclotomic>>> found;
  for (const auto& s : spaces) {
    Vec w = s[0];
    i64 s0 = invmod(w[0], p);
    for (auto& v : w) v = v * s0 % p;
    i64 sum = 0;
    for (int j = 0; j < k; ++j) {
      int jd = g.inverse_class(j);
      sum = (sum + w[j] * w[jd] % p * invmod(cls[j].size, p)) % p;
    }
    i64 d2 = n % p * invmod(sum, p) % p;
    int degree = 0;
    for (int d = 1; d * d <= n; ++d)
      if (d * d % p == d2) { degree = d; break; }
    if (degree == 0) throw IntegralityDefect("no character degree fits in " + g.id().to_string());
    Vec chi_mod(k);
    for (int j = 0; j < k; ++j) chi_mod[j] = degree * w[j] % p * invmod(cls[j].size, p) % p;

    std::vector<Cyclotomic> vals;
    for (int j = 0; j < k; ++j) {
      const int mo = cls[j].element_order;
      const i64 zm = powmod(z, e / mo, p);
      const i64 inv_m = invmod(mo, p);
      std::vector<Rational> poly(e, Rational(0));
      int total = 0;
      for (int a = 0; a < mo; ++a) {
        i64 acc = 0;
        for (int tt = 0; tt < mo; ++tt)
          acc = (acc + chi_mod[g.power_class(j, tt)] * powmod(zm, mod(-static_cast<i64>(a) * tt, mo), p)) % p;
        i64 na = acc * inv_m % p;
        if (na > degree) throw IntegralityDefect("eigenvalue multiplicity lift failed in " + g.id().to_string());
        poly[static_cast<std::size_t>(a) * (e / mo)] += Rational(na);
        total += static_cast<int>(na);
      }
      if (total != degree) throw IntegralityDefect("eigenvalue multiplicities do not sum to degree in " + g.id().to_string());
      vals.push_back(Cyclotomic::from_polynomial(e, poly));
    }
    found.emplace_back(degree, std::move(vals));
  }

  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    bool ta = std::all_of(a.second.begin(), a.second.end(), [&](const Cyclotomic& c) { return c == Cyclotomic(e, 1); });
    bool tb = std::all_of(b.second.begin(), b.second.end(), [&](const Cyclotomic& c) { return c == Cyclotomic(e, 1); });
    if (ta != tb) return ta;
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  for (auto& [d, vals] : found) {
    t.degrees_.push_back(d);
    t.functions_.push_back(ClassFunction{vals});
    t.chars_.push_back(std::move(vals));
  }

  for (int c = 0; c < k; ++c) {
    t.indicators_.push_back(frobenius_schur(t, c));
    auto dual = t.functions_[c].conj();
    int idx = -1;
    for (int o = 0; o < k; ++o)
      if (t.functions_[o] == dual) idx = o;
    t.dual_.push_back(idx);
  }
  t.orbits_ = galois_orbits(t);
  t.orbit_of_.assign(k, 0);
  for (int o = 0; o < static_cast<int>(t.orbits_.size()); ++o)
    for (int c : t.orbits_[o]) t.orbit_of_[c] = o;
  t.eigen_.assign(k, {});
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < k; ++j) t.eigen_[c].push_back(eigenvalue_counts(t, c, cls[j].representative));
  return t;
}

int frobenius_schur(const CharacterTable& t, int chi) {
  const PermGroup& g = t.group();
  Cyclotomic s(t.conductor());
  for (Element x = 0; x < g.order(); ++x) s += t.value(chi, g.class_of(g.mul(x, x)));
  if (!s.is_rational()) throw IntegralityDefect("Frobenius-Schur sum is irrational");
  Rational v = s.rational() / Rational(g.order());
  if (v.denominator() != 1 || v.numerator() < -1 || v.numerator() > 1)
    throw IntegralityDefect("Frobenius-Schur indicator out of range");
  return static_cast<int>(v.numerator());
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& t) {
  const PermGroup& g = t.group();
  const int k = t.size();
  const int e = t.conductor();
  std::vector<int> seen(k, -1);
  std::vector<std::vector<int>> orbits;
  for (int c = 0; c < k; ++c) {
    if (seen[c] >= 0) continue;
    std::vector<int> orbit;
    for (int a = 1; a <= e; ++a) {
      if (std::gcd(a, e) != 1) continue;
      std::vector<Cyclotomic> img;
      for (int j = 0; j < g.class_count(); ++j) img.push_back(t.value(c, g.power_class(j, a)));
      for (int o = 0; o < k; ++o)
        if (t.character(o).values == img && std::find(orbit.begin(), orbit.end(), o) == orbit.end()) orbit.push_back(o);
    }
    std::sort(orbit.begin(), orbit.end());
    for (int o : orbit) seen[o] = static_cast<int>(orbits.size());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
  const PermGroup& g = t.group();
  Cyclotomic s(t.conductor());
  for (int j = 0; j < g.class_count(); ++j) s += f.values[j] * h.values[j].conj() * Rational(g.classes()[j].size);
  return s * Rational(1, g.order());
}

namespace {

int to_count(const Cyclotomic& v, const char* what) {
  if (!v.is_rational()) throw IntegralityDefect(std::string(what) + " is irrational: " + v.to_string());
  Rational r = v.rational();
  if (r.denominator() != 1 || r.numerator() < 0)
    throw IntegralityDefect(std::string(what) + " is not a nonnegative integer: " + v.to_string());
  return static_cast<int>(r.numerator());
}

}  // namespace

int invariant_dim(const CharacterTable& t, const ClassFunction& f) {
  return to_count(inner_product(t, f, t.trivial()), "invariant dimension");
}

namespace {

ClassFunction square_character(const CharacterTable& t, const ClassFunction& f, Rational sign) {
  const PermGroup& g = t.group();
  ClassFunction out = f;
  for (int j = 0; j < g.class_count(); ++j)
    out.values[j] = (f.values[j] * f.values[j] + f.values[g.power_class(j, 2)] * sign) * Rational(1, 2);
  return out;
}

}  // namespace

ClassFunction sym2_character(const CharacterTable& t, const ClassFunction& f) { return square_character(t, f, 1); }
ClassFunction alt2_character(const CharacterTable& t, const ClassFunction& f) { return square_character(t, f, -1); }

std::vector<int> eigenvalue_counts(const CharacterTable& t, int chi, Element x) {
  const PermGroup& g = t.group();
  const int e = t.conductor();
  const int m = g.element_order(x);
  const int step = e / m;
  std::vector<int> out(m, 0);
  for (int a = 0; a < m; ++a) {
    std::vector<Rational> poly(e, Rational(0));
    Element y = g.identity();
    for (int s = 0; s < m; ++s) {
      const auto& c = t.value(chi, g.class_of(y)).coefficients();
      int shift = ((-a * s) % m + m) % m * step;
      for (std::size_t i = 0; i < c.size(); ++i) poly[(i + shift) % e] += c[i];
      y = g.mul(y, x);
    }
    Cyclotomic v = Cyclotomic::from_polynomial(e, poly) * Rational(1, m);
    out[a] = to_count(v, "eigenvalue multiplicity");
  }
  return out;
}

int restriction_invariant_dim(const CharacterTable& t, const ClassFunction& f, ElementSet subgroup) {
  const PermGroup& g = t.group();
  Cyclotomic s(t.conductor());
  for (Element h : set_elements(subgroup)) s += f.values[g.class_of(h)];
  return to_count(s * Rational(1, set_size(subgroup)), "restricted invariant dimension");
}

int restriction_invariant_dim(const CharacterTable& t, int chi, ElementSet subgroup) {
  return restriction_invariant_dim(t, t.character(chi), subgroup);
}

}  // namespace shimura
