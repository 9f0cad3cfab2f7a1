#include <numeric>

#include "doctest.h"
#include "shimura/enumerate.hpp"
#include "shimura/hodge.hpp"
#include "test_util.hpp"

using namespace shimura;

namespace {

// dim (S^2 V)^G from multiplicities and Frobenius-Schur indicators only.
int n_oracle(const CharacterTable& t, const std::vector<int>& nu) {
  int total = 0;
  for (int c = 0; c < t.size(); ++c) {
    int d = t.dual(c);
    if (d == c) {
      int fs = frobenius_schur(t, c);
      if (fs == 1) total += nu[c] * (nu[c] + 1) / 2;
      if (fs == -1) total += nu[c] * (nu[c] - 1) / 2;
    } else if (c < d) {
      total += nu[c] * nu[d];
    }
  }
  return total;
}

struct Case {
  const PermGroup* g;
  GeneratingVector v;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (const auto& f : testutil::fixtures()) out.push_back({f.group, f.vector});
  for (const auto* g : testutil::catalog().groups()) {
    if (g->order() > 12) break;
    for (const auto& e : enumerate_passports(*g, 1, ScanBounds::defaults(1))) out.push_back({g, e.vector});
  }
  return out;
}

}  // namespace

TEST_CASE("multiplicities sum to the genus, N matches the indicator oracle") {
  for (const auto& c : cases()) {
    auto t = character_table(*c.g);
    auto h = hodge_data(t, c.v);
    int g = 0;
    for (int chi = 0; chi < t.size(); ++chi) {
      CHECK(h.nu[chi] >= 0);
      g += h.nu[chi] * t.degree(chi);
    }
    CHECK(g == h.genus);
    CHECK(riemann_hurwitz_genus(signature_of(*c.g, c.v), c.g->order()) == h.genus);
    CHECK(h.nu[0] == c.v.gprime);
    CHECK(h.N == n_oracle(t, h.nu));
    CHECK(h.N == n_delta(t, h.h0_char));
    CHECK(h.star == (h.N == 3 * c.v.gprime - 3 + static_cast<int>(c.v.branch.size())));
  }
}

TEST_CASE("H^1 multiplicities from fixed-space dimensions") {
  for (const auto& c : cases()) {
    auto t = character_table(*c.g);
    auto nu = chevalley_weil(t, c.v);
    for (int chi = 0; chi < t.size(); ++chi) {
      int rhs = 2 * t.degree(chi) * (c.v.gprime - 1) + (chi == 0 ? 2 : 0);
      for (Element x : c.v.branch) rhs += t.degree(chi) - eigenvalue_counts(t, chi, x)[0];
      CHECK(nu[chi] + nu[t.dual(chi)] == rhs);
    }
  }
}

TEST_CASE("the opposite orientation conjugates the multiplicities") {
  for (const auto& c : cases()) {
    auto t = character_table(*c.g);
    auto a = chevalley_weil(t, c.v, Orientation::inverse);
    auto b = chevalley_weil(t, c.v, Orientation::direct);
    for (int chi = 0; chi < t.size(); ++chi) CHECK(b[chi] == a[t.dual(chi)]);
  }
}

TEST_CASE("etale covers carry chi(1)(g'-1) copies of each nontrivial character") {
  for (const auto* g : testutil::catalog().groups()) {
    if (g->order() > 9) break;
    auto v = find_etale_vector(*g, 2);
    if (!v) continue;
    auto t = character_table(*g);
    auto nu = chevalley_weil(t, *v);
    CHECK(nu[0] == 2);
    for (int chi = 1; chi < t.size(); ++chi) CHECK(nu[chi] == t.degree(chi));
  }
}

TEST_CASE("fibration dimensions") {
  const auto& f = testutil::fixture("(2e)");
  auto t = character_table(*f.group);
  auto h = hodge_data(t, f.vector);
  auto d = fibration_dimensions(h);
  CHECK(d == FibrationDims{4, 3, 1, 3});

  const auto& rational = testutil::fixture("(34)");
  auto t0 = character_table(*rational.group);
  CHECK_THROWS_AS(fibration_dimensions(hodge_data(t0, rational.vector)), std::domain_error);

  // (1; 2^6) over Z/2 fails the condition
  auto z2 = enumerate_passports(testutil::group(2, 1), 1, ScanBounds::defaults(1));
  auto tz = character_table(testutil::group(2, 1));
  auto hz = hodge_data(tz, z2.back().vector);
  CHECK_FALSE(hz.star);
  CHECK_THROWS_AS(fibration_dimensions(hz), std::domain_error);
}

TEST_CASE("h0 character") {
  const auto& f = testutil::fixture("(6e)");
  auto t = character_table(*f.group);
  auto h = hodge_data(t, f.vector);
  CHECK(h0_character(t, h.nu) == h.h0_char);
  CHECK(h.h0_char.values[0].rational() == Rational(h.genus));
}
