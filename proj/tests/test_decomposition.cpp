#include <algorithm>

#include "doctest.h"
#include "shimura/decomposition.hpp"
#include "shimura/enumerate.hpp"
#include "test_util.hpp"

using namespace shimura;

namespace {

using Shape = std::vector<std::tuple<int, int, bool>>;

Shape shape(const DecompositionReport& d) {
  Shape s;
  for (const auto& b : d.blocks) s.emplace_back(b.exponent, b.factor_dim, b.moving);
  std::sort(s.begin(), s.end());
  return s;
}

void check_block_invariants(const CharacterTable& t, const HodgeData& h, const DecompositionReport& d) {
  int g = 0, n = 0;
  std::vector<int> seen(t.size(), 0);
  for (const auto& b : d.blocks) {
    CHECK(b.h0_dim > 0);
    CHECK(b.factor_dim > 0);
    CHECK(b.contribution >= 0);
    CHECK(b.moving == (b.contribution > 0));
    CHECK(b.exponent * b.schur == b.degree);
    CHECK(b.factor_dim * b.exponent == b.h0_dim);
    int h0 = 0;
    for (int chi : b.orbit) {
      h0 += h.nu[chi] * t.degree(chi);
      seen[chi]++;
    }
    CHECK(h0 == b.h0_dim);
    g += b.exponent * b.factor_dim;
    n += b.contribution;
  }
  CHECK(g == h.genus);
  CHECK(n == h.N);
  // an orbit appears exactly when one of its members occurs in H^0
  for (const auto& orbit : t.orbits()) {
    bool occurs = false;
    for (int chi : orbit) occurs = occurs || h.nu[chi] > 0;
    for (int chi : orbit) CHECK(seen[chi] == (occurs ? 1 : 0));
  }
  CHECK(rigidity_flags(h, t).size() == d.blocks.size());
}

}  // namespace

TEST_CASE("fixture decompositions match their recorded shapes") {
  for (const auto& f : testutil::fixtures()) {
    if (!f.expected.blocks) continue;
    auto t = character_table(*f.group);
    auto h = hodge_data(t, f.vector);
    auto d = jacobian_decomposition(h, t);
    check_block_invariants(t, h, d);
    Shape want = *f.expected.blocks;
    std::sort(want.begin(), want.end());
    CHECK_MESSAGE(shape(d) == want, f.label);
  }
}

TEST_CASE("block invariants across the elliptic-base scan") {
  for (const auto* g : testutil::catalog().groups()) {
    if (g->order() > 12) break;
    auto t = character_table(*g);
    for (const auto& e : enumerate_passports(*g, 1, ScanBounds::defaults(1))) {
      auto h = hodge_data(t, e.vector);
      check_block_invariants(t, h, jacobian_decomposition(h, t));
    }
  }
}

TEST_CASE("quaternionic characters halve the exponent") {
  const auto& f = testutil::fixture("(5e)");
  auto t = character_table(*f.group);
  auto h = hodge_data(t, f.vector);
  auto d = jacobian_decomposition(h, t);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].trivial());
  CHECK(d.blocks[1].degree == 2);
  CHECK(d.blocks[1].schur == 2);
  CHECK(d.blocks[1].exponent == 1);
  CHECK(d.blocks[1].factor_dim == 2);
  CHECK(d.rendering == "JC ~ B(1) x B(2)");
}

TEST_CASE("rendering lists exponents") {
  const auto& f = testutil::fixture("(34)");
  auto t = character_table(*f.group);
  auto h = hodge_data(t, f.vector);
  CHECK(jacobian_decomposition(h, t).rendering == "JC ~ B(1) x B(1)^2");
}
