#include <algorithm>
#include <set>

#include "doctest.h"
#include "shimura/enumerate.hpp"
#include "test_util.hpp"

using namespace shimura;

namespace {

std::vector<int> canonical(const std::vector<std::vector<int>>& actions, std::vector<int> classes) {
  std::vector<int> best;
  for (const auto& act : actions) {
    std::vector<int> img;
    for (int c : classes) img.push_back(act[c]);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  }
  return best;
}

// Every (alpha, beta; gamma_1..gamma_r) with g' = 1, checked directly.
std::set<std::vector<int>> brute_passports(const PermGroup& g, int max_r, int gmax) {
  const auto actions = class_actions(g, automorphism_group(g));
  const int n = g.order();
  std::set<std::vector<int>> out;
  for (int r = 1; r <= max_r; ++r) {
    std::vector<Element> gam(r, 1);
    while (true) {
      Signature sig{1, {}};
      for (Element x : gam) sig.m.push_back(g.element_order(x));
      auto genus = riemann_hurwitz_genus(sig, n);
      if (genus && *genus <= gmax) {
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b) {
            GeneratingVector v{g.id(), 1, {{a, b}}, gam};
            if (validate_generating_vector(g, v) != VectorVerdict::ok) continue;
            out.insert(canonical(actions, passport_of(g, v).classes));
          }
      }
      int k = 0;
      while (k < r && ++gam[k] == n) gam[k++] = 1;
      if (k == r) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("default bounds") {
  auto b1 = ScanBounds::defaults(1);
  CHECK(b1.gmax == 7);
  CHECK(b1.max_order == 24);
  CHECK(b1.max_branch_points(2) == 12);
  CHECK(b1.max_branch_points(24) == 1);
  auto b2 = ScanBounds::defaults(2);
  CHECK(b2.gmax == 13);
  CHECK(b2.max_order == 9);
  CHECK(b2.max_order_etale == 12);
  auto b3 = ScanBounds::defaults(3);
  CHECK(b3.gmax == 19);
  CHECK(b3.max_order == 8);
  CHECK(b3.max_order_etale == 9);
  CHECK_FALSE(b3.overridden);
  CHECK(ScanBounds::with_gmax(1, 4).overridden);
}

TEST_CASE("Z/2 over an elliptic base has exactly six passports") {
  const auto& g = testutil::group(2, 1);
  auto covers = enumerate_passports(g, 1, ScanBounds::defaults(1));
  REQUIRE(covers.size() == 6);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    CHECK(covers[i].signature.r() == 2 * static_cast<int>(i + 1));
    CHECK(covers[i].genus == 2 + static_cast<int>(i));
  }
}

TEST_CASE("passport enumeration agrees with exhaustive tuple search") {
  const int max_r = 3;
  const int gmax = 7;
  for (const auto* g : testutil::catalog().groups()) {
    if (g->order() > 8) break;
    std::set<std::vector<int>> found;
    for (const auto& e : enumerate_passports(*g, 1, ScanBounds::defaults(1)))
      if (e.signature.r() <= max_r) found.insert(e.passport.classes);
    CHECK_MESSAGE(found == brute_passports(*g, max_r, gmax), g->name());
  }
}

TEST_CASE("enumerated passports are valid, canonical and distinct") {
  for (const auto* g : testutil::catalog().groups()) {
    if (g->order() > 12) break;
    const auto actions = class_actions(*g, automorphism_group(*g));
    std::set<std::vector<int>> seen;
    for (const auto& e : enumerate_passports(*g, 1, ScanBounds::defaults(1))) {
      CHECK(validate_generating_vector(*g, e.vector) == VectorVerdict::ok);
      CHECK(passport_of(*g, e.vector) == e.passport);
      CHECK(canonical(actions, e.passport.classes) == e.passport.classes);
      CHECK(seen.insert(e.passport.classes).second);
      CHECK(riemann_hurwitz_genus(e.signature, g->order()) == e.genus);
      CHECK(e.genus <= 7);
    }
  }
}

TEST_CASE("etale vectors") {
  auto v = find_etale_vector(testutil::group(4, 2), 2);
  REQUIRE(v.has_value());
  CHECK(v->branch.empty());
  CHECK(validate_generating_vector(testutil::group(4, 2), *v) == VectorVerdict::ok);
  // a genus-1 base has abelian fundamental group: no etale S3 cover
  CHECK_FALSE(find_etale_vector(testutil::group(6, 1), 1).has_value());
}
