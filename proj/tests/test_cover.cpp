#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "shimura/cover.hpp"
#include "shimura/fixtures.hpp"
#include "test_util.hpp"

using namespace shimura;

namespace {

// Two order-4 elements of Q8 generating it, and the central involution.
struct Q8Elements {
  Element i = 0, j = 0, z = 0;
};

Q8Elements q8_elements(const PermGroup& g) {
  Q8Elements e;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) e.z = x;
    if (g.element_order(x) == 4 && !e.i) e.i = x;
  }
  for (Element x = 0; x < g.order(); ++x) {
    Element gens[2] = {e.i, x};
    if (g.element_order(x) == 4 && g.generates(gens)) {
      e.j = x;
      break;
    }
  }
  return e;
}

}  // namespace

TEST_CASE("riemann-hurwitz genus") {
  CHECK(riemann_hurwitz_genus({1, {2, 2}}, 2) == 2);
  CHECK(riemann_hurwitz_genus({1, {3, 3, 3}}, 3) == 4);
  CHECK(riemann_hurwitz_genus({0, {2, 3, 7}}, 168) == 3);
  CHECK(riemann_hurwitz_genus({2, {}}, 3) == 4);
  CHECK_FALSE(riemann_hurwitz_genus({0, {2, 2, 2}}, 2).has_value());
  CHECK_FALSE(riemann_hurwitz_genus({0, {2}}, 2).has_value());
}

TEST_CASE("signature formatting") {
  CHECK(Signature{1, {2, 2}}.to_string() == "(1; 2,2)");
  CHECK(Signature{0, {2, 4, 4}}.to_string() == "(0; 2,4,4)");
  CHECK(Signature{2, {}}.etale());
}

TEST_CASE("generating vector verdicts on Q8") {
  const auto& g = testutil::group(8, 4);
  auto e = q8_elements(g);
  REQUIRE(e.j != 0);

  GeneratingVector central{g.id(), 1, {{e.i, e.j}}, {e.z}};
  CHECK(validate_generating_vector(g, central) == VectorVerdict::ok);
  CHECK(signature_of(g, central) == Signature{1, {2}});

  // commutators are central, so a non-central branch element cannot close up
  GeneratingVector noncentral{g.id(), 1, {{e.i, e.j}}, {e.i}};
  CHECK(validate_generating_vector(g, noncentral) == VectorVerdict::relation_fails);
  CHECK(to_string(VectorVerdict::relation_fails) == "relation-fails");

  GeneratingVector cyclic{g.id(), 1, {{e.i, g.identity()}}, {e.z, e.z}};
  CHECK(validate_generating_vector(g, cyclic) == VectorVerdict::not_surjective);

  GeneratingVector trivial_gamma{g.id(), 1, {{e.i, e.j}}, {e.z, g.identity()}};
  CHECK(validate_generating_vector(g, trivial_gamma) == VectorVerdict::identity_branch_element);
}

TEST_CASE("relation product evaluates left to right") {
  const auto& g = testutil::group(6, 1);  // S3
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c) {
        GeneratingVector v{g.id(), 1, {{a, b}}, {c}};
        CHECK(relation_product(g, v) == g.mul(c, g.commutator(a, b)));
      }
}

TEST_CASE("passport is the sorted class multiset") {
  const auto& g = testutil::group(3, 1);
  Element x = 1, y = g.inv(1);
  GeneratingVector v{g.id(), 1, {{0, 0}}, {y, x, x}};
  auto p = passport_of(g, v);
  CHECK(std::is_sorted(p.classes.begin(), p.classes.end()));
  CHECK(p.classes.size() == 3);
  GeneratingVector w{g.id(), 1, {{0, 0}}, {x, y, x}};
  CHECK(passport_of(g, w) == p);
}

TEST_CASE("word evaluation") {
  const auto& g = testutil::group(6, 1);
  std::map<std::string, Element> env{{"a", g.generators()[0]}, {"b", g.generators()[1]}};
  Element a = env["a"], b = env["b"];
  CHECK(evaluate_word(g, env, "1") == g.identity());
  CHECK(evaluate_word(g, env, "a*b") == g.mul(a, b));
  CHECK(evaluate_word(g, env, "a^-1*b^2") == g.mul(g.inv(a), g.mul(b, b)));
  CHECK(evaluate_word(g, env, " a * a^2 ") == g.pow(a, 3));
  CHECK_THROWS_AS(evaluate_word(g, env, "c"), FixtureError);
}

TEST_CASE("fixtures load and validate") {
  const auto& fx = testutil::fixtures();
  CHECK(fx.size() >= 16);
  for (const auto& f : fx) {
    CHECK(validate_generating_vector(*f.group, f.vector) == VectorVerdict::ok);
    CHECK(riemann_hurwitz_genus(signature_of(*f.group, f.vector), f.group->order()) == f.expected.genus);
  }
  CHECK(find_fixture(fx, "(5e)")->label == "(5e)");
  CHECK(find_fixture(fx, "(7)")->label == "(34)");
  CHECK(find_fixture(fx, "(99)") == nullptr);
}

TEST_CASE("a broken fixture is reported with its label") {
  auto path = std::filesystem::temp_directory_path() / "shimura_bad_fixture.json";
  {
    std::ofstream out(path);
    out << R"json({"schema": "shimura-fixtures/1", "families": [{
      "label": "(bad)", "aliases": [], "group": [2, 1], "gprime": 1,
      "elements": {"a": "(1,2)"}, "relations": ["a^3"],
      "hyperbolic": [["a", "1"]], "branch": ["a", "a"],
      "expected": {"genus": 2, "r": 2, "m": [2, 2], "N": 2, "star": true},
      "witnesses": [], "notes": ""}]})json";
  }
  try {
    load_family_fixtures(path, testutil::catalog());
    FAIL("expected a FixtureError");
  } catch (const FixtureError& e) {
    CHECK(std::string(e.what()).find("fixture (bad)") != std::string::npos);
    CHECK(std::string(e.what()).find("a^3") != std::string::npos);
  }
  std::filesystem::remove(path);
}
