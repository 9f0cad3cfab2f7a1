#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "shimura/catalog.hpp"
#include "shimura/cover.hpp"

namespace shimura {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureExpected {
  int genus = 0;
  int r = 0;
  std::vector<int> m;
  int N = 0;
  bool star = false;
  std::optional<std::array<int, 4>> fibration;              ///< dimM, dimP, prym, phi
  std::optional<std::vector<std::pair<int, int>>> h0;        ///< (degree, nu) for nontrivial nu > 0
  std::optional<std::vector<std::tuple<int, int, bool>>> blocks;  ///< (exponent, factor dim, moving)
};

struct FixtureWitness {
  std::string target;
  std::vector<std::string> words;
  ElementSet subgroup = 0;
  std::optional<std::string> membership;
  std::optional<bool> full;
};

struct FamilyFixture {
  std::string label;
  std::vector<std::string> aliases;
  const PermGroup* group = nullptr;
  std::map<std::string, Element> elements;
  std::vector<std::string> relations;
  GeneratingVector vector;
  FixtureExpected expected;
  std::vector<FixtureWitness> witnesses;
  std::string notes;
};

/// Evaluates a word like "g1*g2^-1*g3^2" ("1" is the identity).
Element evaluate_word(const PermGroup& g, const std::map<std::string, Element>& env, std::string_view word);

/// Loads and validates every family: elements lie in the named catalog
/// group, relations hold, and the vector passes validate_generating_vector.
/// Any failure throws FixtureError naming the family label.
std::vector<FamilyFixture> load_family_fixtures(const std::filesystem::path& path, const GroupCatalog& catalog);

const FamilyFixture* find_fixture(const std::vector<FamilyFixture>& fixtures, std::string_view label);

}  // namespace shimura
