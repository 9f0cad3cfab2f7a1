#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shimura/catalog.hpp"
#include "shimura/decomposition.hpp"
#include "shimura/enumerate.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/hodge.hpp"
#include "shimura/quotient.hpp"

namespace shimura {

struct ScanConfig {
  std::filesystem::path catalog;
  std::filesystem::path fixtures;
  std::vector<int> gprimes{1, 2, 3};
  std::optional<int> gmax_override;
  int jobs = 1;
};

struct PassportRow {
  int gprime = 0;
  GroupId group;
  std::string group_name;
  std::vector<int> classes;
  Signature signature;
  GeneratingVector vector;
  int genus = 0;
  int N = 0;
  bool star = false;
  int dimM = 0;
  int dimP = 0;
  std::optional<FibrationDims> fibration;
  std::vector<int> nu;
  std::vector<int> degrees;
  std::string decomposition;
  std::vector<bool> moving;
};

struct EtaleRow {
  int gprime = 0;
  GroupId group;
  std::string group_name;
  int genus = 0;
  int N = 0;
  int dimM = 0;
  bool star = false;
};

/// Star-passing passports grouped by (g', G, g, r, N).
struct FamilyRow {
  int gprime = 0;
  GroupId group;
  std::string group_name;
  int genus = 0;
  int r = 0;
  int N = 0;
  int passports = 0;
};

struct ScanSection {
  int gprime = 0;
  ScanBounds bounds;
  ScanStats stats;
  int groups_scanned = 0;
  int etale_groups_scanned = 0;
  std::vector<PassportRow> rows;
  std::vector<EtaleRow> etale;
};

struct Report {
  std::string catalog_provenance;
  bool watermarked = false;
  std::vector<ScanSection> sections;
  std::vector<FamilyRow> families;
  /// Every catalog group of order <= 12 has a nontrivial linear character.
  bool small_groups_have_linear_characters = false;
};

/// The classification scan over every g' in cfg.gprimes. Throws
/// IntegralityDefect naming the passport on any integrality failure.
Report run_scan(const ScanConfig& cfg, const GroupCatalog& catalog);

PassportRow analyze_passport(const PermGroup& g, const CharacterTable& t, const EnumeratedCover& e);

struct ExpectationCheck {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = true;
};

struct WitnessVerdict {
  FixtureWitness witness;
  QuotientInfo quotient;
  MembershipReport membership;
};

struct FamilyAnalysis {
  const FamilyFixture* fixture = nullptr;
  HodgeData hodge;
  std::optional<FibrationDims> fibration;
  DecompositionReport decomposition;
  std::vector<QuotientInfo> elliptic_quotients;
  std::vector<InclusionEdge> edges;
  std::vector<WitnessVerdict> witnesses;
  std::vector<ExpectationCheck> checks;
  bool all_ok() const;
};

/// Full analysis of one fixture against all the others, with the fixture's
/// expected values checked.
FamilyAnalysis analyze_family(const FamilyFixture& f, const std::vector<FamilyFixture>& all);

/// Inclusion graph over all fixtures. Labels related through aliases are
/// merged into one node; `reduced` keeps only edges not implied by others.
struct InclusionGraph {
  std::vector<InclusionEdge> edges;
  std::map<std::string, std::string> node_of;      ///< label -> merged node name
  std::map<std::string, int> genus_of;             ///< node -> genus
  std::vector<std::pair<std::string, std::string>> merged;   ///< distinct node edges, no loops
  std::vector<std::pair<std::string, std::string>> reduced;  ///< transitive reduction of merged
};

InclusionGraph inclusion_graph(const std::vector<FamilyFixture>& fixtures);

enum class Format { json, tsv, dot };
Format parse_format(const std::string& s);

std::string emit_report(const Report& r, Format f);
std::string emit_analysis(const FamilyAnalysis& a, Format f);
std::string emit_inclusions(const InclusionGraph& g, Format f);

}  // namespace shimura
