#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "shimura/scan.hpp"
#include "test_util.hpp"

using namespace shimura;

namespace {

ScanConfig config(int jobs) {
  ScanConfig cfg;
  cfg.catalog = testutil::data_path("catalog.txt");
  cfg.fixtures = testutil::data_path("fixtures.json");
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

TEST_CASE("scan output does not depend on the thread count") {
  auto one = run_scan(config(1), testutil::catalog());
  auto many = run_scan(config(4), testutil::catalog());
  CHECK(emit_report(one, Format::json) == emit_report(many, Format::json));
  CHECK(emit_report(one, Format::tsv) == emit_report(many, Format::tsv));
}

TEST_CASE("tsv rows") {
  auto cfg = config(2);
  cfg.gprimes = {1};
  auto tsv = emit_report(run_scan(cfg, testutil::catalog()), Format::tsv);
  CHECK(tsv.find("\n1\tZ/3\t4\t3\t3\tSTAR\t") != std::string::npos);
  CHECK(tsv.find("\n1\tQ8\t3\t1\t1\tSTAR\t") != std::string::npos);
  CHECK_THROWS(emit_report(run_scan(cfg, testutil::catalog()), Format::dot));
}

TEST_CASE("json report") {
  auto cfg = config(2);
  cfg.gprimes = {2};
  auto j = nlohmann::json::parse(emit_report(run_scan(cfg, testutil::catalog()), Format::json));
  CHECK(j["schema"] == "shimura-report/1");
  CHECK(j["families"].empty());
}

TEST_CASE("a lower genus ceiling is marked and shrinks the scan") {
  auto cfg = config(2);
  cfg.gprimes = {1};
  cfg.gmax_override = 3;
  auto r = run_scan(cfg, testutil::catalog());
  REQUIRE(r.sections.size() == 1);
  CHECK(r.sections[0].bounds.overridden);
  for (const auto& row : r.sections[0].rows) CHECK(row.genus <= 3);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("tsv") == Format::tsv);
  CHECK(parse_format("dot") == Format::dot);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("family analysis passes its own checks") {
  for (const auto& f : testutil::fixtures()) {
    auto a = analyze_family(f, testutil::fixtures());
    for (const auto& c : a.checks) CHECK_MESSAGE(c.ok, f.label << ": " << c.what << " expected " << c.expected << " got " << c.actual);
    auto j = nlohmann::json::parse(emit_analysis(a, Format::json));
    CHECK(j.contains("characters"));
  }
}

TEST_CASE("inclusion graph merges aliases") {
  auto g = inclusion_graph(testutil::fixtures());
  CHECK(g.node_of.at("(34)") == g.node_of.at("(5e)"));
  CHECK(g.node_of.at("(31)") == g.node_of.at("(3e)"));
  CHECK(g.node_of.at("(9)") != g.node_of.at("(22)"));
  for (const auto& e : g.reduced) CHECK(std::find(g.merged.begin(), g.merged.end(), e) != g.merged.end());
  auto dot = emit_inclusions(g, Format::dot);
  CHECK(dot.find("digraph") != std::string::npos);
}
