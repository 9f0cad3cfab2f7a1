// Command-line front end: scan, analyze, inclusions, selftest.
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iostream>

#include "shimura/catalog.hpp"
#include "shimura/errors.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/scan.hpp"

#ifndef SHIMURA_DEFAULT_DATA_DIR
#define SHIMURA_DEFAULT_DATA_DIR "data"
#endif

using namespace shimura;

namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitDefect = 3;

// Oracle checks that need nothing beyond the catalog and fixtures.
int selftest(const GroupCatalog& catalog, const std::vector<FamilyFixture>& fixtures) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    failures += !ok;
  };
  for (const auto* g : catalog.groups()) {
    auto t = character_table(*g);
    int sum = 0;
    bool orth = true;
    for (int a = 0; a < t.size(); ++a) {
      sum += t.degree(a) * t.degree(a);
      for (int b = 0; b < t.size(); ++b)
        orth = orth && inner_product(t, t.character(a), t.character(b)) == Cyclotomic(t.conductor(), a == b ? 1 : 0);
    }
    report(orth && sum == g->order() && t.size() == g->class_count(), "character table " + g->id().to_string() + " " + g->name());
  }
  for (const auto& f : fixtures) {
    auto a = analyze_family(f, fixtures);
    report(a.all_ok(), "fixture " + f.label);
    for (const auto& c : a.checks)
      if (!c.ok) std::cout << "     " << c.what << ": expected " << c.expected << ", got " << c.actual << "\n";
  }
  std::cout << (failures ? "selftest FAILED: " + std::to_string(failures) + " failures" : std::string("selftest passed")) << "\n";
  return failures ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of Galois covers satisfying N = 3g'-3+r"};
  app.require_subcommand(1);
  std::string catalog_path = std::string(SHIMURA_DEFAULT_DATA_DIR) + "/catalog.txt";
  std::string fixtures_path = std::string(SHIMURA_DEFAULT_DATA_DIR) + "/fixtures.json";
  std::string format = "json";
  app.add_option("--catalog", catalog_path, "group catalog file");
  app.add_option("--fixtures", fixtures_path, "family fixtures file");
  app.add_option("--format", format, "json, tsv or dot")->check(CLI::IsMember({"json", "tsv", "dot"}));

  ScanConfig cfg;
  std::vector<int> gprimes;
  auto* scan = app.add_subcommand("scan", "enumerate passports and test the condition");
  scan->add_option("--gprime", gprimes, "base genera to scan (default 1 2 3)")->check(CLI::Range(1, 3));
  scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  int gmax = 0;
  scan->add_option("--gmax-override", gmax, "replace the genus ceiling 6g'+1 (watermarks the report)")
      ->check(CLI::PositiveNumber);

  std::string label;
  auto* analyze = app.add_subcommand("analyze", "analyze one named family");
  analyze->add_option("label", label, "family label, e.g. (34)")->required();

  app.add_subcommand("inclusions", "inclusion edges between the named families");
  app.add_subcommand("selftest", "run the built-in oracle checks");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto catalog = load_catalog(catalog_path);
    const Format fmt = parse_format(format);
    if (scan->parsed()) {
      cfg.catalog = catalog_path;
      if (!gprimes.empty()) cfg.gprimes = gprimes;
      if (gmax > 0) cfg.gmax_override = gmax;
      auto start = std::chrono::steady_clock::now();
      auto report = run_scan(cfg, catalog);
      std::cout << emit_report(report, fmt);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      std::cerr << "scan finished in " << std::round(dt.count() * 100) / 100 << " s\n";
      return 0;
    }
    const auto fixtures = load_family_fixtures(fixtures_path, catalog);
    if (analyze->parsed()) {
      const FamilyFixture* f = find_fixture(fixtures, label);
      if (!f) {
        std::cerr << "unknown family " << label << "\n";
        return 1;
      }
      auto a = analyze_family(*f, fixtures);
      std::cout << emit_analysis(a, fmt);
      for (const auto& c : a.checks)
        if (!c.ok) std::cerr << f->label << " " << c.what << ": expected " << c.expected << ", got " << c.actual << "\n";
      return a.all_ok() ? 0 : kExitMismatch;
    }
    if (app.got_subcommand("inclusions")) {
      std::cout << emit_inclusions(inclusion_graph(fixtures), fmt);
      return 0;
    }
    return selftest(catalog, fixtures);
  } catch (const IntegralityDefect& err) {
    std::cerr << "integrality defect: " << err.what() << "\n";
    return kExitDefect;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
