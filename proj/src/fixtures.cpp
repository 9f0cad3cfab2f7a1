#include "shimura/fixtures.hpp"

#include <fstream>
#include <json.hpp>

namespace shimura {

using json = nlohmann::json;

Element evaluate_word(const PermGroup& g, const std::map<std::string, Element>& env, std::string_view word) {
  Element acc = g.identity();
  std::string w(word);
  std::erase(w, ' ');
  if (w == "1" || w == "e" || w.empty()) return acc;
  std::size_t pos = 0;
  while (pos <= w.size()) {
    std::size_t end = w.find('*', pos);
    if (end == std::string::npos) end = w.size();
    std::string tok = w.substr(pos, end - pos);
    std::string name = tok;
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw FixtureError("bad exponent in word '" + w + "'");
      }
    }
    auto it = env.find(name);
    if (it == env.end()) throw FixtureError("unknown element '" + name + "' in word '" + w + "'");
    acc = g.mul(acc, g.pow(it->second, exp));
    pos = end + 1;
  }
  return acc;
}

namespace {

FamilyFixture parse_family(const json& j, const GroupCatalog& catalog) {
  FamilyFixture f;
  f.label = j.at("label").get<std::string>();
  try {
    f.aliases = j.value("aliases", std::vector<std::string>{});
    auto gid = j.at("group").get<std::vector<int>>();
    if (gid.size() != 2) throw FixtureError("group must be [order, index]");
    f.group = catalog.find({gid[0], gid[1]});
    if (!f.group) throw FixtureError("group " + std::to_string(gid[0]) + "," + std::to_string(gid[1]) + " not in catalog");
    const PermGroup& g = *f.group;
    for (const auto& [name, cyc] : j.at("elements").items()) {
      auto p = Permutation::parse(cyc.get<std::string>(), g.degree());
      auto x = g.find(p);
      if (!x) throw FixtureError("element " + name + " = " + cyc.get<std::string>() + " is not in the group");
      f.elements[name] = *x;
    }
    f.relations = j.value("relations", std::vector<std::string>{});
    for (const auto& rel : f.relations)
      if (evaluate_word(g, f.elements, rel) != g.identity()) throw FixtureError("relation " + rel + " fails");

    f.vector.group = g.id();
    f.vector.gprime = j.at("gprime").get<int>();
    for (const auto& pair : j.value("hyperbolic", json::array())) {
      auto ab = pair.get<std::vector<std::string>>();
      if (ab.size() != 2) throw FixtureError("hyperbolic entries are pairs");
      f.vector.hyperbolic.emplace_back(evaluate_word(g, f.elements, ab[0]), evaluate_word(g, f.elements, ab[1]));
    }
    for (const auto& w : j.at("branch")) f.vector.branch.push_back(evaluate_word(g, f.elements, w.get<std::string>()));
    if (static_cast<int>(f.vector.hyperbolic.size()) != f.vector.gprime)
      throw FixtureError("number of hyperbolic pairs differs from g'");
    auto verdict = validate_generating_vector(g, f.vector);
    if (verdict != VectorVerdict::ok) throw FixtureError("generating vector: " + to_string(verdict));

    const auto& e = j.at("expected");
    f.expected.genus = e.at("genus").get<int>();
    f.expected.r = e.at("r").get<int>();
    f.expected.m = e.at("m").get<std::vector<int>>();
    f.expected.N = e.at("N").get<int>();
    f.expected.star = e.at("star").get<bool>();
    if (e.contains("fibration")) f.expected.fibration = e["fibration"].get<std::array<int, 4>>();
    if (e.contains("h0")) {
      std::vector<std::pair<int, int>> h0;
      for (const auto& p : e["h0"]) h0.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      f.expected.h0 = h0;
    }
    if (e.contains("blocks")) {
      std::vector<std::tuple<int, int, bool>> blocks;
      for (const auto& b : e["blocks"]) blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<bool>());
      f.expected.blocks = blocks;
    }
    for (const auto& w : j.value("witnesses", json::array())) {
      FixtureWitness fw;
      fw.target = w.at("target").get<std::string>();
      fw.words = w.at("subgroup").get<std::vector<std::string>>();
      std::vector<Element> gens;
      for (const auto& word : fw.words) gens.push_back(evaluate_word(g, f.elements, word));
      fw.subgroup = g.closure(gens);
      if (w.contains("membership")) fw.membership = w["membership"].get<std::string>();
      if (w.contains("full")) fw.full = w["full"].get<bool>();
      f.witnesses.push_back(std::move(fw));
    }
    f.notes = j.value("notes", std::string{});
  } catch (const FixtureError& err) {
    throw FixtureError("fixture " + f.label + ": " + err.what());
  } catch (const std::exception& err) {
    throw FixtureError("fixture " + f.label + ": " + err.what());
  }
  return f;
}

}  // namespace

std::vector<FamilyFixture> load_family_fixtures(const std::filesystem::path& path, const GroupCatalog& catalog) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixtures file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& err) {
    throw FixtureError("fixtures file " + path.string() + ": " + err.what());
  }
  if (doc.value("schema", std::string{}) != "shimura-fixtures/1")
    throw FixtureError("fixtures file " + path.string() + ": unknown schema");
  std::vector<FamilyFixture> out;
  for (const auto& j : doc.at("families")) out.push_back(parse_family(j, catalog));
  return out;
}

const FamilyFixture* find_fixture(const std::vector<FamilyFixture>& fixtures, std::string_view label) {
  for (const auto& f : fixtures)
    if (f.label == label) return &f;
  for (const auto& f : fixtures)
    for (const auto& a : f.aliases)
      if (a == label) return &f;
  return nullptr;
}

}  // namespace shimura
