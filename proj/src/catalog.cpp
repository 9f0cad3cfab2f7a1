#include "shimura/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace shimura {

namespace {

constexpr std::array<int, 25> kCensus = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                         1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
  return s;
}

}  // namespace

int small_group_count(int order) {
  if (order < 1 || order >= static_cast<int>(kCensus.size())) return -1;
  return kCensus[order];
}

const PermGroup* GroupCatalog::find(GroupId id) const {
  auto it = by_order_.find(id.order);
  if (it == by_order_.end()) return nullptr;
  for (const auto& g : it->second)
    if (g.id() == id) return &g;
  return nullptr;
}

const PermGroup& GroupCatalog::get(GroupId id) const {
  if (const PermGroup* g = find(id)) return *g;
  throw CatalogError("group " + id.to_string() + " is not in the catalog");
}

std::vector<const PermGroup*> GroupCatalog::groups() const {
  std::vector<const PermGroup*> out;
  for (const auto& [order, list] : by_order_)
    for (const auto& g : list) out.push_back(&g);
  return out;
}

bool GroupCatalog::covers_orders_up_to(int max_order) const {
  for (int n = 2; n <= max_order; ++n)
    if (!by_order_.contains(n)) return false;
  return true;
}

GroupCatalog parse_catalog(std::istream& in, const std::string& source) {
  GroupCatalog cat;
  cat.provenance_ = source;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
    std::string name;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      name = trim(line.substr(hash + 1));
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ';');) fields.push_back(trim(f));
    std::istringstream head(fields.front());
    int order = 0, index = 0, degree = 0;
    if (!(head >> order >> index >> degree) || order < 1 || index < 1 || degree < 1)
      throw CatalogError(where() + "expected 'order index degree'");
    std::string rest;
    if (head >> rest) throw CatalogError(where() + "unexpected token '" + rest + "'");
    if (fields.size() < 2 && order > 1) throw CatalogError(where() + "no generators");

    std::vector<Permutation> gens;
    try {
      for (std::size_t i = 1; i < fields.size(); ++i) gens.push_back(Permutation::parse(fields[i], degree));
    } catch (const std::invalid_argument& e) {
      throw CatalogError(where() + e.what());
    }
    GroupId id{order, index};
    if (cat.find(id)) throw CatalogError(where() + "duplicate group " + id.to_string());
    if (name.empty()) name = "G" + id.to_string();
    PermGroup g = [&] {
      try {
        return PermGroup::from_generators(id, name, degree, std::move(gens));
      } catch (const std::invalid_argument& e) {
        throw CatalogError(where() + e.what());
      }
    }();
    if (g.order() != order)
      throw CatalogError(where() + "generators of " + id.to_string() + " generate a group of order " +
                         std::to_string(g.order()));
    cat.by_order_[order].push_back(std::move(g));
  }
  for (auto& [order, list] : cat.by_order_) {
    std::sort(list.begin(), list.end(), [](const PermGroup& a, const PermGroup& b) { return a.id() < b.id(); });
    const int want = small_group_count(order);
    if (want >= 0 && static_cast<int>(list.size()) != want)
      throw CatalogError(source + ": order " + std::to_string(order) + " has " + std::to_string(list.size()) +
                         " groups, census says " + std::to_string(want));
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i].id().index != static_cast<int>(i) + 1)
        throw CatalogError(source + ": order " + std::to_string(order) + " indices are not 1.." +
                           std::to_string(list.size()));
  }
  return cat;
}

GroupCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string());
  return parse_catalog(in, path.string());
}

}  // namespace shimura
