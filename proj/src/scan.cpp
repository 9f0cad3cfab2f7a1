#include "shimura/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "shimura/errors.hpp"

namespace shimura {

using ojson = nlohmann::ordered_json;

namespace {

std::string group_key(const PermGroup& g) { return g.id().to_string() + " " + g.name(); }

std::string classes_string(const std::vector<int>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

}  // namespace

PassportRow analyze_passport(const PermGroup& g, const CharacterTable& t, const EnumeratedCover& e) {
  PassportRow row;
  row.gprime = e.vector.gprime;
  row.group = g.id();
  row.group_name = g.name();
  row.classes = e.passport.classes;
  row.signature = e.signature;
  row.vector = e.vector;
  row.genus = e.genus;
  try {
    HodgeData h = hodge_data(t, e.vector);
    if (h.genus != e.genus)
      throw IntegralityDefect("Chevalley-Weil total " + std::to_string(h.genus) + " differs from Riemann-Hurwitz genus " +
                              std::to_string(e.genus));
    row.N = h.N;
    row.star = h.star && h.dimM > 0;
    row.dimM = h.dimM;
    row.dimP = h.dimP;
    if (row.star) row.fibration = fibration_dimensions(h);
    row.nu = h.nu;
    for (int chi = 0; chi < t.size(); ++chi) row.degrees.push_back(t.degree(chi));
    auto dec = jacobian_decomposition(h, t);
    row.decomposition = dec.rendering;
    for (const auto& b : dec.blocks) row.moving.push_back(b.moving);
  } catch (const IntegralityDefect& err) {
    throw IntegralityDefect("passport " + group_key(g) + " g'=" + std::to_string(e.vector.gprime) + " classes [" +
                            classes_string(e.passport.classes) + "]: " + err.what());
  }
  return row;
}

namespace {

struct GroupResult {
  std::map<int, ScanSection> by_gprime;  // partial sections
  bool linear_ok = true;
  std::exception_ptr error;
};

GroupResult scan_group(const PermGroup& g, const std::vector<ScanBounds>& bounds) {
  GroupResult res;
  std::optional<CharacterTable> table;
  auto tab = [&]() -> const CharacterTable& {
    if (!table) table = character_table(g);
    return *table;
  };
  if (g.order() <= 12) {
    bool any = false;
    for (int chi = 1; chi < tab().size(); ++chi) any = any || tab().degree(chi) == 1;
    res.linear_ok = any;
  }
  for (const auto& b : bounds) {
    ScanSection& sec = res.by_gprime[b.gprime];
    sec.gprime = b.gprime;
    if (g.order() <= b.max_order) {
      ++sec.groups_scanned;
      for (const auto& e : enumerate_passports(g, b.gprime, b, &sec.stats)) sec.rows.push_back(analyze_passport(g, tab(), e));
    }
    if (g.order() <= b.max_order_etale) {
      ++sec.etale_groups_scanned;
      if (auto v = find_etale_vector(g, b.gprime)) {
        HodgeData h = hodge_data(tab(), *v);
        // unramified: nu = chi(1)(g'-1) for every nontrivial chi
        for (int chi = 1; chi < tab().size(); ++chi)
          if (h.nu[chi] != tab().degree(chi) * (b.gprime - 1))
            throw IntegralityDefect("unramified multiplicity mismatch for " + group_key(g));
        sec.etale.push_back({b.gprime, g.id(), g.name(), h.genus, h.N, h.dimM, h.star});
      }
    }
  }
  return res;
}

}  // namespace

Report run_scan(const ScanConfig& cfg, const GroupCatalog& catalog) {
  Report rep;
  rep.catalog_provenance = catalog.provenance();
  std::vector<ScanBounds> bounds;
  for (int gp : cfg.gprimes) {
    bounds.push_back(cfg.gmax_override ? ScanBounds::with_gmax(gp, *cfg.gmax_override) : ScanBounds::defaults(gp));
    rep.watermarked = rep.watermarked || bounds.back().overridden;
  }
  const auto groups = catalog.groups();
  for (const auto& b : bounds)
    if (std::max(b.max_order, b.max_order_etale) > 24 && !catalog.covers_orders_up_to(24))
      throw std::runtime_error("catalog does not reach the order bound");

  std::vector<GroupResult> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        results[i] = scan_group(*groups[i], bounds);
      } catch (...) {
        results[i].error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  rep.small_groups_have_linear_characters = true;
  for (const auto& b : bounds) {
    ScanSection sec;
    sec.gprime = b.gprime;
    sec.bounds = b;
    rep.sections.push_back(sec);
  }
  for (const auto& res : results) {
    if (res.error) std::rethrow_exception(res.error);
    rep.small_groups_have_linear_characters = rep.small_groups_have_linear_characters && res.linear_ok;
    for (auto& sec : rep.sections) {
      auto it = res.by_gprime.find(sec.gprime);
      if (it == res.by_gprime.end()) continue;
      const auto& part = it->second;
      sec.stats += part.stats;
      sec.groups_scanned += part.groups_scanned;
      sec.etale_groups_scanned += part.etale_groups_scanned;
      sec.rows.insert(sec.rows.end(), part.rows.begin(), part.rows.end());
      sec.etale.insert(sec.etale.end(), part.etale.begin(), part.etale.end());
    }
  }
  for (const auto& sec : rep.sections)
    for (const auto& row : sec.rows) {
      if (!row.star) continue;
      auto same = [&](const FamilyRow& f) {
        return f.gprime == row.gprime && f.group == row.group && f.genus == row.genus && f.r == row.signature.r() &&
               f.N == row.N;
      };
      auto it = std::find_if(rep.families.begin(), rep.families.end(), same);
      if (it != rep.families.end()) ++it->passports;
      else rep.families.push_back({row.gprime, row.group, row.group_name, row.genus, row.signature.r(), row.N, 1});
    }
  std::sort(rep.families.begin(), rep.families.end(), [](const FamilyRow& a, const FamilyRow& b) {
    return std::tie(a.gprime, a.genus, a.group, a.r) < std::tie(b.gprime, b.genus, b.group, b.r);
  });
  return rep;
}

bool FamilyAnalysis::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExpectationCheck& c) { return c.ok; });
}

namespace {

template <class T>
std::string render(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string render(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

template <class T>
void check(std::vector<ExpectationCheck>& out, std::string what, const T& expected, const T& actual) {
  out.push_back({std::move(what), render(expected), render(actual), expected == actual});
}

std::string render_pairs(std::vector<std::pair<int, int>> v) {
  std::sort(v.begin(), v.end());
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
  return s + "]";
}

std::string render_blocks(std::vector<std::tuple<int, int, bool>> v) {
  std::sort(v.begin(), v.end());
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::string("(n=") + std::to_string(std::get<0>(v[i])) + ",dim=" +
         std::to_string(std::get<1>(v[i])) + "," + (std::get<2>(v[i]) ? "moving" : "fixed") + ")";
  return s + "]";
}

}  // namespace

FamilyAnalysis analyze_family(const FamilyFixture& f, const std::vector<FamilyFixture>& all) {
  FamilyAnalysis a;
  a.fixture = &f;
  const PermGroup& g = *f.group;
  const CharacterTable t = character_table(g);
  a.hodge = hodge_data(t, f.vector);
  const HodgeData& h = a.hodge;
  if (h.star && h.gprime >= 1) a.fibration = fibration_dimensions(h);
  a.decomposition = jacobian_decomposition(h, t);

  for (const auto& rec : subgroups_up_to_conjugacy(g)) {
    QuotientInfo q = quotient_signature(g, f.vector, rec.elements);
    int oracle = invariant_h0_dim(t, h.nu, rec.elements);
    if (oracle != q.genus)
      throw IntegralityDefect("quotient genus " + std::to_string(q.genus) + " differs from invariant dimension " +
                              std::to_string(oracle) + " in " + f.label);
    if (q.elliptic()) a.elliptic_quotients.push_back(q);
  }

  std::vector<const FamilyFixture*> supers;
  for (const auto& o : all) supers.push_back(&o);
  a.edges = detect_inclusions(f, supers);

  auto& c = a.checks;
  const auto& e = f.expected;
  check(c, "genus", e.genus, h.genus);
  check(c, "r", e.r, h.r);
  auto m = signature_of(g, f.vector).m;
  auto em = e.m;
  std::sort(m.begin(), m.end());
  std::sort(em.begin(), em.end());
  check(c, "m", em, m);
  check(c, "N", e.N, h.N);
  check(c, "star", e.star, h.star);
  if (e.fibration) {
    std::vector<int> exp(e.fibration->begin(), e.fibration->end());
    std::vector<int> act;
    if (a.fibration) act = {a.fibration->dimM, a.fibration->dimP, a.fibration->prym_fibre, a.fibration->phi_fibre};
    check(c, "fibration", exp, act);
  }
  if (e.h0) {
    std::vector<std::pair<int, int>> act;
    for (int chi = 1; chi < t.size(); ++chi)
      if (h.nu[chi] > 0) act.emplace_back(t.degree(chi), h.nu[chi]);
    check(c, "h0", render_pairs(*e.h0), render_pairs(act));
  }
  if (e.blocks) {
    std::vector<std::tuple<int, int, bool>> act;
    for (const auto& b : a.decomposition.blocks) act.emplace_back(b.exponent, b.factor_dim, b.moving);
    check(c, "blocks", render_blocks(*e.blocks), render_blocks(act));
  }

  for (const auto& w : f.witnesses) {
    const FamilyFixture* sup = find_fixture(all, w.target);
    if (!sup) throw FixtureError("fixture " + f.label + ": unknown witness target " + w.target);
    const CharacterTable ts = character_table(*sup->group);
    HodgeData hs = hodge_data(ts, sup->vector);
    WitnessVerdict v{w, quotient_signature(g, f.vector, w.subgroup), {}};
    v.membership = fibre_membership(t, h, a.decomposition, w.subgroup, hs);
    const std::string tag = "witness " + w.target + " <" + [&] {
      std::string s;
      for (std::size_t i = 0; i < w.words.size(); ++i) s += (i ? "," : "") + w.words[i];
      return s;
    }() + ">";
    bool edge = std::any_of(a.edges.begin(), a.edges.end(), [&](const InclusionEdge& ed) {
      if (ed.super != sup->label) return false;
      // conjugate witnesses are the same edge
      for (Element x = 0; x < g.order(); ++x) {
        ElementSet conj = 0;
        for (Element y : set_elements(w.subgroup)) conj |= singleton(g.conjugate(y, x));
        if (conj == ed.witness) return true;
      }
      return false;
    });
    check(c, tag + " detected", true, edge);
    if (w.membership) check(c, tag + " membership", *w.membership, to_string(v.membership.verdict));
    if (w.full) check(c, tag + " full fibre", *w.full, v.membership.full_fibre);
    a.witnesses.push_back(std::move(v));
  }
  return a;
}

namespace {

int label_number(const std::string& s) {
  int v = 0;
  for (char ch : s)
    if (ch >= '0' && ch <= '9') v = v * 10 + (ch - '0');
  return v;
}

bool label_less(const std::string& a, const std::string& b) {
  bool ea = a.find('e') != std::string::npos;
  bool eb = b.find('e') != std::string::npos;
  if (ea != eb) return ea;
  return std::make_pair(label_number(a), a) < std::make_pair(label_number(b), b);
}

}  // namespace

InclusionGraph inclusion_graph(const std::vector<FamilyFixture>& fixtures) {
  InclusionGraph graph;
  // union of labels linked through aliases
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> root = [&](const std::string& x) -> std::string {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return parent[x] = x;
    return it->second = root(it->second);
  };
  for (const auto& f : fixtures) {
    root(f.label);
    for (const auto& al : f.aliases) parent[root(al)] = root(f.label);
  }
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& [label, _] : parent) members[root(label)].push_back(label);
  std::map<std::string, std::string> name_of_root;
  for (auto& [r, labels] : members) {
    std::sort(labels.begin(), labels.end(), label_less);
    std::string name;
    for (std::size_t i = 0; i < labels.size(); ++i) name += (i ? "=" : "") + labels[i];
    name_of_root[r] = name;
  }
  for (const auto& f : fixtures) {
    graph.node_of[f.label] = name_of_root[root(f.label)];
    graph.genus_of[graph.node_of[f.label]] = f.expected.genus;
  }

  std::vector<const FamilyFixture*> supers;
  for (const auto& f : fixtures) supers.push_back(&f);
  std::set<std::pair<std::string, std::string>> merged;
  for (const auto& f : fixtures)
    for (auto& e : detect_inclusions(f, supers)) {
      auto a = graph.node_of[e.sub];
      auto b = graph.node_of[e.super];
      if (a != b) merged.emplace(a, b);
      graph.edges.push_back(std::move(e));
    }
  graph.merged.assign(merged.begin(), merged.end());

  auto reachable_without = [&](const std::string& from, const std::string& to, std::pair<std::string, std::string> skip) {
    std::set<std::string> seen{from};
    std::vector<std::string> stack{from};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& [p, q] : merged) {
        if (p != x || (p == skip.first && q == skip.second) || seen.count(q)) continue;
        if (q == to) return true;
        seen.insert(q);
        stack.push_back(q);
      }
    }
    return false;
  };
  for (const auto& e : merged)
    if (!reachable_without(e.first, e.second, e)) graph.reduced.push_back(e);
  return graph;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  if (s == "dot") return Format::dot;
  throw std::invalid_argument("unknown format '" + s + "' (json, tsv, dot)");
}

namespace {

ojson to_json(const Signature& s) { return {{"gprime", s.gprime}, {"m", s.m}}; }

ojson to_json(const GroupId& id) { return {id.order, id.index}; }

ojson to_json(const ScanStats& s) {
  return {{"multisets_visited", s.multisets_visited},     {"multisets_pruned_by_genus", s.multisets_pruned},
          {"multisets_non_integral", s.multisets_odd},    {"multisets_non_canonical", s.multisets_non_canonical},
          {"multisets_unrealized", s.multisets_unrealized}, {"tuples_visited", s.tuples_visited},
          {"passports", s.passports}};
}

ojson to_json(const GeneratingVector& v, const PermGroup* g) {
  ojson j;
  auto el = [&](Element x) -> ojson {
    if (g) return g->perm(x).to_cycles();
    return x;
  };
  j["hyperbolic"] = ojson::array();
  for (auto [a, b] : v.hyperbolic) j["hyperbolic"].push_back({el(a), el(b)});
  j["branch"] = ojson::array();
  for (Element x : v.branch) j["branch"].push_back(el(x));
  return j;
}

ojson to_json(const PassportRow& r) {
  ojson j;
  j["group"] = to_json(r.group);
  j["group_name"] = r.group_name;
  j["classes"] = r.classes;
  j["signature"] = to_json(r.signature);
  j["vector"] = to_json(r.vector, nullptr);
  j["genus"] = r.genus;
  j["N"] = r.N;
  j["dimM"] = r.dimM;
  j["dimP"] = r.dimP;
  j["star"] = r.star;
  if (r.fibration)
    j["fibration"] = {{"dimM", r.fibration->dimM},
                      {"dimP", r.fibration->dimP},
                      {"prym_fibre", r.fibration->prym_fibre},
                      {"phi_fibre", r.fibration->phi_fibre}};
  j["nu"] = r.nu;
  j["degrees"] = r.degrees;
  j["decomposition"] = r.decomposition;
  j["moving"] = r.moving;
  return j;
}

ojson to_json(const QuotientInfo& q, const PermGroup& g) {
  std::vector<std::string> els;
  for (Element x : set_elements(q.subgroup)) els.push_back(g.perm(x).to_cycles());
  return {{"order", q.order}, {"index", q.index}, {"genus", q.genus}, {"subgroup", els},
          {"top", to_json(q.top)}, {"bottom", q.bottom}};
}

ojson to_json(const InclusionGraph& gr) {
  ojson j;
  j["edges"] = ojson::array();
  for (const auto& e : gr.edges)
    j["edges"].push_back({{"sub", e.sub}, {"super", e.super}, {"witness_order", e.evidence.order},
                          {"quotient", to_json(e.evidence.top)}});
  j["nodes"] = ojson::object();
  for (const auto& [n, g] : gr.genus_of) j["nodes"][n] = g;
  j["merged"] = ojson::array();
  for (const auto& [a, b] : gr.merged) j["merged"].push_back({a, b});
  j["diagram"] = ojson::array();
  for (const auto& [a, b] : gr.reduced) j["diagram"].push_back({a, b});
  return j;
}

std::string dot_of(const InclusionGraph& gr) {
  std::ostringstream os;
  std::set<int> genera;
  for (const auto& [n, g] : gr.genus_of) genera.insert(g);
  for (int genus : genera) {
    os << "digraph genus" << genus << " {\n  label=\"genus " << genus << "\";\n  rankdir=BT;\n";
    for (const auto& [n, g] : gr.genus_of)
      if (g == genus) os << "  \"" << n << "\";\n";
    for (const auto& [a, b] : gr.reduced)
      if (gr.genus_of.at(a) == genus) os << "  \"" << a << "\" -> \"" << b << "\";\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const Report& r, Format f) {
  if (f == Format::dot) throw std::invalid_argument("dot output is produced by the inclusions verb");
  if (f == Format::tsv) {
    std::ostringstream os;
    if (r.watermarked) os << "# NON-DEFAULT BOUNDS: genus ceiling overridden\n";
    os << "# gprime\tgroup\tgenus\tr\tN\tverdict\tgroup_id\tclasses\tsignature\tdecomposition\n";
    for (const auto& sec : r.sections)
      for (const auto& row : sec.rows)
        os << row.gprime << '\t' << row.group_name << '\t' << row.genus << '\t' << row.signature.r() << '\t' << row.N
           << '\t' << (row.star ? "STAR" : "-") << '\t' << row.group.to_string() << '\t' << classes_string(row.classes)
           << '\t' << row.signature.to_string() << '\t' << row.decomposition << '\n';
    return os.str();
  }
  ojson j;
  j["schema"] = "shimura-report/1";
  j["catalog"] = r.catalog_provenance;
  j["default_bounds"] = !r.watermarked;
  if (r.watermarked) j["watermark"] = "NON-DEFAULT BOUNDS: genus ceiling overridden";
  j["small_groups_have_linear_characters"] = r.small_groups_have_linear_characters;
  j["families"] = ojson::array();
  for (const auto& fam : r.families)
    j["families"].push_back({{"gprime", fam.gprime}, {"group", to_json(fam.group)}, {"group_name", fam.group_name},
                             {"genus", fam.genus}, {"r", fam.r}, {"N", fam.N}, {"passports", fam.passports}});
  j["sections"] = ojson::array();
  for (const auto& sec : r.sections) {
    ojson s;
    s["gprime"] = sec.gprime;
    s["bounds"] = {{"gmax", sec.bounds.gmax},
                   {"max_order", sec.bounds.max_order},
                   {"max_order_etale", sec.bounds.max_order_etale},
                   {"overridden", sec.bounds.overridden}};
    s["groups_scanned"] = sec.groups_scanned;
    s["etale_groups_scanned"] = sec.etale_groups_scanned;
    s["stats"] = to_json(sec.stats);
    int star = 0;
    for (const auto& row : sec.rows) star += row.star;
    s["star_rows"] = star;
    s["rows"] = ojson::array();
    for (const auto& row : sec.rows) s["rows"].push_back(to_json(row));
    s["etale"] = ojson::array();
    for (const auto& e : sec.etale)
      s["etale"].push_back({{"group", to_json(e.group)}, {"group_name", e.group_name}, {"genus", e.genus},
                            {"N", e.N}, {"dimM", e.dimM}, {"star", e.star}});
    j["sections"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

std::string emit_analysis(const FamilyAnalysis& a, Format f) {
  const FamilyFixture& fx = *a.fixture;
  const PermGroup& g = *fx.group;
  if (f == Format::dot) throw std::invalid_argument("dot output is produced by the inclusions verb");
  if (f == Format::tsv) {
    std::ostringstream os;
    os << "# check\texpected\tactual\tok\n";
    for (const auto& c : a.checks) os << c.what << '\t' << c.expected << '\t' << c.actual << '\t' << (c.ok ? "ok" : "MISMATCH") << '\n';
    return os.str();
  }
  const CharacterTable t = character_table(g);
  ojson j;
  j["label"] = fx.label;
  j["aliases"] = fx.aliases;
  j["group"] = to_json(g.id());
  j["group_name"] = g.name();
  j["vector"] = to_json(fx.vector, &g);
  j["signature"] = to_json(signature_of(g, fx.vector));
  const auto& h = a.hodge;
  j["genus"] = h.genus;
  j["N"] = h.N;
  j["dimM"] = h.dimM;
  j["star"] = h.star;
  j["dimP"] = h.dimP;
  if (a.fibration)
    j["fibration"] = {{"dimM", a.fibration->dimM},
                      {"dimP", a.fibration->dimP},
                      {"prym_fibre", a.fibration->prym_fibre},
                      {"phi_fibre", a.fibration->phi_fibre}};
  j["characters"] = ojson::array();
  for (int chi = 0; chi < t.size(); ++chi) {
    ojson c;
    c["degree"] = t.degree(chi);
    c["indicator"] = t.indicator(chi);
    c["orbit"] = t.orbit_of(chi);
    c["nu"] = h.nu[chi];
    c["values"] = ojson::array();
    for (int k = 0; k < t.size(); ++k) {
      const auto& v = t.value(chi, k);
      std::vector<std::string> coeffs;
      for (const auto& q : v.coefficients()) coeffs.push_back(render(q));
      auto z = v.to_complex();
      std::ostringstream approx;
      approx.setf(std::ios::fixed);
      approx.precision(4);
      approx << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      c["values"].push_back({{"coefficients", coeffs}, {"approx", approx.str()}});
    }
    j["characters"].push_back(std::move(c));
  }
  j["decomposition"] = a.decomposition.rendering;
  j["blocks"] = ojson::array();
  for (const auto& b : a.decomposition.blocks)
    j["blocks"].push_back({{"orbit", b.orbit}, {"degree", b.degree}, {"schur", b.schur}, {"exponent", b.exponent},
                           {"h0_dim", b.h0_dim}, {"factor_dim", b.factor_dim}, {"contribution", b.contribution},
                           {"moving", b.moving}});
  j["elliptic_quotients"] = ojson::array();
  for (const auto& q : a.elliptic_quotients) j["elliptic_quotients"].push_back(to_json(q, g));
  j["edges"] = ojson::array();
  for (const auto& e : a.edges) j["edges"].push_back({{"super", e.super}, {"quotient", to_json(e.evidence, g)}});
  j["witnesses"] = ojson::array();
  for (const auto& w : a.witnesses)
    j["witnesses"].push_back({{"target", w.witness.target},
                              {"subgroup", w.witness.words},
                              {"quotient", to_json(w.quotient, g)},
                              {"membership", to_string(w.membership.verdict)},
                              {"e_blocks", w.membership.e_blocks},
                              {"prym_blocks", w.membership.prym_blocks},
                              {"straddling", w.membership.straddling},
                              {"full_fibre", w.membership.full_fibre},
                              {"family_dim", w.membership.sub_dim},
                              {"fibre_dim", w.membership.super_fibre_dim}});
  j["checks"] = ojson::array();
  for (const auto& c : a.checks)
    j["checks"].push_back({{"what", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  j["all_ok"] = a.all_ok();
  if (!fx.notes.empty()) j["notes"] = fx.notes;
  return j.dump(2) + "\n";
}

std::string emit_inclusions(const InclusionGraph& g, Format f) {
  if (f == Format::dot) return dot_of(g);
  if (f == Format::tsv) {
    std::ostringstream os;
    os << "# sub\tsuper\twitness_order\tquotient\n";
    for (const auto& e : g.edges)
      os << e.sub << '\t' << e.super << '\t' << e.evidence.order << '\t' << e.evidence.top.to_string() << '\n';
    return os.str();
  }
  return to_json(g).dump(2) + "\n";
}

}  // namespace shimura
