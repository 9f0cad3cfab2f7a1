#include "shimura/group.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace shimura {

int set_size(ElementSet set) { return std::popcount(set); }

std::vector<Element> set_elements(ElementSet set) {
  std::vector<Element> out;
  for (Element x = 0; set; ++x, set >>= 1)
    if (set & 1u) out.push_back(x);
  return out;
}

std::string GroupId::to_string() const { return std::to_string(order) + "," + std::to_string(index); }

PermGroup PermGroup::from_generators(GroupId id, std::string name, int degree,
                                     std::vector<Permutation> generators) {
  PermGroup g;
  g.id_ = id;
  g.name_ = std::move(name);
  g.degree_ = degree;
  for (const auto& p : generators)
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch in group " + id.to_string());
  g.generator_perms_ = std::move(generators);

  // breadth-first closure
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& s : g.generator_perms_) {
        Permutation b = a * s;
        if (seen.insert(b).second) {
          if (static_cast<int>(seen.size()) > kMaxGroupOrder)
            throw std::invalid_argument("group " + id.to_string() + " exceeds the supported order");
          next.push_back(std::move(b));
        }
      }
    frontier = std::move(next);
  }
  g.elements_.assign(seen.begin(), seen.end());
  const int n = g.order();

  std::map<Permutation, Element> index;
  for (int i = 0; i < n; ++i) index.emplace(g.elements_[i], i);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a * n + b] = index.at(g.elements_[a] * g.elements_[b]);
  g.inverse_.resize(n);
  g.orders_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inverse_[a] = b;
    int k = 1;
    for (Element y = a; y != 0; y = g.mul(y, a)) ++k;
    g.orders_[a] = k;
    g.exponent_ = std::lcm(g.exponent_, g.orders_[a]);
  }
  for (const auto& s : g.generator_perms_) g.generators_.push_back(index.at(s));
  for (int a = 0; a < n && g.abelian_; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }

  g.classes_ = conjugacy_classes(g);
  g.class_of_.assign(n, -1);
  for (int c = 0; c < g.class_count(); ++c)
    for (Element x : set_elements(g.classes_[c].members)) g.class_of_[x] = c;
  return g;
}

std::optional<Element> PermGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

Element PermGroup::pow(Element a, int k) const {
  const int m = orders_[a];
  k %= m;
  if (k < 0) k += m;
  Element r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

ElementSet PermGroup::closure(ElementSet gens) const {
  auto list = set_elements(gens);
  return closure(std::span<const Element>(list));
}

ElementSet PermGroup::closure(std::span<const Element> gens) const {
  ElementSet set = singleton(0);
  Element stack[kMaxGroupOrder];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    Element a = stack[--top];
    for (Element s : gens) {
      Element b = mul(a, s);
      if (!contains(set, b)) {
        set |= singleton(b);
        stack[top++] = b;
      }
    }
  }
  return set;
}

int PermGroup::power_class(int cls, int k) const { return class_of(pow(classes_[cls].representative, k)); }

std::vector<Element> class_members(const PermGroup& g, int cls) { return set_elements(g.classes()[cls].members); }

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  const int n = g.order();
  std::vector<ConjugacyClass> out;
  ElementSet done = 0;
  for (Element x = 0; x < n; ++x) {
    if (contains(done, x)) continue;
    ConjugacyClass c;
    c.representative = x;
    c.element_order = g.element_order(x);
    for (Element y = 0; y < n; ++y) c.members |= singleton(g.conjugate(x, y));
    c.size = set_size(c.members);
    done |= c.members;
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(a.element_order, a.size, a.representative) < std::tie(b.element_order, b.size, b.representative);
  });
  return out;
}

namespace {

std::vector<Element> greedy_generators(const PermGroup& g, ElementSet within) {
  auto pool = set_elements(within);
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  ElementSet cur = singleton(0);
  for (Element x : pool) {
    if (cur == within) break;
    if (contains(cur, x)) continue;
    gens.push_back(x);
    cur = g.closure(std::span<const Element>(gens));
  }
  return gens;
}

ElementSet conjugate_set(const PermGroup& g, ElementSet h, Element by) {
  ElementSet out = 0;
  for (Element x : set_elements(h)) out |= singleton(g.conjugate(x, by));
  return out;
}

// Word structure of a group relative to a generating list: each element is
// parent * gens[via].
struct WordTree {
  std::vector<Element> order;  // BFS order, identity first
  std::vector<Element> parent;
  std::vector<int> via;
};

WordTree word_tree(const PermGroup& g, const std::vector<Element>& gens) {
  WordTree t;
  t.parent.assign(g.order(), -1);
  t.via.assign(g.order(), -1);
  t.order.push_back(0);
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    Element a = t.order[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element b = g.mul(a, gens[k]);
      if (!seen[b]) {
        seen[b] = true;
        t.parent[b] = a;
        t.via[b] = static_cast<int>(k);
        t.order.push_back(b);
      }
    }
  }
  return t;
}

// Enumerates homomorphisms from `src` (through generators `gens`) into
// `dst` whose generator images have matching orders and lie in `target`.
// Calls `accept` with the element map; stops when it returns false.
void for_each_hom(const PermGroup& src, const std::vector<Element>& gens, const PermGroup& dst, ElementSet target,
                  const std::function<bool(const std::vector<Element>&)>& accept) {
  const WordTree tree = word_tree(src, gens);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element y : set_elements(target))
      if (dst.element_order(y) == src.element_order(gens[k])) candidates[k].push_back(y);
  std::vector<Element> images(gens.size());
  std::vector<Element> map(src.order());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      map[0] = dst.identity();
      for (std::size_t i = 1; i < tree.order.size(); ++i) {
        Element b = tree.order[i];
        map[b] = dst.mul(map[tree.parent[b]], images[tree.via[b]]);
      }
      for (Element x = 0; x < src.order(); ++x)
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (map[src.mul(x, gens[j])] != dst.mul(map[x], images[j])) return true;
      return accept(map);
    }
    for (Element y : candidates[k]) {
      images[k] = y;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

std::vector<Element> small_generating_set(const PermGroup& g) { return greedy_generators(g, g.all()); }

std::vector<ElementSet> all_subgroups(const PermGroup& g) {
  std::set<ElementSet> cyclic;
  for (Element x = 0; x < g.order(); ++x) {
    Element one[1] = {x};
    cyclic.insert(g.closure(std::span<const Element>(one)));
  }
  std::set<ElementSet> found(cyclic.begin(), cyclic.end());
  std::vector<ElementSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet h : frontier)
      for (ElementSet z : cyclic) {
        if ((z & ~h) == 0) continue;
        ElementSet j = g.closure(h | z);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return std::pair(set_size(a), a) < std::pair(set_size(b), b);
  });
  return out;
}

std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const PermGroup& g) {
  std::map<ElementSet, std::set<ElementSet>> classes;  // canonical (min) mask -> conjugates
  for (ElementSet h : all_subgroups(g)) {
    std::set<ElementSet> conj;
    for (Element y = 0; y < g.order(); ++y) conj.insert(conjugate_set(g, h, y));
    classes.emplace(*conj.begin(), std::move(conj));
  }
  std::vector<SubgroupRecord> out;
  for (const auto& [rep, conj] : classes) {
    SubgroupRecord r;
    r.elements = rep;
    r.order = set_size(rep);
    r.index = g.order() / r.order;
    r.class_size = static_cast<int>(conj.size());
    r.normal = r.class_size == 1;
    r.generators = greedy_generators(g, rep);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    return std::pair(a.order, a.elements) < std::pair(b.order, b.elements);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].conjugacy_id = static_cast<int>(i);
  return out;
}

std::vector<Automorphism> automorphism_group(const PermGroup& g) {
  const auto gens = small_generating_set(g);
  std::vector<Automorphism> out;
  for_each_hom(g, gens, g, g.all(), [&](const std::vector<Element>& map) {
    ElementSet image = 0;
    for (Element y : map) image |= singleton(y);
    if (image == g.all()) out.push_back(map);
    return true;
  });
  std::sort(out.begin(), out.end());  // identity map is lexicographically first
  return out;
}

std::vector<std::vector<int>> class_actions(const PermGroup& g, const std::vector<Automorphism>& auts) {
  std::set<std::vector<int>> actions;
  for (const auto& a : auts) {
    std::vector<int> act(g.class_count());
    for (int c = 0; c < g.class_count(); ++c) act[c] = g.class_of(a[g.classes()[c].representative]);
    actions.insert(std::move(act));
  }
  return {actions.begin(), actions.end()};
}

std::vector<std::vector<Element>> isomorphisms_onto(const PermGroup& g, ElementSet h, const PermGroup& k,
                                                   std::size_t limit) {
  std::vector<std::vector<Element>> out;
  if (set_size(h) != k.order()) return out;
  for_each_hom(k, small_generating_set(k), g, h, [&](const std::vector<Element>& map) {
    ElementSet image = 0;
    for (Element y : map) image |= singleton(y);
    if (image == h) out.push_back(map);
    return out.size() < limit;
  });
  return out;
}

bool subgroup_isomorphic(const PermGroup& g, ElementSet h, const PermGroup& k) {
  return !isomorphisms_onto(g, h, k, 1).empty();
}

}  // namespace shimura
