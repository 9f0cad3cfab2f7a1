#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shimura/permutation.hpp"

namespace shimura {

/// Index of an element in its group's canonical element list. 0 is the identity.
using Element = int;

/// Subset of a group as a bitmask over element indices (groups of order <= 32).
using ElementSet = std::uint32_t;

inline constexpr int kMaxGroupOrder = 32;

inline bool contains(ElementSet set, Element x) { return (set >> x) & 1u; }
inline ElementSet singleton(Element x) { return ElementSet{1} << x; }
int set_size(ElementSet set);
std::vector<Element> set_elements(ElementSet set);

/// Catalog key: (order, index) in the small-group numbering.
struct GroupId {
  int order = 0;
  int index = 0;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
  std::string to_string() const;
};

struct ConjugacyClass {
  Element representative = 0;
  ElementSet members = 0;
  int size = 0;
  int element_order = 1;
};

/// A finite group given by permutation generators. Elements are enumerated
/// once and sorted lexicographically by their image arrays, so the identity
/// is element 0 and ids are reproducible. Immutable after construction.
class PermGroup {
 public:
  static PermGroup from_generators(GroupId id, std::string name, int degree,
                                   std::vector<Permutation> generators);

  const GroupId& id() const { return id_; }
  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::vector<Permutation>& generator_perms() const { return generator_perms_; }
  const std::vector<Element>& generators() const { return generators_; }
  const Permutation& perm(Element x) const { return elements_[x]; }
  std::optional<Element> find(const Permutation& p) const;

  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, int k) const;
  Element conjugate(Element x, Element by) const { return mul(mul(by, x), inv(by)); }
  Element commutator(Element a, Element b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int element_order(Element a) const { return orders_[a]; }

  ElementSet all() const { return order() == 32 ? ~ElementSet{0} : (ElementSet{1} << order()) - 1; }
  /// Subgroup generated by the given elements.
  ElementSet closure(std::span<const Element> gens) const;
  ElementSet closure(ElementSet gens) const;
  bool generates(std::span<const Element> gens) const { return closure(gens) == all(); }

  /// Classes ordered by element order, then size, then minimal element index.
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(Element x) const { return class_of_[x]; }
  /// Class containing g^k for g in class `cls`.
  int power_class(int cls, int k) const;
  /// Class of inverses.
  int inverse_class(int cls) const { return class_of(inv(classes_[cls].representative)); }

 private:
  GroupId id_;
  std::string name_;
  int degree_ = 0;
  int exponent_ = 1;
  bool abelian_ = true;
  std::vector<Permutation> generator_perms_;
  std::vector<Element> generators_;
  std::vector<Permutation> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<int> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

/// Element list of a conjugacy class (ascending).
std::vector<Element> class_members(const PermGroup& g, int cls);

/// The classes partitioning G, computed independently by orbit closure
/// under conjugation. Equivalent to PermGroup::classes().
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

struct SubgroupRecord {
  std::vector<Element> generators;
  ElementSet elements = 0;
  int order = 1;
  int index = 1;
  bool normal = false;
  int conjugacy_id = 0;  ///< index of its class among subgroup classes
  int class_size = 1;    ///< number of conjugates
};

/// One representative per conjugacy class of subgroups, ordered by order,
/// then by element mask. Trivial and full subgroups included.
std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const PermGroup& g);

/// Every subgroup of G (as element sets), ascending by (order, mask).
std::vector<ElementSet> all_subgroups(const PermGroup& g);

/// An automorphism as the image of each element index.
using Automorphism = std::vector<Element>;

/// All automorphisms, identity first, found by brute force over images of
/// a small generating set.
std::vector<Automorphism> automorphism_group(const PermGroup& g);

/// Distinct permutations of class indices induced by the automorphisms.
std::vector<std::vector<int>> class_actions(const PermGroup& g, const std::vector<Automorphism>& auts);

/// A short generating set chosen greedily by descending element order.
std::vector<Element> small_generating_set(const PermGroup& g);

/// Isomorphisms from `k` onto the subgroup `h` of `g`, as maps from element
/// indices of k to element indices of g. At most `limit` are returned.
std::vector<std::vector<Element>> isomorphisms_onto(const PermGroup& g, ElementSet h, const PermGroup& k,
                                                   std::size_t limit = SIZE_MAX);

/// True when the subgroup `h` of `g` is isomorphic to `k`.
bool subgroup_isomorphic(const PermGroup& g, ElementSet h, const PermGroup& k);

}  // namespace shimura
