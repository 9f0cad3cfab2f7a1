#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shimura/group.hpp"

namespace shimura {

/// (g'; m_1..m_r). r = 0 only for unramified (etale) data.
struct Signature {
  int gprime = 0;
  std::vector<int> m;
  int r() const { return static_cast<int>(m.size()); }
  bool etale() const { return m.empty(); }
  friend auto operator<=>(const Signature&, const Signature&) = default;
  std::string to_string() const;
};

/// Elements (alpha_j, beta_j; gamma_i) of G describing an epimorphism from
/// the orbifold surface group.
struct GeneratingVector {
  GroupId group;
  int gprime = 0;
  std::vector<std::pair<Element, Element>> hyperbolic;
  std::vector<Element> branch;
};

enum class VectorVerdict { ok, relation_fails, not_surjective, identity_branch_element };
std::string to_string(VectorVerdict v);

/// Dedup key: group, g', and the sorted multiset of branch class ids.
struct Passport {
  GroupId group;
  int gprime = 0;
  std::vector<int> classes;
  friend auto operator<=>(const Passport&, const Passport&) = default;
};

/// g = 1 + n(g'-1) + (n/2) sum (1 - 1/m_j), or nullopt when that is not a
/// nonnegative integer.
std::optional<int> riemann_hurwitz_genus(const Signature& sig, int n);

/// prod gamma_i * prod [alpha_j, beta_j], left to right.
Element relation_product(const PermGroup& g, const GeneratingVector& v);

VectorVerdict validate_generating_vector(const PermGroup& g, const GeneratingVector& v);

Signature signature_of(const PermGroup& g, const GeneratingVector& v);
Passport passport_of(const PermGroup& g, const GeneratingVector& v);

}  // namespace shimura
