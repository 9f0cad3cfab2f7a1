#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shimura/group.hpp"

namespace shimura {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of isomorphism classes of groups of each order 1..24.
int small_group_count(int order);

/// All groups of order 2..24 by permutation generators, keyed by order.
///
/// File format, one record per line:
///   order index degree ; gen1 ; gen2 ...   # display name
/// Generators use 1-based cycle notation. A '#' starts a comment; the
/// comment trailing a record is taken as the group's display name.
class GroupCatalog {
 public:
  const std::map<int, std::vector<PermGroup>>& by_order() const { return by_order_; }
  const std::string& provenance() const { return provenance_; }

  const PermGroup& get(GroupId id) const;
  const PermGroup* find(GroupId id) const;
  /// Groups in (order, index) order.
  std::vector<const PermGroup*> groups() const;
  /// True when every order in [2, max_order] is present.
  bool covers_orders_up_to(int max_order) const;

 private:
  friend GroupCatalog parse_catalog(std::istream& in, const std::string& source);
  std::map<int, std::vector<PermGroup>> by_order_;
  std::string provenance_;
};

/// Parses and validates a catalog: declared orders must match the generated
/// groups, and each order present must carry exactly the census count.
GroupCatalog parse_catalog(std::istream& in, const std::string& source = "<stream>");
GroupCatalog load_catalog(const std::filesystem::path& path);

}  // namespace shimura
