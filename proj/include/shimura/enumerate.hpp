#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shimura/cover.hpp"
#include "shimura/group.hpp"

namespace shimura {

/// Search limits for one base genus g'. The default limits follow from
/// Riemann-Hurwitz with every m_j >= 2 and g <= 6g'+1:
///   |G| <= 2(2 g_max - 2) / (4g' - 3)     when r >= 1
///   |G| <= (2 g_max - 2) / (2g' - 2)      when r = 0 (g' >= 2)
///   r   <= 2(2 g_max - 2 - |G|(2g' - 2)) / |G|
struct ScanBounds {
  int gprime = 1;
  int gmax = 7;
  int max_order = 24;
  int max_order_etale = 0;
  bool overridden = false;

  static ScanBounds defaults(int gprime);
  /// Same derivation with a different genus ceiling; marked as overridden.
  static ScanBounds with_gmax(int gprime, int gmax);

  int max_branch_points(int order) const;
};

struct ScanStats {
  std::int64_t multisets_visited = 0;
  std::int64_t multisets_pruned = 0;        ///< cut by the partial Riemann-Hurwitz sum
  std::int64_t multisets_odd = 0;           ///< non-integral genus
  std::int64_t multisets_non_canonical = 0; ///< skipped, an Aut(G) image is smaller
  std::int64_t multisets_unrealized = 0;    ///< no generating vector exists
  std::int64_t tuples_visited = 0;
  std::int64_t passports = 0;

  ScanStats& operator+=(const ScanStats& o);
};

struct EnumeratedCover {
  Passport passport;
  GeneratingVector vector;
  Signature signature;
  int genus = 0;
};

/// Every passport (up to Aut(G) acting on classes) with g' fixed, r >= 1 and
/// genus <= bounds.gmax that is realized by an epimorphism, with one
/// representative vector each. Ordered by class multiset.
std::vector<EnumeratedCover> enumerate_passports(const PermGroup& g, int gprime, const ScanBounds& bounds,
                                                 ScanStats* stats = nullptr);

/// An unramified generating vector (alpha_j, beta_j) with prod [a,b] = 1, if any.
std::optional<GeneratingVector> find_etale_vector(const PermGroup& g, int gprime);

}  // namespace shimura
