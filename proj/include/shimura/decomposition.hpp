#pragma once

#include <string>
#include <vector>

#include "shimura/characters.hpp"
#include "shimura/hodge.hpp"

namespace shimura {

/// One isotypic factor B^n of JC, indexed by a Galois orbit of characters.
struct RationalBlock {
  std::vector<int> orbit;
  int degree = 1;
  int schur = 1;     ///< 2 when the Frobenius-Schur indicator is -1
  int exponent = 1;  ///< degree / schur
  int h0_dim = 0;    ///< sum over the orbit of nu_chi chi(1)
  int factor_dim = 0;
  int contribution = 0;  ///< dim of the invariants of S^2 of the block's H^0 part
  bool moving = false;
  bool trivial() const { return orbit.size() == 1 && orbit[0] == 0; }
};

struct DecompositionReport {
  std::vector<RationalBlock> blocks;
  std::string rendering;  ///< "JC ~ B(1) x B(1)^2"
};

/// Blocks for the orbits with nonzero h0_dim, ordered by degree then
/// factor_dim. Throws IntegralityDefect for a non-integral factor_dim, and
/// when block contributions fail to add up to N.
DecompositionReport jacobian_decomposition(const HodgeData& h, const CharacterTable& t);

/// Moving flag per block of jacobian_decomposition(h, t), in the same order.
std::vector<bool> rigidity_flags(const HodgeData& h, const CharacterTable& t);

}  // namespace shimura
