#include "shimura/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/errors.hpp"

namespace shimura {

DecompositionReport jacobian_decomposition(const HodgeData& h, const CharacterTable& t) {
  DecompositionReport rep;
  int total = 0;
  for (const auto& orbit : t.orbits()) {
    RationalBlock b;
    b.orbit = orbit;
    b.degree = t.degree(orbit[0]);
    b.schur = t.indicator(orbit[0]) == -1 ? 2 : 1;
    b.exponent = b.degree / b.schur;
    std::vector<int> nu(t.size(), 0);
    for (int chi : orbit) {
      b.h0_dim += h.nu[chi] * t.degree(chi);
      nu[chi] = h.nu[chi];
    }
    if (b.h0_dim == 0) continue;
    if (b.h0_dim % b.exponent != 0)
      throw IntegralityDefect("block of degree " + std::to_string(b.degree) + " has h0 dimension " +
                              std::to_string(b.h0_dim) + " not divisible by " + std::to_string(b.exponent));
    b.factor_dim = b.h0_dim / b.exponent;
    b.contribution = n_delta(t, h0_character(t, nu));
    b.moving = b.contribution > 0;
    total += b.contribution;
    rep.blocks.push_back(std::move(b));
  }
  if (total != h.N)
    throw IntegralityDefect("block contributions sum to " + std::to_string(total) + ", N = " + std::to_string(h.N));
  std::stable_sort(rep.blocks.begin(), rep.blocks.end(), [](const RationalBlock& a, const RationalBlock& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.factor_dim < b.factor_dim;
  });
  std::ostringstream os;
  os << "JC ~";
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    const auto& b = rep.blocks[i];
    os << (i ? " x " : " ") << "B(" << b.factor_dim << ")";
    if (b.exponent > 1) os << "^" << b.exponent;
  }
  rep.rendering = os.str();
  return rep;
}

std::vector<bool> rigidity_flags(const HodgeData& h, const CharacterTable& t) {
  std::vector<bool> out;
  for (const auto& b : jacobian_decomposition(h, t).blocks) out.push_back(b.moving);
  return out;
}

}  // namespace shimura
