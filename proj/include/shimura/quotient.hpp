#pragma once

#include <string>
#include <vector>

#include "shimura/characters.hpp"
#include "shimura/cover.hpp"
#include "shimura/decomposition.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/hodge.hpp"

namespace shimura {

/// The intermediate curve C/H for H <= G.
struct QuotientInfo {
  ElementSet subgroup = 0;
  int order = 1;  ///< |H|
  int index = 1;  ///< [G:H]
  int genus = 0;
  /// C -> C/H: genus of C/H and the branch orders (sorted).
  Signature top;
  /// C/H -> C/G: for each branch point of C/G, ramification indices e > 1
  /// of the points above it (sorted).
  std::vector<std::vector<int>> bottom;
  bool elliptic() const { return genus == 1; }
};

/// Genus and signatures of C/H from H-orbits on the cosets G/<gamma_j>:
///   2 genus - 2 = [G:H](2g'-2) + sum_j ([G:H] - t_j)
/// with t_j the number of orbits, and the branch order over an orbit
/// through g<gamma_j> equal to |H cap g<gamma_j>g^-1|. Throws
/// IntegralityDefect if the bookkeeping does not close up.
QuotientInfo quotient_signature(const PermGroup& g, const GeneratingVector& v, ElementSet h);

/// dim H^0(K_C)^H = sum_chi nu_chi dim V_chi^H.
int invariant_h0_dim(const CharacterTable& t, const std::vector<int>& nu, ElementSet h);

struct InclusionEdge {
  std::string sub;
  std::string super;
  ElementSet witness = 0;
  std::vector<Element> witness_generators;
  QuotientInfo evidence;
};

/// Eigenvalue multiplicities of x acting on H^0(K_C).
std::vector<int> h0_eigen_counts(const CharacterTable& t, const std::vector<int>& nu, Element x);

/// One edge per conjugacy class of subgroups H of sub's group such that
/// C/H has the super family's base genus, C -> C/H has its branch orders,
/// and some isomorphism from the super family's group onto H matches the
/// two actions on H^0(K_C).
std::vector<InclusionEdge> detect_inclusions(const FamilyFixture& sub, const std::vector<const FamilyFixture*>& supers);

enum class Membership { prym_fibre, phi_fibre, neither, both };
std::string to_string(Membership m);

struct MembershipReport {
  Membership verdict = Membership::neither;
  /// Indices into the decomposition's blocks.
  std::vector<int> e_blocks;
  std::vector<int> prym_blocks;
  /// Blocks partly H-invariant; they are counted on both sides.
  std::vector<int> straddling;
  bool full_fibre = false;
  int sub_dim = 0;
  int super_fibre_dim = 0;
};

/// E-blocks carry H-invariant differentials, Prym blocks carry none. The
/// sub family lies in a phi fibre when every E-block is fixed, and in a
/// Prym fibre when every Prym block is fixed. `full_fibre` compares the
/// sub family's dimension with the matching fibre dimension of the super
/// family.
MembershipReport fibre_membership(const CharacterTable& t, const HodgeData& sub, const DecompositionReport& dec,
                                  ElementSet witness, const HodgeData& super);

}  // namespace shimura
