#pragma once

#include <array>
#include <string>

#include "subcorr/perm.hpp"

namespace subcorr {

inline constexpr uint64_t kSubnormBound = 5000;

// S_G(x): the elements y with <x> subnormal in <x, y>, by brute force.
std::vector<Perm> subnormalizer_subset(const PermGroup& g, const Perm& x,
                                       uint64_t bound = kSubnormBound);

struct SubnormalizerData {
  PermGroup group;
  Perm x;
  uint64_t p = 0;
  std::vector<Perm> subset;      // S_G(x), sorted
  uint64_t subset_size = 0;
  PermGroup sub;                 // <S_G(x)>
  PermGroup sylow_intersection;  // meet of the Sylow p-subgroups through x
  bool is_picky = false;         // x lies in exactly one Sylow p-subgroup
  bool subset_is_subgroup = false;
  bool x_subnormal_in_sub = false;
};

// Populates all fields and cross-checks the generated subgroup against the
// join of the normalizers of the Sylow p-subgroups containing x; a mismatch
// throws TheoremViolation.
SubnormalizerData subnormalizer(const PermGroup& g, const Perm& x, uint64_t p,
                                uint64_t bound = kSubnormBound);

// Law suite over every p-element class representative. Sampled subgroups
// are all cyclic subgroups, all Sylow subgroups for every prime divisor,
// and twenty seeded random two-generator subgroups.
//   1: subgroups with <x> subnormal land inside S_G(x), and normalizers of
//      p-subgroups through x land inside the subnormalizer;
//   2: monotonicity, and intersection equality when <x> is subnormal in
//      the subnormalizer (counted separately as a gap when it fails
//      without that hypothesis);
//   3: quotient compatibility over sampled normal subgroups;
//   4: G = N * Sub_G(x) for sampled subnormal N containing x;
//   5: the subset is a subgroup exactly when it equals N_G(Q);
//   6: conjugation equivariance.
struct Prop21Report {
  uint64_t p = 0;
  int reps = 0;
  std::array<uint64_t, 6> checked{};
  uint64_t equality_gaps = 0;  // law 2 equality failures without hypothesis
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
Prop21Report check_prop21(const PermGroup& g, uint64_t p, uint64_t seed = 0,
                          uint64_t bound = kSubnormBound);

// Structure of the subnormalizer when G has a normal p-complement N:
// Sub_G(x) = <P, C_N(x)> for x in the Sylow subgroup P, and C_N(x)^S is a
// normal p-complement of S = Sub_G(x) equal to N meet S. The p-length-one
// form verifies Sub_G(x) = <N_G(P), C_N(x)> with N = O_{p'}(G).
struct StructureReport {
  uint64_t sub_order = 0;      // brute-force subnormalizer
  uint64_t formula_order = 0;  // generated by the structural pieces
  bool formula_matches = false;
  bool complement_checked = false;
  bool complement_matches = false;         // N meet S = C_N(x)^S
  bool complement_is_p_complement = false; // normal, p'-order, p-power index
};
StructureReport structure_normal_complement(const PermGroup& g, uint64_t p,
                                            const Perm& x,
                                            uint64_t bound = kSubnormBound);
StructureReport structure_p_length_one(const PermGroup& g, uint64_t p,
                                       const Perm& x,
                                       uint64_t bound = kSubnormBound);

// Subnormalizer subset of the diagonal element (x, ..., x) in G wr C_q:
// verified to be a subgroup. Requires S_G(x) to be a subgroup.
struct WreathReport {
  uint64_t gamma_order = 0;
  uint64_t subset_size = 0;
  bool subset_is_subgroup = false;
  bool q_equals_p = false;
};
WreathReport wreath_lemma_check(const PermGroup& g, uint64_t p, const Perm& x,
                                uint64_t q, uint64_t bound = kSubnormBound);

}  // namespace subcorr
