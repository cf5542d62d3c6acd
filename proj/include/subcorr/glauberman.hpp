#pragma once

#include "subcorr/clifford.hpp"

namespace subcorr {

// Coprime action data inside a common parent permutation group: a p-group
// acting by conjugation on g, with the fixed-point subgroup always
// recomputed from the action. With n nontrivial the context is relative:
// the quotient g/n is acted on coprimely and c is the preimage of its
// fixed points.
struct CoprimeContext {
  PermGroup parent, g, a, n, c, h;
  uint64_t p = 0;
  CharTable tg, tn, tc, th;

  bool plain() const { return n.is_trivial(); }
};

CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p);
CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p,
                                    const PermGroup& n);
CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p,
                                    const PermGroup& n, const PermGroup& h);

bool is_invariant_row(const CharTable& t, int row, const PermGroup& a);
std::vector<int> invariant_rows(const CharTable& t, const PermGroup& a);

// Exact decomposition witness: the moved character equals
// e*target + p*(delta part) + (xi part), where xi collects the non-invariant
// constituents of multiplicity prime to p. Entries are (row, multiplicity)
// in the table of the target group.
struct CorrWitness {
  int source = -1;
  int target = -1;
  uint64_t e = 0;
  std::vector<std::pair<int, uint64_t>> delta, xi;
};

// Classical correspondent for the fully coprime case: the unique
// constituent of theta restricted to c with multiplicity prime to p.
CorrWitness glauberman_correspondent(const CoprimeContext& ctx, int theta);
// Relative correspondent: additionally verifies that no xi constituent
// lies over an invariant character of n.
CorrWitness relative_glauberman(const CoprimeContext& ctx, int chi);
// Correspondence into the intermediate subgroup h.
CorrWitness f_map(const CoprimeContext& ctx, int theta);
// Reverse direction: tau invariant in h induces to d*mu + p*psi + rho with
// f_map(mu) = tau; returned witness has source tau, target mu, e = d.
CorrWitness f_reverse(const CoprimeContext& ctx, int tau);

struct StarCompatReport {
  int theta = -1, phi = -1, theta_star = -1, phi_star = -1;
  uint64_t ip_theta_c = 0;  // [theta_C, theta*]
  uint64_t ip_theta_h = 0;  // [theta_H, phi]
  uint64_t ip_phi_c = 0;    // [phi_C, theta*]
  bool stars_equal = false;
  bool congruence = false;  // ip_theta_c = ip_theta_h * ip_phi_c (mod p)
};
StarCompatReport verify_star_compatibility(const CoprimeContext& ctx,
                                           int theta);

struct InertiaReport {
  uint64_t stab_theta_order = 0, stab_phi_order = 0;
  bool stabilizers_equal = false;
  int swept = 0;             // p-elements passing the centralizer condition
  bool sweeps_match = true;  // each f_<y>(theta) agreed with phi
};
// Stabilizer equality in a_full for theta and its correspondent, plus the
// sweep over p-elements y of the theta-stabilizer whose fixed points lie
// in h. Requires ctx.a subnormal in a_full and a_full normalizing the
// context subgroups.
InertiaReport inertia_equality(const CoprimeContext& ctx, int theta,
                               const PermGroup& a_full);

}  // namespace subcorr
