#pragma once

#include <string>
#include <vector>

#include "subcorr/chartab.hpp"
#include "subcorr/glauberman.hpp"
#include "subcorr/subnorm.hpp"

namespace subcorr {

// Rows of the table whose value at the class of x is nonzero.
std::vector<int> irr_x(const CharTable& t, const Perm& x);

enum class ConjectureMode { picky, weak, strong };
enum class TheoremMode { thm_a, thm_b, thm_44 };

struct ConjectureInstance {
  std::string group_id;
  uint64_t p = 0;
  int class_index = -1;
  Perm x;
  ConjectureMode mode = ConjectureMode::strong;
  // Hypothesis flags, always recomputed from the group.
  bool picky = false;
  bool x_subnormal_in_sub = false;
  bool p_solvable = false;
  bool p_length_one = false;
  bool normal_p_complement = false;
};

// One matched pair of character rows. sign is +1 or -1 for strong-mode
// edges (psi(x) = sign * chi(x) exactly) and 0 for field-equality edges.
struct BijectionPair {
  int chi = -1;
  int psi = -1;
  int sign = 0;
};

struct BijectionWitness {
  std::vector<BijectionPair> pairing;
  bool constructive = false;
};

struct ConjectureOutcome {
  ConjectureInstance instance;
  int left = 0;   // |Irr^x(G)|
  int right = 0;  // |Irr^x(Sub_G(x))|
  bool ok = false;
  BijectionWitness witness;
  std::string detail;  // failure reason when !ok
};

// Builds the bipartite graph on Irr^x(G) x Irr^x(Sub_G(x)) with an edge
// when degree p-parts agree and the mode's value predicate holds at x,
// then looks for a perfect matching. Mode picky additionally requires x
// to be picky (HypothesisFailed otherwise).
ConjectureOutcome check_conjecture(const PermGroup& g, uint64_t p,
                                   const Perm& x, ConjectureMode mode,
                                   uint64_t bound = kSubnormBound);
// Same, reusing a precomputed group table and subnormalizer data.
ConjectureOutcome check_conjecture_with(const CharTable& tg,
                                        const SubnormalizerData& data,
                                        ConjectureMode mode);

// Everything the normal-p-complement correspondence needs for one (G, p, x):
// the complement n, the subnormalizer s, c = n meet s, a Sylow subgroup
// through x, their tables, and the fixed-point correspondence context used
// to map invariant characters of n to invariant characters of c.
struct ComplementContext {
  PermGroup g, n, s, c, syl;
  uint64_t p = 0;
  Perm x;
  SubnormalizerData data;
  CharTable tg, tn, ts, tc;
  CoprimeContext corr;  // <x> acting on n with middle subgroup c
};
ComplementContext make_complement_context(const PermGroup& g, uint64_t p,
                                          const Perm& x,
                                          uint64_t bound = kSubnormBound);

// The constructed bijection Irr(G | theta) -> Irr(S | phi) for one
// invariant theta, built through the inertia groups, canonical extensions,
// a quotient-character pairing and induction on both sides; every claimed
// equality is verified and a failure throws TheoremViolation.
struct FiberWitness {
  int theta = -1;    // row of tn
  int phi = -1;      // row of tc
  int epsilon = 0;   // the sign of [theta restricted to c, phi] mod p
  std::vector<BijectionPair> pairs;  // rows of tg -> rows of ts, sign epsilon
  int swept = 0;     // elements y with values compared on every pair
};
FiberWitness construct_bijection_normal_complement(const ComplementContext& ctx,
                                                   int theta);

// Theorem-level checkers. thm_44 glues the constructive fibers over orbit
// representatives into a full Irr^x bijection and cross-validates against
// the strong matching; thm_a and thm_b verify the strong matching exists
// under their hypotheses. Hypothesis failures throw HypothesisFailed; a
// sound instance with no witness throws TheoremViolation.
struct AssembledWitness {
  TheoremMode mode = TheoremMode::thm_a;
  ConjectureOutcome matching;
  std::vector<FiberWitness> fibers;  // thm_44 only
  BijectionWitness glued;            // thm_44 only
};
AssembledWitness assemble_theorem_bijections(const PermGroup& g, uint64_t p,
                                             const Perm& x, TheoremMode mode,
                                             uint64_t bound = kSubnormBound);

struct LemmaReport {
  uint64_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For every chi in Irr^x(G) and every normal subgroup N: the restriction
// chi_N has an <x>-invariant constituent theta whose Clifford correspondent
// psi over theta satisfies psi(x) != 0.
LemmaReport check_clifford_nonvanishing(const PermGroup& g, const Perm& x,
                                        uint64_t bound = kSubnormBound);

// Invariant-constituent laws for a coprime-action context: invariant
// characters of g restrict to invariant constituents of n forming a single
// c-orbit (unique when c = n); invariant characters of n induce with an
// invariant constituent (unique when c = n); and when c = g invariance
// passes between a character and its constituents in both directions.
LemmaReport check_invariant_constituents(const CoprimeContext& ctx);

// Deterministic family of coprime-action contexts drawn from the fixture
// catalog: for each fixture and each prime divisor, cyclic p-parts act on
// the p'-core, with every invariant middle subgroup between the fixed
// points and the whole core, plus relative forms over the derived subgroup.
struct GeneratedContext {
  std::string label;
  CoprimeContext ctx;
};
std::vector<GeneratedContext> generate_coprime_contexts(
    uint64_t max_parent_order = 220, uint64_t max_core_order = 100);

struct BatchFilters {
  uint64_t max_order = kSubnormBound;
  std::vector<uint64_t> primes = {2, 3, 5, 7};
  ConjectureMode mode = ConjectureMode::strong;
  bool allow_even = false;
  uint64_t bound = kSubnormBound;
  uint64_t seed = 0;
  int workers = 4;
};

struct InstanceRecord {
  std::string group_id;
  uint64_t group_order = 0;
  uint64_t p = 0;
  int class_index = -1;
  std::string x;
  uint64_t x_order = 0;
  uint64_t subset_size = 0;
  uint64_t sub_order = 0;
  bool is_picky = false;
  bool subset_is_subgroup = false;
  bool x_subnormal_in_sub = false;
  bool p_solvable = false;
  bool p_length_one = false;
  bool normal_p_complement = false;
  bool central_in_sylow_join = false;
  bool x_normal_in_sub = false;
  int irr_x_group = 0;
  int irr_x_sub = 0;
  std::string verdict;  // pass | fail | skipped
  std::string note;
  std::string witness;
  double seconds = 0.0;
};

struct UnitReport {
  std::string file;
  std::string group_id;
  uint64_t p = 0;
  std::vector<InstanceRecord> records;
  std::string error;  // nonempty when the file failed to load or run
};

struct BatchResult {
  std::vector<UnitReport> units;  // catalog order x prime order
  bool all_pass = true;           // no violations and no ingestion errors
  bool had_violation = false;     // some instance verdict was "fail"
};

// Runs every (file, prime) unit on a bounded worker pool; units that fail
// to parse are reported in place and never abort the run. Output order is
// deterministic regardless of completion order.
BatchResult batch_run(const std::vector<std::string>& files,
                      const BatchFilters& filters);

// One self-contained line per instance, stable field order.
std::string render_record(const InstanceRecord& r);
std::string render_report(const BatchResult& b);

}  // namespace subcorr
