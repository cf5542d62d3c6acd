#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subcorr/errors.hpp"

namespace subcorr {

// Permutation on {0, ..., degree-1}, stored as the image vector.
// Composition is left-to-right: (a * b) maps x to b[a[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                    // identity
  explicit Perm(std::vector<int> images);       // validates bijectivity

  int degree() const { return (int)img_.size(); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  uint64_t order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()" if trivial.
  std::string to_string() const;

  int smallest_moved_point() const;             // -1 if identity
  std::vector<int> moved_points() const;
  std::vector<std::vector<int>> cycles() const; // nontrivial cycles, sorted

 private:
  std::vector<int> img_;
};

Perm conjugate(const Perm& a, const Perm& g);   // g^-1 * a * g
Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b
bool commutes(const Perm& a, const Perm& b);
bool is_p_element(const Perm& a, uint64_t p);

// 1-based cycle helper: perm_from_cycles(5, {{1,2,3},{4,5}}).
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// g = g_p * g_pprime with commuting factors, g_p a p-element and g_pprime of
// order coprime to p; both are powers of g.
std::pair<Perm, Perm> p_part_decomposition(const Perm& g, uint64_t p);

// Immutable permutation group with an eagerly built deterministic
// stabilizer chain (base points are smallest moved points).
class PermGroup {
 public:
  PermGroup() = default;                        // degree-0 trivial group
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  bool contains_group(const PermGroup& h) const;
  Perm identity() const { return Perm(degree_); }

  // Full element list in a deterministic order; throws GroupTooLarge past
  // the bound.
  std::vector<Perm> elements(uint64_t bound = kEnumBound) const;
  Perm random_element(std::mt19937_64& rng) const;

  // Classes sorted by their lex-least representative (identity class first);
  // each class is sorted, so front() is the representative.
  std::vector<std::vector<Perm>> conjugacy_classes(
      uint64_t bound = kEnumBound) const;

  bool is_abelian() const;
  bool is_p_group(uint64_t p) const;
  uint64_t exponent(uint64_t bound = kEnumBound) const;
  std::vector<int> orbit(int point) const;
  std::vector<std::vector<int>> orbits() const;

  static constexpr uint64_t kEnumBound = 2000000;

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;                     // strong gens active here
    std::map<int, Perm> transversal;            // point -> u with base^u = point
  };

  void extend(size_t level, const Perm& g);
  void rebuild_orbit(size_t level);
  bool contains_from(size_t level, Perm g) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  uint64_t order_ = 1;
};

PermGroup trivial_group(int degree);
PermGroup cyclic_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_group(int n);                // order 2n, acting on n points
PermGroup quaternion_group();                   // Q8 on 8 points

// Smallest subgroup of `degree`-degree symmetric group containing all of
// `elems`; generator list is a deterministic small subset.
PermGroup group_from_elements(int degree, const std::vector<Perm>& elems);

PermGroup conjugate_group(const PermGroup& g, const Perm& c);
bool equal_groups(const PermGroup& a, const PermGroup& b);
bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool is_normal(const PermGroup& h, const PermGroup& g);

PermGroup centralizer(const PermGroup& g, const Perm& x,
                      uint64_t bound = PermGroup::kEnumBound);
PermGroup centralizer_of_group(const PermGroup& g, const PermGroup& h,
                               uint64_t bound = PermGroup::kEnumBound);
PermGroup center(const PermGroup& g, uint64_t bound = PermGroup::kEnumBound);
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     uint64_t bound = PermGroup::kEnumBound);
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       uint64_t bound = PermGroup::kEnumBound);
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup join_with(const PermGroup& a, const Perm& x);

// Normal closure of the subgroup generated by `seed` inside g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed);
PermGroup derived_subgroup(const PermGroup& g);

// True iff h is subnormal in g, decided by the descending chain of
// iterated normal closures.
bool is_subnormal(const PermGroup& h, const PermGroup& g);

PermGroup sylow_containing(const PermGroup& g, uint64_t p, const Perm& x,
                           uint64_t bound = PermGroup::kEnumBound);
PermGroup sylow_subgroup(const PermGroup& g, uint64_t p,
                         uint64_t bound = PermGroup::kEnumBound);
// Number of Sylow p-subgroups of g containing the p-element x.
uint64_t sylow_count_containing(const PermGroup& g, uint64_t p, const Perm& x,
                                uint64_t bound = PermGroup::kEnumBound);

PermGroup p_core(const PermGroup& g, uint64_t p);        // O_p(g)
PermGroup p_prime_core(const PermGroup& g, uint64_t p);  // largest normal p'-subgroup
PermGroup p_residual(const PermGroup& g, uint64_t p);       // smallest normal N with p-group quotient
PermGroup p_prime_residual(const PermGroup& g, uint64_t p); // smallest normal N with p'-quotient

// Ascending chain 1 < O_{p'}(g) < O_{p',p}(g) < ... until it stabilizes.
// Reaches g exactly when g is p-solvable.
struct CoreSeries {
  std::vector<PermGroup> terms;  // strictly increasing, starts above 1
  bool reaches_group = false;
  int p_length = 0;              // number of p-factors in the chain
};
CoreSeries p_core_series(const PermGroup& g, uint64_t p);
bool is_p_solvable(const PermGroup& g, uint64_t p);

// Right-coset action of g on cosets of the subgroup n; when n is normal the
// image is the quotient group and lift/preimage invert the projection.
struct CosetAction {
  PermGroup quotient;            // acts on coset indices; index 0 = n itself
  std::vector<Perm> reps;        // lex-least coset representatives
  std::vector<Perm> kernel_gens; // generators of n
  int group_degree = 0;

  Perm image(const Perm& g) const;
  Perm lift(const Perm& q) const;              // valid when n is normal
  PermGroup preimage(const PermGroup& s) const;
};
CosetAction coset_action(const PermGroup& g, const PermGroup& n,
                         uint64_t bound = PermGroup::kEnumBound);

PermGroup direct_product(const PermGroup& a, const PermGroup& b);
Perm embed_left(const Perm& a, int right_degree);
Perm embed_right(const Perm& b, int left_degree);
// Component of a degree-(lo..hi) block-stable permutation; throws
// GroupMismatch if the block is not preserved.
Perm restrict_block(const Perm& g, int lo, int hi);

// Imprimitive wreath product: base acts on each of top.degree() blocks,
// top permutes the blocks. Degree = base.degree() * top.degree().
PermGroup wreath_product(const PermGroup& base, const PermGroup& top);

std::vector<PermGroup> all_cyclic_subgroups(const PermGroup& g);
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     uint64_t order_bound = 4096);
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

// Orbit of `start` under a right action of g given by act(point, generator),
// together with the stabilizer (via Schreier generators).
template <typename T, typename Act>
std::pair<std::vector<T>, PermGroup> orbit_stabilizer(const PermGroup& g,
                                                      const T& start,
                                                      Act act) {
  std::vector<T> orb = {start};
  std::map<T, Perm> word = {{start, g.identity()}};
  std::vector<Perm> stab_gens;
  for (size_t i = 0; i < orb.size(); ++i) {
    T pt = orb[i];
    for (const Perm& s : g.generators()) {
      T q = act(pt, s);
      auto it = word.find(q);
      Perm u = word.at(pt) * s;
      if (it == word.end()) {
        word.emplace(q, u);
        orb.push_back(q);
      } else {
        stab_gens.push_back(u * it->second.inverse());
      }
    }
  }
  return {orb, group_from_elements(g.degree(), stab_gens)};
}

}  // namespace subcorr
