#include "subcorr/subnorm.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "subcorr/errors.hpp"
#include "subcorr/numutil.hpp"

namespace subcorr {

namespace {

void require_p_element(const PermGroup& g, const Perm& x) {
  if (x.degree() != g.degree() || !g.contains(x))
    throw NotAMember("element is not in the group");
  uint64_t n = x.order();
  if (n == 1) return;  // identity counts for every prime
  auto f = factorize(n);
  if (f.size() != 1)
    throw NotAPElement("element order " + std::to_string(n) +
                       " is not a prime power");
}

void require_small(const PermGroup& g, uint64_t bound) {
  if (g.order() > bound)
    throw GroupTooLarge("order " + std::to_string(g.order()) +
                        " exceeds brute-force bound " + std::to_string(bound));
}

std::vector<int> element_key(const PermGroup& h) {
  // Canonical key for deduplication: sorted flattened element images.
  std::vector<Perm> el = h.elements();
  std::sort(el.begin(), el.end());
  std::vector<int> key;
  key.reserve(el.size() * (size_t)h.degree());
  for (const Perm& e : el)
    for (int i = 0; i < h.degree(); ++i) key.push_back(e[i]);
  return key;
}

// All Sylow p-subgroups of g containing x, as conjugates of one of them.
std::vector<PermGroup> sylows_through(const PermGroup& g, uint64_t p,
                                      const Perm& x) {
  PermGroup p0 = sylow_containing(g, p, x);
  std::set<std::vector<int>> seen;
  std::vector<PermGroup> out;
  for (const Perm& y : g.elements()) {
    PermGroup q = conjugate_group(p0, y);
    if (!q.contains(x)) continue;
    if (seen.insert(element_key(q)).second) out.push_back(q);
  }
  return out;
}

std::vector<Perm> conjugate_set(const std::vector<Perm>& s, const Perm& y) {
  std::vector<Perm> out;
  out.reserve(s.size());
  for (const Perm& a : s) out.push_back(conjugate(a, y));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Perm> subnormalizer_subset(const PermGroup& g, const Perm& x,
                                       uint64_t bound) {
  require_p_element(g, x);
  require_small(g, bound);
  PermGroup cx(g.degree(), {x});
  std::vector<Perm> out;
  for (const Perm& y : g.elements()) {
    PermGroup h(g.degree(), {x, y});
    if (is_subnormal(cx, h)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubnormalizerData subnormalizer(const PermGroup& g, const Perm& x, uint64_t p,
                                uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element order " + std::to_string(x.order()) +
                       " is not a power of " + std::to_string(p));
  SubnormalizerData d;
  d.group = g;
  d.x = x;
  d.p = p;
  d.subset = subnormalizer_subset(g, x, bound);
  d.subset_size = d.subset.size();
  d.sub = PermGroup(g.degree(), d.subset);
  d.subset_is_subgroup = d.sub.order() == d.subset_size;

  std::vector<PermGroup> sylows = sylows_through(g, p, x);
  d.is_picky = sylows.size() == 1;
  if (sylow_count_containing(g, p, x) != sylows.size())
    throw TheoremViolation("Sylow count disagrees with conjugate enumeration");
  PermGroup meet = sylows[0];
  PermGroup normalizer_join = trivial_group(g.degree());
  for (const PermGroup& q : sylows) {
    meet = intersection(meet, q);
    normalizer_join = join(normalizer_join, normalizer(g, q));
  }
  d.sylow_intersection = meet;
  // The subgroup generated by the subset is the join of the normalizers of
  // the Sylow subgroups through x; a mismatch falsifies the definition's
  // equivalent form.
  if (!equal_groups(d.sub, normalizer_join))
    throw TheoremViolation(
        "generated subnormalizer differs from the Sylow-normalizer join");
  d.x_subnormal_in_sub = is_subnormal(PermGroup(g.degree(), {x}), d.sub);
  if (d.x_subnormal_in_sub != d.subset_is_subgroup)
    throw TheoremViolation(
        "subset-is-subgroup and subnormal-in-subnormalizer disagree");
  return d;
}

namespace {

struct Sample {
  std::vector<PermGroup> subgroups;  // deduplicated
};

Sample sample_subgroups(const PermGroup& g, uint64_t seed) {
  Sample s;
  std::set<std::vector<int>> seen;
  auto add = [&](const PermGroup& h) {
    if (seen.insert(element_key(h)).second) s.subgroups.push_back(h);
  };
  add(trivial_group(g.degree()));
  for (const PermGroup& h : all_cyclic_subgroups(g)) add(h);
  for (uint64_t q : prime_divisors(g.order())) {
    PermGroup p0 = sylow_subgroup(g, q);
    for (const Perm& y : g.elements()) add(conjugate_group(p0, y));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    Perm a = g.random_element(rng);
    Perm b = g.random_element(rng);
    add(PermGroup(g.degree(), {a, b}));
  }
  return s;
}

std::string describe(const Perm& x) { return x.to_string(); }

}  // namespace

Prop21Report check_prop21(const PermGroup& g, uint64_t p, uint64_t seed,
                          uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  require_small(g, bound);
  Prop21Report rep;
  rep.p = p;
  Sample sample = sample_subgroups(g, seed);

  auto fail = [&](int law, const Perm& x, const std::string& what) {
    std::ostringstream os;
    os << "law " << law << " at x=" << describe(x) << ": " << what;
    rep.violations.push_back(os.str());
  };

  std::vector<PermGroup> series_subnormals;
  {
    std::set<std::vector<int>> seen;
    auto add = [&](const PermGroup& h) {
      if (seen.insert(element_key(h)).second) series_subnormals.push_back(h);
    };
    PermGroup d = g;
    while (true) {
      add(d);
      PermGroup next = derived_subgroup(d);
      if (next.order() == d.order()) break;
      d = next;
    }
    for (const PermGroup& t : p_core_series(g, p).terms) add(t);
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (const auto& cls : g.conjugacy_classes()) {
    const Perm& x = cls.front();
    if (!is_p_element(x, p)) continue;
    rep.reps++;
    SubnormalizerData d = subnormalizer(g, x, p, bound);
    std::set<Perm> sset(d.subset.begin(), d.subset.end());
    PermGroup cx(g.degree(), {x});

    for (const PermGroup& h : sample.subgroups) {
      bool has_x = h.contains(x);

      // Law 1: H with <x> subnormal lies inside the subset; normalizers of
      // p-subgroups through x lie inside the generated subnormalizer.
      if (has_x && is_subnormal(cx, h)) {
        rep.checked[0]++;
        for (const Perm& e : h.elements())
          if (!sset.count(e)) {
            fail(1, x, "subnormal overgroup escapes the subset");
            break;
          }
      }
      if (has_x && h.is_p_group(p)) {
        rep.checked[0]++;
        if (!is_subgroup(normalizer(g, h), d.sub))
          fail(1, x, "p-subgroup normalizer escapes the subnormalizer");
      }

      // Law 2: Sub_H(x) <= Sub_G(x), with equality to the intersection
      // under the subnormality hypothesis.
      if (has_x) {
        rep.checked[1]++;
        std::vector<Perm> sub_h_set = subnormalizer_subset(h, x, bound);
        PermGroup sub_h(g.degree(), sub_h_set);
        if (!is_subgroup(sub_h, d.sub))
          fail(2, x, "subnormalizer in a subgroup escapes the ambient one");
        PermGroup cut = intersection(d.sub, h);
        bool equal = equal_groups(sub_h, cut);
        if (d.x_subnormal_in_sub && !equal)
          fail(2, x, "intersection equality fails despite subnormality");
        if (!d.x_subnormal_in_sub && !equal) rep.equality_gaps++;
      }

      // Law 3: the subnormalizer of the image in a quotient is the image of
      // the subnormalizer. Trivial and full kernels are skipped as vacuous.
      if (is_normal(h, g) && !h.is_trivial() && h.order() < g.order()) {
        rep.checked[2]++;
        CosetAction ca = coset_action(g, h);
        Perm xbar = ca.image(x);
        std::vector<Perm> qsub = subnormalizer_subset(ca.quotient, xbar, bound);
        PermGroup lhs(ca.quotient.degree(), qsub);
        std::vector<Perm> imgs;
        for (const Perm& s : d.sub.generators()) imgs.push_back(ca.image(s));
        PermGroup rhs(ca.quotient.degree(), imgs);
        if (!equal_groups(lhs, rhs))
          fail(3, x, "quotient subnormalizer is not the image");
      }

    }

    // Law 4: a subnormal subgroup containing x covers G together with the
    // subnormalizer: G = N * Sub_G(x) as a product of sets. The subnormal
    // subgroups tested are the derived and p-core series terms.
    for (const PermGroup& n : series_subnormals) {
      if (!n.contains(x)) continue;
      rep.checked[3]++;
      bool covers;
      if (n.is_trivial()) {
        covers = d.sub.order() == g.order();
      } else {
        CosetAction ca = coset_action(g, n);
        std::set<int> hit;
        for (const Perm& s : d.sub.elements()) hit.insert(ca.image(s)[0]);
        covers = hit.size() == (size_t)ca.quotient.degree();
      }
      if (!covers) fail(4, x, "G is not covered by N * Sub_G(x)");
    }

    // Law 5: the subset is a subgroup exactly when the subnormalizer is the
    // normalizer of the meet of the Sylow subgroups through x.
    rep.checked[4]++;
    bool norm_eq = equal_groups(d.sub, normalizer(g, d.sylow_intersection));
    if (d.subset_is_subgroup != norm_eq)
      fail(5, x, "subgroup property and normalizer equality disagree");

    // Law 6: conjugation equivariance of the subset (and so of the group).
    for (int i = 0; i < 5; ++i) {
      rep.checked[5]++;
      Perm y = g.random_element(rng);
      std::vector<Perm> lhs = subnormalizer_subset(g, conjugate(x, y), bound);
      if (lhs != conjugate_set(d.subset, y))
        fail(6, x, "subset of a conjugate is not the conjugated subset");
    }
  }
  return rep;
}

StructureReport structure_normal_complement(const PermGroup& g, uint64_t p,
                                            const Perm& x, uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element is not a p-element for the given prime");
  require_small(g, bound);
  PermGroup n = p_prime_core(g, p);
  if (n.order() * int_p_part(g.order(), p) != g.order())
    throw HypothesisFailed("group has no normal p-complement");

  StructureReport rep;
  SubnormalizerData d = subnormalizer(g, x, p, bound);
  rep.sub_order = d.sub.order();

  PermGroup syl = sylow_containing(g, p, x);
  PermGroup cnx = centralizer(n, x);
  PermGroup formula = join(syl, cnx);
  rep.formula_order = formula.order();
  rep.formula_matches = equal_groups(formula, d.sub);

  // N meet Sub equals the normal closure of C_N(x) in Sub and is a normal
  // p-complement of the subnormalizer.
  rep.complement_checked = true;
  PermGroup cut = intersection(n, d.sub);
  PermGroup closure = normal_closure(d.sub, cnx.generators());
  rep.complement_matches = equal_groups(cut, closure);
  rep.complement_is_p_complement =
      is_normal(cut, d.sub) && cut.order() % p != 0 &&
      cut.order() * int_p_part(d.sub.order(), p) == d.sub.order();
  return rep;
}

StructureReport structure_p_length_one(const PermGroup& g, uint64_t p,
                                       const Perm& x, uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element is not a p-element for the given prime");
  require_small(g, bound);
  if (!is_p_solvable(g, p)) throw HypothesisFailed("group is not p-solvable");
  if (p_core_series(g, p).p_length != 1)
    throw HypothesisFailed("p-length is not one");

  StructureReport rep;
  SubnormalizerData d = subnormalizer(g, x, p, bound);
  rep.sub_order = d.sub.order();

  PermGroup n = p_prime_core(g, p);
  PermGroup syl = sylow_containing(g, p, x);
  PermGroup formula = join(normalizer(g, syl), centralizer(n, x));
  rep.formula_order = formula.order();
  rep.formula_matches = equal_groups(formula, d.sub);
  return rep;
}

WreathReport wreath_lemma_check(const PermGroup& g, uint64_t p, const Perm& x,
                                uint64_t q, uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw NotAPElement(std::to_string(q) + " is not prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element is not a p-element for the given prime");
  require_small(g, bound);

  // The lemma transfers the subgroup property from S_G(x) to the diagonal.
  std::vector<Perm> base_subset = subnormalizer_subset(g, x, bound);
  PermGroup base_sub(g.degree(), base_subset);
  if (base_sub.order() != base_subset.size())
    throw HypothesisFailed("subnormalizer subset of the base is not a subgroup");

  uint64_t gamma_order = q;
  for (uint64_t i = 0; i < q; ++i) {
    if (gamma_order > bound / std::max<uint64_t>(g.order(), 1))
      throw GroupTooLarge("wreath product exceeds the brute-force bound");
    gamma_order *= g.order();
  }

  PermGroup gamma = wreath_product(g, cyclic_group((int)q));
  std::vector<int> img((size_t)g.degree() * q);
  for (uint64_t b = 0; b < q; ++b)
    for (int i = 0; i < g.degree(); ++i)
      img[b * g.degree() + i] = (int)(b * g.degree()) + x[i];
  Perm diag(img);

  WreathReport rep;
  rep.gamma_order = gamma.order();
  rep.q_equals_p = q == p;
  std::vector<Perm> subset = subnormalizer_subset(gamma, diag, bound);
  rep.subset_size = subset.size();
  PermGroup sub(gamma.degree(), subset);
  rep.subset_is_subgroup = sub.order() == rep.subset_size;
  return rep;
}

}  // namespace subcorr
