#include "subcorr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

#include "subcorr/catalog.hpp"
#include "subcorr/clifford.hpp"
#include "subcorr/errors.hpp"
#include "subcorr/numutil.hpp"

namespace subcorr {

std::vector<int> irr_x(const CharTable& t, const Perm& x) {
  int cx = t.classes().class_of(x);
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i)
    if (!t.irr(i)[cx].is_zero()) out.push_back(i);
  return out;
}

namespace {

// Hopcroft-Karp maximum matching on an explicit bipartite adjacency list.
struct Matching {
  int n, m;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, dist;

  Matching(int left, int right, const std::vector<std::vector<int>>& a)
      : n(left), m(right), adj(a), match_l(left, -1), match_r(right, -1) {}

  bool bfs() {
    std::queue<int> q;
    dist.assign(n, -1);
    for (int u = 0; u < n; ++u)
      if (match_l[u] < 0) {
        dist[u] = 0;
        q.push(u);
      }
    bool reachable = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w < 0) {
          reachable = true;
        } else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  int solve() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (match_l[u] < 0 && dfs(u)) size++;
    return size;
  }
};

// Edge classification: 0 none, +1/-1 strong sign, 2 field-equality edge.
int edge_kind(const Cyclotomic& vg, const Cyclotomic& vs, uint64_t dg,
              uint64_t ds, uint64_t p, ConjectureMode mode) {
  if (int_p_part(dg, p) != int_p_part(ds, p)) return 0;
  if (mode == ConjectureMode::strong) {
    if (vs == vg) return 1;
    if (vs == -vg) return -1;
    return 0;
  }
  return Cyclotomic::same_field(vg, vs) ? 2 : 0;
}

}  // namespace

ConjectureOutcome check_conjecture_with(const CharTable& tg,
                                        const SubnormalizerData& data,
                                        ConjectureMode mode) {
  const PermGroup& g = data.group;
  ConjectureOutcome out;
  out.instance.p = data.p;
  out.instance.x = data.x;
  out.instance.mode = mode;
  out.instance.class_index = tg.classes().class_of(data.x);
  out.instance.picky = data.is_picky;
  out.instance.x_subnormal_in_sub = data.x_subnormal_in_sub;
  out.instance.p_solvable = is_p_solvable(g, data.p);
  out.instance.p_length_one =
      out.instance.p_solvable && p_core_series(g, data.p).p_length <= 1;
  PermGroup n = p_prime_core(g, data.p);
  out.instance.normal_p_complement =
      n.order() * int_p_part(g.order(), data.p) == g.order();
  if (mode == ConjectureMode::picky && !data.is_picky)
    throw HypothesisFailed("element is not picky");

  CharTable ts = CharTable::compute(data.sub);
  std::vector<int> lx = irr_x(tg, data.x);
  std::vector<int> rx = irr_x(ts, data.x);
  out.left = (int)lx.size();
  out.right = (int)rx.size();
  int cg = tg.classes().class_of(data.x);
  int cs = ts.classes().class_of(data.x);

  std::vector<std::vector<int>> adj(lx.size());
  std::vector<std::vector<int>> kind(lx.size(),
                                     std::vector<int>((int)rx.size(), 0));
  for (size_t i = 0; i < lx.size(); ++i)
    for (size_t j = 0; j < rx.size(); ++j) {
      int k = edge_kind(tg.irr(lx[i])[cg], ts.irr(rx[j])[cs],
                        tg.degree(lx[i]), ts.degree(rx[j]), data.p, mode);
      kind[i][j] = k;
      if (k != 0) adj[i].push_back((int)j);
    }

  if (lx.size() != rx.size()) {
    out.ok = false;
    out.detail = "nonvanishing character counts differ (" +
                 std::to_string(lx.size()) + " vs " +
                 std::to_string(rx.size()) + ")";
    return out;
  }
  Matching match((int)lx.size(), (int)rx.size(), adj);
  int size = match.solve();
  if (size < (int)lx.size()) {
    out.ok = false;
    out.detail = "maximum matching covers " + std::to_string(size) + " of " +
                 std::to_string(lx.size()) + " characters";
    return out;
  }
  out.ok = true;
  for (size_t i = 0; i < lx.size(); ++i) {
    int j = match.match_l[i];
    int k = kind[i][j];
    out.witness.pairing.push_back({lx[i], rx[j], k == 2 ? 0 : k});
  }
  return out;
}

ConjectureOutcome check_conjecture(const PermGroup& g, uint64_t p,
                                   const Perm& x, ConjectureMode mode,
                                   uint64_t bound) {
  SubnormalizerData data = subnormalizer(g, x, p, bound);
  CharTable tg = CharTable::compute(g);
  return check_conjecture_with(tg, data, mode);
}

ComplementContext make_complement_context(const PermGroup& g, uint64_t p,
                                          const Perm& x, uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (p == 2)
    throw HypothesisFailed("the constructive correspondence needs an odd prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element is not a p-element for the given prime");
  ComplementContext ctx;
  ctx.g = g;
  ctx.p = p;
  ctx.x = x;
  ctx.n = p_prime_core(g, p);
  if (ctx.n.order() * int_p_part(g.order(), p) != g.order())
    throw HypothesisFailed("group has no normal p-complement");
  ctx.data = subnormalizer(g, x, p, bound);
  ctx.s = ctx.data.sub;
  ctx.c = intersection(ctx.n, ctx.s);
  ctx.syl = sylow_containing(g, p, x);
  ctx.tg = CharTable::compute(g);
  ctx.tn = CharTable::compute(ctx.n);
  ctx.ts = CharTable::compute(ctx.s);
  ctx.tc = CharTable::compute(ctx.c);
  PermGroup a(g.degree(), {x});
  ctx.corr =
      make_coprime_context(g, ctx.n, a, p, trivial_group(g.degree()), ctx.c);
  // The correspondence context recomputes tables for n and c; row indices
  // are shared below, so the class orders must agree exactly.
  if (ctx.corr.tg.classes().reps != ctx.tn.classes().reps ||
      ctx.corr.th.classes().reps != ctx.tc.classes().reps)
    throw TheoremViolation("table class orders diverged between contexts");
  return ctx;
}

FiberWitness construct_bijection_normal_complement(const ComplementContext& ctx,
                                                   int theta) {
  PermGroup a(ctx.g.degree(), {ctx.x});
  if (theta < 0 || theta >= ctx.tn.size())
    throw NotAMember("theta row out of range");
  if (!is_invariant_row(ctx.tn, theta, a))
    throw HypothesisFailed("theta is not invariant under the element");

  FiberWitness fw;
  fw.theta = theta;

  int src = ctx.corr.tg.index_of(ctx.tn.irr(theta));
  if (src < 0) throw TheoremViolation("theta missing from the action context");
  CorrWitness w = f_map(ctx.corr, src);
  fw.phi = ctx.tc.index_of(ctx.corr.th.irr(w.target));
  if (fw.phi < 0)
    throw TheoremViolation("correspondent missing from the subgroup table");
  uint64_t em = w.e % ctx.p;
  if (em != 1 && em != ctx.p - 1)
    throw TheoremViolation("correspondence multiplicity is not a unit sign");
  fw.epsilon = em == 1 ? 1 : -1;

  // Inertia groups: T = G_theta = N Q with Q = P_theta = P_phi, and the
  // stabilizer of phi in the subnormalizer is its intersection with T.
  CharOrbit orb_t = character_orbit(ctx.g, ctx.tn, theta);
  const PermGroup& t = orb_t.inertia;
  PermGroup q = intersection(ctx.syl, t);
  if (t.order() != ctx.n.order() * q.order())
    throw TheoremViolation("inertia group is not complement times p-part");
  CharOrbit orb_s = character_orbit(ctx.s, ctx.tc, fw.phi);
  const PermGroup& sphi = orb_s.inertia;
  if (!equal_groups(sphi, intersection(ctx.s, t)))
    throw TheoremViolation("correspondent stabilizer differs from S meet T");
  if (!equal_groups(q, intersection(ctx.syl, sphi)))
    throw TheoremViolation("p-parts of the two stabilizers differ");

  CharTable tt = CharTable::compute(t);
  CharTable tf = CharTable::compute(sphi);
  int theta_hat = canonical_extension(tt, ctx.tn, theta, ctx.p);
  int phi_hat = canonical_extension(tf, ctx.tc, fw.phi, ctx.p);

  // Identify the characters of T/N and S_phi/C through the common p-part q.
  CosetAction ca_t = coset_action(t, ctx.n);
  CosetAction ca_s = coset_action(sphi, ctx.c);
  CharTable tqt = CharTable::compute(ca_t.quotient);
  CharTable tqs = CharTable::compute(ca_s.quotient);
  if (tqt.size() != tqs.size())
    throw TheoremViolation("quotient character counts differ");
  ConjClasses qcls = ConjClasses::of(q);
  auto pullback = [&](const CharTable& tq, const CosetAction& ca, int row) {
    ClassFunction f((size_t)qcls.size());
    for (int k = 0; k < qcls.size(); ++k)
      f[k] = tq.irr(row)[tq.classes().class_of(ca.image(qcls.reps[k]))];
    return f;
  };
  std::map<ClassFunction, int> by_pullback;
  for (int s = 0; s < tqs.size(); ++s)
    by_pullback.emplace(pullback(tqs, ca_s, s), s);

  std::set<int> sources, targets;
  for (int r = 0; r < tqt.size(); ++r) {
    auto it = by_pullback.find(pullback(tqt, ca_t, r));
    if (it == by_pullback.end())
      throw TheoremViolation("quotient characters fail to correspond");
    int s = it->second;

    ClassFunction mu_t =
        lift_class_function(ca_t, tt.classes(), tqt.irr(r), tqt.classes());
    int psi_t = tt.index_of(cf_mul(tt.irr(theta_hat), mu_t));
    if (psi_t < 0)
      throw TheoremViolation("extension times quotient character not a row");
    int chi = ctx.tg.index_of(induce_row(tt, psi_t, ctx.tg.classes()));
    if (chi < 0)
      throw TheoremViolation("induction from the inertia group reducible");

    ClassFunction mu_s =
        lift_class_function(ca_s, tf.classes(), tqs.irr(s), tqs.classes());
    int psi_s = tf.index_of(cf_mul(tf.irr(phi_hat), mu_s));
    if (psi_s < 0)
      throw TheoremViolation("extension times quotient character not a row");
    int fchi = ctx.ts.index_of(induce_row(tf, psi_s, ctx.ts.classes()));
    if (fchi < 0)
      throw TheoremViolation("induction from the stabilizer reducible");

    if (int_p_part(ctx.tg.degree(chi), ctx.p) !=
        int_p_part(ctx.ts.degree(fchi), ctx.p))
      throw TheoremViolation("degree p-parts differ across the bijection");
    if (!sources.insert(chi).second || !targets.insert(fchi).second)
      throw TheoremViolation("constructed pairing is not injective");
    fw.pairs.push_back({chi, fchi, fw.epsilon});
  }

  // The fiber must exhaust the characters over theta and over phi.
  std::vector<int> over_g = irr_over(ctx.tg, ctx.tn, theta);
  std::vector<int> over_s = irr_over(ctx.ts, ctx.tc, fw.phi);
  if (std::set<int>(over_g.begin(), over_g.end()) != sources ||
      std::set<int>(over_s.begin(), over_s.end()) != targets)
    throw TheoremViolation("fiber does not cover the character families");

  // Sign check at every element of the p-part whose complement centralizer
  // lands inside c; x itself always qualifies.
  if (!is_subgroup(centralizer(ctx.n, ctx.x), ctx.c))
    throw TheoremViolation("defining element fails its centralizer condition");
  for (const Perm& y : q.elements()) {
    if (!is_subgroup(centralizer(ctx.n, y), ctx.c)) continue;
    fw.swept++;
    int cy_g = ctx.tg.classes().class_of(y);
    int cy_s = ctx.ts.classes().class_of(y);
    for (const BijectionPair& pr : fw.pairs) {
      Cyclotomic want = ctx.tg.irr(pr.chi)[cy_g];
      if (fw.epsilon == -1) want = -want;
      if (ctx.ts.irr(pr.psi)[cy_s] != want)
        throw TheoremViolation("value equality fails at a swept element");
    }
  }
  return fw;
}

namespace {

ConjectureOutcome strong_matching_or_throw(const PermGroup& g, uint64_t p,
                                           const Perm& x, uint64_t bound) {
  SubnormalizerData data = subnormalizer(g, x, p, bound);
  CharTable tg = CharTable::compute(g);
  ConjectureOutcome out =
      check_conjecture_with(tg, data, ConjectureMode::strong);
  if (!out.ok) throw TheoremViolation("strong matching missing: " + out.detail);
  return out;
}

}  // namespace

AssembledWitness assemble_theorem_bijections(const PermGroup& g, uint64_t p,
                                             const Perm& x, TheoremMode mode,
                                             uint64_t bound) {
  if (!is_prime(p)) throw NotAPElement(std::to_string(p) + " is not prime");
  if (!is_p_element(x, p))
    throw NotAPElement("element is not a p-element for the given prime");
  if (p == 2) throw HypothesisFailed("the theorems require an odd prime");
  AssembledWitness aw;
  aw.mode = mode;

  if (mode == TheoremMode::thm_a || mode == TheoremMode::thm_b) {
    if (!is_p_solvable(g, p))
      throw HypothesisFailed("group is not p-solvable");
    if (mode == TheoremMode::thm_a) {
      SubnormalizerData data = subnormalizer(g, x, p, bound);
      if (!data.x_subnormal_in_sub)
        throw HypothesisFailed("element is not subnormal in its subnormalizer");
    } else if (p_core_series(g, p).p_length > 1) {
      throw HypothesisFailed("p-length exceeds one");
    }
    aw.matching = strong_matching_or_throw(g, p, x, bound);
    return aw;
  }

  // Constructive route: glue the per-theta fibers over orbit representatives.
  ComplementContext ctx = make_complement_context(g, p, x, bound);
  PermGroup a(g.degree(), {x});

  std::vector<char> claimed((size_t)ctx.tn.size(), 0);
  for (int r = 0; r < ctx.tn.size(); ++r) {
    if (claimed[r]) continue;
    CharOrbit orb = character_orbit(ctx.g, ctx.tn, r);
    int rep = ctx.tn.size();
    for (int m : orb.orbit) {
      claimed[m] = 1;
      if (m < rep && is_invariant_row(ctx.tn, m, a)) rep = m;
    }
    if (rep == ctx.tn.size()) continue;  // no invariant member, no fiber
    FiberWitness fw = construct_bijection_normal_complement(ctx, rep);

    // Conjugation compatibility across the orbit: any other invariant
    // member is a p-part conjugate of the representative and its
    // correspondent is the conjugate of the representative's.
    for (int m : orb.orbit) {
      if (m == rep || !is_invariant_row(ctx.tn, m, a)) continue;
      Perm mover;
      bool found = false;
      for (const Perm& h : ctx.syl.elements()) {
        if (conjugate_class_function(ctx.tn.classes(), ctx.tn.irr(rep), h) ==
            ctx.tn.irr(m)) {
          mover = h;
          found = true;
          break;
        }
      }
      if (!found)
        throw TheoremViolation("orbit member unreachable inside the p-part");
      int src = ctx.corr.tg.index_of(ctx.tn.irr(m));
      CorrWitness wm = f_map(ctx.corr, src);
      ClassFunction moved = conjugate_class_function(
          ctx.tc.classes(), ctx.tc.irr(fw.phi), mover);
      if (ctx.corr.th.irr(wm.target) != moved)
        throw TheoremViolation("correspondents are not conjugation compatible");
    }
    aw.fibers.push_back(std::move(fw));
  }

  // Glue the fibers into the full nonvanishing bijection.
  int cx_g = ctx.tg.classes().class_of(x);
  int cx_s = ctx.ts.classes().class_of(x);
  std::set<int> seen_chi, seen_psi;
  for (const FiberWitness& fw : aw.fibers)
    for (const BijectionPair& pr : fw.pairs) {
      bool nz_g = !ctx.tg.irr(pr.chi)[cx_g].is_zero();
      bool nz_s = !ctx.ts.irr(pr.psi)[cx_s].is_zero();
      if (nz_g != nz_s)
        throw TheoremViolation("sign relation broken at the element");
      if (!nz_g) continue;
      if (!seen_chi.insert(pr.chi).second || !seen_psi.insert(pr.psi).second)
        throw TheoremViolation("character families overlap");
      aw.glued.pairing.push_back(pr);
    }
  std::vector<int> lx = irr_x(ctx.tg, x);
  std::vector<int> rx = irr_x(ctx.ts, x);
  if (seen_chi != std::set<int>(lx.begin(), lx.end()) ||
      seen_psi != std::set<int>(rx.begin(), rx.end()))
    throw TheoremViolation("fibers do not partition the nonvanishing sets");
  aw.glued.constructive = true;

  aw.matching = check_conjecture_with(ctx.tg, ctx.data, ConjectureMode::strong);
  if (!aw.matching.ok)
    throw TheoremViolation("matching cross-check failed: " + aw.matching.detail);
  return aw;
}

LemmaReport check_clifford_nonvanishing(const PermGroup& g, const Perm& x,
                                        uint64_t bound) {
  if (g.order() > bound)
    throw GroupTooLarge("order exceeds the brute-force bound");
  LemmaReport rep;
  CharTable tg = CharTable::compute(g);
  PermGroup a(g.degree(), {x});
  std::vector<int> lx = irr_x(tg, x);

  // Tables of inertia subgroups repeat heavily; cache them by element set.
  std::map<std::vector<Perm>, CharTable> table_cache;
  auto table_of = [&](const PermGroup& h) -> const CharTable& {
    std::vector<Perm> key = h.elements();
    std::sort(key.begin(), key.end());
    auto it = table_cache.find(key);
    if (it == table_cache.end()) {
      CharTable t = CharTable::compute(h);
      it = table_cache.emplace(std::move(key), std::move(t)).first;
    }
    return it->second;
  };

  for (const PermGroup& n : normal_subgroups(g)) {
    const CharTable& tn = table_of(n);
    std::map<int, CharOrbit> orbits;
    for (int chi : lx) {
      bool some_invariant = false, some_nonzero = false;
      for (const auto& [th, mult] : restriction_constituents(tg, chi, tn)) {
        if (!is_invariant_row(tn, th, a)) continue;
        some_invariant = true;
        auto it = orbits.find(th);
        if (it == orbits.end())
          it = orbits.emplace(th, character_orbit(g, tn, th)).first;
        const CharTable& tt = table_of(it->second.inertia);
        int psi = -1;
        for (int r : irr_over(tt, tn, th))
          if (induce_row(tt, r, tg.classes()) == tg.irr(chi)) {
            if (psi >= 0)
              throw UniquenessViolation("two distinct Clifford correspondents");
            psi = r;
          }
        if (psi < 0) {
          rep.violations.push_back("no Clifford correspondent above row " +
                                   std::to_string(th));
          continue;
        }
        if (!tt.irr(psi)[tt.classes().class_of(x)].is_zero()) {
          some_nonzero = true;
          break;
        }
      }
      rep.checked++;
      if (!some_invariant)
        rep.violations.push_back("no invariant constituent under row " +
                                 std::to_string(chi));
      else if (!some_nonzero)
        rep.violations.push_back(
            "every invariant-constituent correspondent vanishes under row " +
            std::to_string(chi));
    }
  }
  return rep;
}

LemmaReport check_invariant_constituents(const CoprimeContext& ctx) {
  LemmaReport rep;
  const CharTable& tg = ctx.tg;
  const CharTable& tn = ctx.tn;
  bool c_is_n = ctx.c.order() == ctx.n.order();
  bool c_is_g = ctx.c.order() == ctx.g.order();
  std::vector<Perm> cels = ctx.c.elements();

  // Restriction direction: a single c-orbit of invariant constituents.
  for (int chi = 0; chi < tg.size(); ++chi) {
    if (!is_invariant_row(tg, chi, ctx.a)) continue;
    std::set<int> invariant;
    for (const auto& [th, mult] : restriction_constituents(tg, chi, tn))
      if (is_invariant_row(tn, th, ctx.a)) invariant.insert(th);
    rep.checked++;
    if (invariant.empty()) {
      rep.violations.push_back("restriction of row " + std::to_string(chi) +
                               " has no invariant constituent");
      continue;
    }
    std::set<int> orbit;
    for (const Perm& cel : cels)
      orbit.insert(tn.index_of(
          conjugate_class_function(tn.classes(), tn.irr(*invariant.begin()),
                                   cel)));
    if (orbit != invariant)
      rep.violations.push_back("invariant constituents of row " +
                               std::to_string(chi) +
                               " are not a single orbit");
    if (c_is_n && invariant.size() != 1)
      rep.violations.push_back("constituent of row " + std::to_string(chi) +
                               " is not unique despite trivial fixed points");
  }

  // Induction direction: an invariant constituent above every invariant row.
  for (int th = 0; th < tn.size(); ++th) {
    if (!is_invariant_row(tn, th, ctx.a)) continue;
    int count = 0;
    for (int chi : irr_over(tg, tn, th))
      if (is_invariant_row(tg, chi, ctx.a)) count++;
    rep.checked++;
    if (count == 0)
      rep.violations.push_back("nothing invariant lies over row " +
                               std::to_string(th));
    if (c_is_n && count != 1)
      rep.violations.push_back("row " + std::to_string(th) +
                               " has several invariant covers despite trivial "
                               "fixed points");
  }

  // Full fixed points: invariance transfers both ways.
  if (c_is_g) {
    for (int chi = 0; chi < tg.size(); ++chi) {
      bool inv_chi = is_invariant_row(tg, chi, ctx.a);
      for (const auto& [th, mult] : restriction_constituents(tg, chi, tn)) {
        rep.checked++;
        if (is_invariant_row(tn, th, ctx.a) != inv_chi)
          rep.violations.push_back("invariance mismatch between rows " +
                                   std::to_string(chi) + " and " +
                                   std::to_string(th));
      }
    }
  }
  return rep;
}

std::vector<GeneratedContext> generate_coprime_contexts(
    uint64_t max_parent_order, uint64_t max_core_order) {
  std::vector<GeneratedContext> out;
  for (const NamedGroup& fix : standard_fixtures()) {
    const PermGroup& g = fix.group;
    if (g.order() > max_parent_order) continue;
    for (uint64_t p : prime_divisors(g.order())) {
      PermGroup core = p_prime_core(g, p);
      if (core.is_trivial() || core.order() > max_core_order) continue;
      std::vector<PermGroup> subs = all_subgroups(core);
      PermGroup dcore = derived_subgroup(core);
      for (const auto& cls : g.conjugacy_classes()) {
        const Perm& xr = cls.front();
        if (xr.is_identity() || !is_p_element(xr, p)) continue;
        PermGroup a(g.degree(), {xr});
        auto invariant = [&](const PermGroup& h) {
          for (const Perm& hg : h.generators())
            if (!h.contains(conjugate(hg, xr))) return false;
          return true;
        };
        PermGroup cfix = centralizer_of_group(core, a);
        std::string base = fix.name + " p=" + std::to_string(p) +
                           " x=" + xr.to_string();
        for (const PermGroup& h : subs) {
          if (!is_subgroup(cfix, h) || !invariant(h)) continue;
          out.push_back({base + " h=" + std::to_string(h.order()),
                         make_coprime_context(g, core, a, p,
                                              trivial_group(g.degree()), h)});
        }
        if (!dcore.is_trivial() && dcore.order() < core.order())
          out.push_back({base + " rel",
                         make_coprime_context(g, core, a, p, dcore)});
      }
    }
  }
  return out;
}

namespace {

// All Sylow p-subgroups of g through x; used for the centrality flag.
std::vector<PermGroup> sylows_through(const PermGroup& g, uint64_t p,
                                      const Perm& x) {
  PermGroup p0 = sylow_containing(g, p, x);
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  for (const Perm& y : g.elements()) {
    PermGroup q = conjugate_group(p0, y);
    if (!q.contains(x)) continue;
    std::vector<Perm> key = q.elements();
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(q);
  }
  return out;
}

void run_unit(UnitReport& rep, const std::string& file,
              const BatchFilters& filters) {
  GroupFile gf = load_group_file(file);
  rep.group_id = gf.name;
  const PermGroup& g = gf.group;
  if (g.order() > filters.max_order) {
    rep.error = "skipped: order " + std::to_string(g.order()) +
                " above the filter maximum";
    return;
  }
  if (rep.p == 2 && !filters.allow_even) {
    rep.error = "skipped: p = 2 checks need the even-prime opt-in";
    return;
  }
  CharTable tg = CharTable::compute(g);
  const ConjClasses& cls = tg.classes();
  for (int ci = 0; ci < cls.size(); ++ci) {
    const Perm& xr = cls.reps[ci];
    if (!is_p_element(xr, rep.p)) continue;
    auto t0 = std::chrono::steady_clock::now();
    InstanceRecord r;
    r.group_id = gf.name;
    r.group_order = g.order();
    r.p = rep.p;
    r.class_index = ci;
    r.x = xr.to_string();
    r.x_order = xr.order();

    SubnormalizerData d = subnormalizer(g, xr, rep.p, filters.bound);
    r.subset_size = d.subset_size;
    r.sub_order = d.sub.order();
    r.is_picky = d.is_picky;
    r.subset_is_subgroup = d.subset_is_subgroup;
    r.x_subnormal_in_sub = d.x_subnormal_in_sub;
    r.p_solvable = is_p_solvable(g, rep.p);
    r.p_length_one = r.p_solvable && p_core_series(g, rep.p).p_length <= 1;
    PermGroup n = p_prime_core(g, rep.p);
    r.normal_p_complement =
        n.order() * int_p_part(g.order(), rep.p) == g.order();

    PermGroup cent = centralizer(g, xr);
    r.central_in_sylow_join = true;
    for (const PermGroup& q : sylows_through(g, rep.p, xr))
      if (!is_subgroup(q, cent)) {
        r.central_in_sylow_join = false;
        break;
      }
    r.x_normal_in_sub = is_normal(PermGroup(g.degree(), {xr}), d.sub);

    if (r.sub_order == r.group_order && !r.x_subnormal_in_sub)
      r.note += "Sub = G, <x> not subnormal; ";
    if (r.central_in_sylow_join && !r.x_normal_in_sub)
      r.note += "central in Sylow join, <x> not normal in Sub; ";

    try {
      ConjectureOutcome out = check_conjecture_with(tg, d, filters.mode);
      r.irr_x_group = out.left;
      r.irr_x_sub = out.right;
      r.verdict = out.ok ? "pass" : "fail";
      if (!out.ok) {
        r.note += out.detail;
      } else {
        std::ostringstream os;
        for (const BijectionPair& pr : out.witness.pairing) {
          if (os.tellp() > 0) os << ",";
          os << pr.chi << ":" << pr.psi;
          if (pr.sign != 0) os << (pr.sign > 0 ? "+" : "-");
        }
        r.witness = os.str();
      }
    } catch (const HypothesisFailed& e) {
      r.verdict = "skipped";
      r.note += e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    rep.records.push_back(std::move(r));
  }
}

}  // namespace

BatchResult batch_run(const std::vector<std::string>& files,
                      const BatchFilters& filters) {
  BatchResult res;
  size_t nprimes = filters.primes.size();
  res.units.resize(files.size() * nprimes);
  for (size_t u = 0; u < res.units.size(); ++u) {
    res.units[u].file = files[u / nprimes];
    res.units[u].p = filters.primes[u % nprimes];
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t u = next++; u < res.units.size(); u = next++) {
      try {
        run_unit(res.units[u], res.units[u].file, filters);
      } catch (const std::exception& e) {
        res.units[u].error = e.what();
      }
    }
  };
  int nw = std::max(1, std::min<int>(filters.workers, (int)res.units.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < nw; ++i) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  for (const UnitReport& u : res.units) {
    if (!u.error.empty() && u.error.rfind("skipped:", 0) != 0)
      res.all_pass = false;
    for (const InstanceRecord& r : u.records)
      if (r.verdict == "fail") {
        res.all_pass = false;
        res.had_violation = true;
      }
  }
  return res;
}

std::string render_record(const InstanceRecord& r) {
  std::ostringstream os;
  os << "group=" << r.group_id << " order=" << r.group_order << " p=" << r.p
     << " class=" << r.class_index << " x=" << r.x << " |x|=" << r.x_order
     << " subset=" << r.subset_size << " sub=" << r.sub_order
     << " picky=" << r.is_picky << " subgroup=" << r.subset_is_subgroup
     << " subnormal=" << r.x_subnormal_in_sub << " psolv=" << r.p_solvable
     << " plen1=" << r.p_length_one << " npc=" << r.normal_p_complement
     << " irrx=" << r.irr_x_group << "/" << r.irr_x_sub
     << " verdict=" << r.verdict;
  if (!r.note.empty()) os << " note=\"" << r.note << "\"";
  if (!r.witness.empty()) os << " witness=" << r.witness;
  os << " t=" << r.seconds;
  return os.str();
}

std::string render_report(const BatchResult& b) {
  std::ostringstream os;
  for (const UnitReport& u : b.units) {
    if (!u.error.empty()) {
      os << "file=" << u.file << " p=" << u.p << " status=\"" << u.error
         << "\"\n";
      continue;
    }
    for (const InstanceRecord& r : u.records) os << render_record(r) << "\n";
  }
  os << (b.all_pass         ? "RESULT all checks pass"
         : b.had_violation  ? "RESULT violations found"
                            : "RESULT ingestion errors")
     << "\n";
  return os.str();
}

}  // namespace subcorr
