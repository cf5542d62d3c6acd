#include "subcorr/glauberman.hpp"

#include <algorithm>

#include "subcorr/numutil.hpp"

namespace subcorr {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw HypothesisFailed(msg);
}

bool normalizes(const PermGroup& a, const PermGroup& g) {
  for (const Perm& s : a.generators())
    for (const Perm& x : g.generators())
      if (!g.contains(conjugate(x, s))) return false;
  return true;
}

// Elements of g whose commutator with every generator of a falls in n:
// the preimage of the fixed points of a on g/n. With n trivial this is
// the plain fixed-point subgroup.
PermGroup fixed_points(const PermGroup& g, const PermGroup& a,
                       const PermGroup& n) {
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool ok = true;
    for (const Perm& s : a.generators())
      if (!n.contains(commutator(x, s))) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(x);
  }
  return group_from_elements(g.degree(), kept);
}

CoprimeContext build(const PermGroup& parent, const PermGroup& g,
                     const PermGroup& a, uint64_t p, const PermGroup& n,
                     const PermGroup* h) {
  require(is_prime(p), "p must be prime");
  require(is_subgroup(g, parent) && is_subgroup(a, parent),
          "g and a must sit inside the parent group");
  require(a.is_p_group(p), "acting group must be a p-group");
  require(normalizes(a, g), "acting group must normalize g");
  require(intersection(a, g).is_trivial(), "action must meet g trivially");
  require(is_subgroup(n, g) && is_normal(n, g), "n must be normal in g");
  require(normalizes(a, n), "n must be invariant under the action");
  require(int_p_part(g.order() / n.order(), p) == 1,
          "index of n in g must be prime to p");

  CoprimeContext ctx;
  ctx.parent = parent;
  ctx.g = g;
  ctx.a = a;
  ctx.n = n;
  ctx.p = p;
  ctx.c = fixed_points(g, a, n);
  ctx.h = h ? *h : ctx.c;
  require(is_subgroup(ctx.c, ctx.h) && is_subgroup(ctx.h, g),
          "need c <= h <= g");
  require(normalizes(a, ctx.h), "h must be invariant under the action");
  ctx.tg = CharTable::compute(g);
  ctx.tn = CharTable::compute(ctx.n);
  ctx.tc = CharTable::compute(ctx.c);
  ctx.th = CharTable::compute(ctx.h);
  return ctx;
}

ClassFunction restrict_to(const CharTable& tbig, int row,
                          const CharTable& tsub) {
  return restrict_class_function(
      tbig.irr(row), class_fusion(tsub.classes(), tbig.classes()));
}

uint64_t integer_value(const Cyclotomic& x) {
  if (!x.is_integer()) throw NotACharacter("inner product is not an integer");
  return x.to_rational().get_num().get_ui();
}

// Splits the decomposition of `moved` in tdst as e*target + p*delta + xi:
// target is the unique invariant constituent of multiplicity prime to p,
// xi collects the non-invariant ones of multiplicity prime to p, delta
// absorbs the rest with multiplicities divided by p.
CorrWitness extract_witness(const CoprimeContext& ctx, int src,
                            const CharTable& tdst, const ClassFunction& moved,
                            bool check_over_n) {
  std::vector<uint64_t> mult = decompose(tdst, moved);
  CorrWitness w;
  w.source = src;
  for (int j = 0; j < tdst.size(); ++j) {
    uint64_t m = mult[j];
    if (m == 0) continue;
    bool inv = is_invariant_row(tdst, j, ctx.a);
    if (inv && m % ctx.p != 0) {
      if (w.target != -1)
        throw UniquenessViolation(
            "several invariant constituents of multiplicity prime to p");
      w.target = j;
      w.e = m;
    } else if (!inv && m % ctx.p != 0) {
      w.xi.push_back({j, m});
    } else {
      w.delta.push_back({j, m / ctx.p});
    }
  }
  if (w.target == -1)
    throw UniquenessViolation(
        "no invariant constituent of multiplicity prime to p");
  uint64_t r = w.e % ctx.p;
  if (r != 1 % ctx.p && r != ctx.p - 1)
    throw TheoremViolation("leading multiplicity is not +-1 mod p");
  if (check_over_n) {
    for (const auto& [j, m] : w.xi) {
      (void)m;
      for (const auto& [k, mk] : restriction_constituents(tdst, j, ctx.tn)) {
        (void)mk;
        if (is_invariant_row(ctx.tn, k, ctx.a))
          throw TheoremViolation(
              "xi constituent lies over an invariant character of n");
      }
    }
  }
  return w;
}

CoprimeContext subgroup_context(const CoprimeContext& ctx) {
  CoprimeContext sub =
      ctx.plain()
          ? make_coprime_context(ctx.parent, ctx.h, ctx.a, ctx.p)
          : make_coprime_context(ctx.parent, ctx.h, ctx.a, ctx.p, ctx.n);
  // The fixed points of the action on h form the same subgroup c.
  require(equal_groups(sub.c, ctx.c), "fixed points in h must equal c");
  return sub;
}

}  // namespace

CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p) {
  return build(parent, g, a, p, trivial_group(g.degree()), nullptr);
}

CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p,
                                    const PermGroup& n) {
  return build(parent, g, a, p, n, nullptr);
}

CoprimeContext make_coprime_context(const PermGroup& parent, const PermGroup& g,
                                    const PermGroup& a, uint64_t p,
                                    const PermGroup& n, const PermGroup& h) {
  return build(parent, g, a, p, n, &h);
}

bool is_invariant_row(const CharTable& t, int row, const PermGroup& a) {
  for (const Perm& s : a.generators())
    if (conjugate_class_function(t.classes(), t.irr(row), s) != t.irr(row))
      return false;
  return true;
}

std::vector<int> invariant_rows(const CharTable& t, const PermGroup& a) {
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i)
    if (is_invariant_row(t, i, a)) out.push_back(i);
  return out;
}

CorrWitness glauberman_correspondent(const CoprimeContext& ctx, int theta) {
  require(ctx.plain(), "classical correspondent requires a fully coprime action");
  require(is_invariant_row(ctx.tg, theta, ctx.a),
          "character must be invariant under the action");
  return extract_witness(ctx, theta, ctx.tc, restrict_to(ctx.tg, theta, ctx.tc),
                         false);
}

CorrWitness relative_glauberman(const CoprimeContext& ctx, int chi) {
  require(is_invariant_row(ctx.tg, chi, ctx.a),
          "character must be invariant under the action");
  return extract_witness(ctx, chi, ctx.tc, restrict_to(ctx.tg, chi, ctx.tc),
                         !ctx.plain());
}

CorrWitness f_map(const CoprimeContext& ctx, int theta) {
  require(is_invariant_row(ctx.tg, theta, ctx.a),
          "character must be invariant under the action");
  return extract_witness(ctx, theta, ctx.th, restrict_to(ctx.tg, theta, ctx.th),
                         false);
}

CorrWitness f_reverse(const CoprimeContext& ctx, int tau) {
  require(is_invariant_row(ctx.th, tau, ctx.a),
          "character must be invariant under the action");
  ClassFunction moved =
      induce_class_function(ctx.th.classes(), ctx.tg.classes(), ctx.th.irr(tau));
  CorrWitness w = extract_witness(ctx, tau, ctx.tg, moved, false);
  if (f_map(ctx, w.target).target != tau)
    throw TheoremViolation("reverse witness does not invert the forward map");
  return w;
}

StarCompatReport verify_star_compatibility(const CoprimeContext& ctx,
                                           int theta) {
  StarCompatReport rep;
  rep.theta = theta;

  CorrWitness wf = f_map(ctx, theta);
  rep.phi = wf.target;
  rep.ip_theta_h = wf.e;

  CorrWitness ws = relative_glauberman(ctx, theta);
  rep.theta_star = ws.target;
  rep.ip_theta_c = ws.e;

  CoprimeContext sub = subgroup_context(ctx);
  int phi_in_sub = sub.tg.index_of(ctx.th.irr(wf.target));
  require(phi_in_sub >= 0, "correspondent missing from subgroup table");
  CorrWitness wp = relative_glauberman(sub, phi_in_sub);
  rep.phi_star = ctx.tc.index_of(sub.tc.irr(wp.target));
  rep.stars_equal = rep.phi_star == rep.theta_star;

  ClassFunction phi_c = restrict_to(ctx.th, wf.target, ctx.tc);
  rep.ip_phi_c = integer_value(
      inner_product(ctx.tc.classes(), phi_c, ctx.tc.irr(rep.theta_star)));
  rep.congruence =
      rep.ip_theta_c % ctx.p == (rep.ip_theta_h * rep.ip_phi_c) % ctx.p;
  return rep;
}

InertiaReport inertia_equality(const CoprimeContext& ctx, int theta,
                               const PermGroup& a_full) {
  require(is_subgroup(a_full, ctx.parent), "a_full must sit inside the parent");
  require(normalizes(a_full, ctx.g) && normalizes(a_full, ctx.h) &&
              normalizes(a_full, ctx.n),
          "a_full must normalize the context subgroups");
  require(is_subgroup(ctx.a, a_full) && is_subnormal(ctx.a, a_full),
          "acting group must be subnormal in a_full");

  CorrWitness wf = f_map(ctx, theta);
  const ClassFunction& phi_row = ctx.th.irr(wf.target);

  auto act_g = [&](int row, const Perm& y) {
    return ctx.tg.index_of(
        conjugate_class_function(ctx.tg.classes(), ctx.tg.irr(row), y));
  };
  auto act_h = [&](int row, const Perm& y) {
    return ctx.th.index_of(
        conjugate_class_function(ctx.th.classes(), ctx.th.irr(row), y));
  };
  PermGroup stab_theta = orbit_stabilizer(a_full, theta, act_g).second;
  PermGroup stab_phi = orbit_stabilizer(a_full, wf.target, act_h).second;

  InertiaReport rep;
  rep.stab_theta_order = stab_theta.order();
  rep.stab_phi_order = stab_phi.order();
  rep.stabilizers_equal = equal_groups(stab_theta, stab_phi);

  for (const Perm& y : stab_theta.elements()) {
    if (!is_p_element(y, ctx.p)) continue;
    PermGroup dy(ctx.parent.degree(), {y});
    if (!is_subgroup(fixed_points(ctx.g, dy, ctx.n), ctx.h)) continue;
    rep.swept++;
    CoprimeContext cty =
        make_coprime_context(ctx.parent, ctx.g, dy, ctx.p, ctx.n, ctx.h);
    int th_idx = cty.tg.index_of(ctx.tg.irr(theta));
    CorrWitness wy = f_map(cty, th_idx);
    if (cty.th.irr(wy.target) != phi_row) rep.sweeps_match = false;
  }
  return rep;
}

}  // namespace subcorr
