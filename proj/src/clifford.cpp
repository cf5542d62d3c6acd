#include "subcorr/clifford.hpp"

#include "subcorr/errors.hpp"

namespace subcorr {

CharOrbit character_orbit(const PermGroup& g, const CharTable& tn, int theta) {
  if (!is_normal(tn.group(), g))
    throw NotNormal("character orbits need a normal subgroup");
  auto act = [&tn](int i, const Perm& s) {
    ClassFunction tw = conjugate_class_function(tn.classes(), tn.irr(i), s);
    int j = tn.index_of(tw);
    if (j < 0) throw Error("conjugate of an irreducible row is missing");
    return j;
  };
  auto [orbit, stab] = orbit_stabilizer(g, theta, act);
  return {orbit, stab};
}

std::vector<std::pair<int, uint64_t>> restriction_constituents(
    const CharTable& tbig, int chi, const CharTable& tsub) {
  auto fusion = class_fusion(tsub.classes(), tbig.classes());
  ClassFunction res = restrict_class_function(tbig.irr(chi), fusion);
  std::vector<std::pair<int, uint64_t>> out;
  for (int j = 0; j < tsub.size(); ++j) {
    Cyclotomic m = inner_product(tsub.classes(), res, tsub.irr(j));
    if (m.is_zero()) continue;
    if (!m.is_integer())
      throw Error("restriction multiplicity is not an integer");
    out.push_back({j, (uint64_t)m.to_rational().get_num().get_ui()});
  }
  return out;
}

std::vector<int> irr_over(const CharTable& tbig, const CharTable& tsub,
                          int theta) {
  auto fusion = class_fusion(tsub.classes(), tbig.classes());
  std::vector<int> out;
  for (int i = 0; i < tbig.size(); ++i) {
    ClassFunction res = restrict_class_function(tbig.irr(i), fusion);
    if (!inner_product(tsub.classes(), res, tsub.irr(theta)).is_zero())
      out.push_back(i);
  }
  return out;
}

ClassFunction induce_row(const CharTable& tsub, int psi,
                         const ConjClasses& bigcls) {
  return induce_class_function(tsub.classes(), bigcls, tsub.irr(psi));
}

int induce_irr(const CharTable& tsub, int psi, const CharTable& tbig) {
  ClassFunction ind = induce_row(tsub, psi, tbig.classes());
  int idx = tbig.index_of(ind);
  if (idx < 0) throw NotIrreducible("induced character is reducible");
  return idx;
}

std::vector<int> extensions_of(const CharTable& tt, const CharTable& tn,
                               int theta) {
  auto fusion = class_fusion(tn.classes(), tt.classes());
  std::vector<int> out;
  for (int i = 0; i < tt.size(); ++i) {
    if (tt.degree(i) != tn.degree(theta)) continue;
    if (restrict_class_function(tt.irr(i), fusion) == tn.irr(theta))
      out.push_back(i);
  }
  return out;
}

int canonical_extension(const CharTable& tt, const CharTable& tn, int theta,
                        uint64_t p) {
  auto ext = extensions_of(tt, tn, theta);
  if (ext.empty()) throw NoExtension("character does not extend");
  std::vector<int> good;
  for (int i : ext) {
    uint64_t o = linear_character_order(tt.classes(),
                                        determinant_character(tt, i));
    if (o % p != 0) good.push_back(i);
  }
  if (good.size() != 1)
    throw UniquenessViolation("p'-determinant extension count is " +
                              std::to_string(good.size()));
  return good[0];
}

ClassFunction lift_class_function(const CosetAction& ca,
                                  const ConjClasses& bigcls,
                                  const ClassFunction& fq,
                                  const ConjClasses& qcls) {
  ClassFunction out(bigcls.size());
  for (int k = 0; k < bigcls.size(); ++k)
    out[k] = fq[qcls.class_of(ca.image(bigcls.reps[k]))];
  return out;
}

}  // namespace subcorr
