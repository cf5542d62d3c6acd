#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subcorr/clifford.hpp"

using namespace subcorr;

namespace {

PermGroup klein_in(int degree) {
  return PermGroup(degree, {perm_from_cycles(degree, {{1, 2}, {3, 4}}),
                            perm_from_cycles(degree, {{1, 3}, {2, 4}})});
}

}  // namespace

TEST_CASE("orbits and inertia of Klein-four characters") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_in(4);
  CharTable tv = CharTable::compute(v4);
  int nontrivial = -1;
  for (int i = 0; i < tv.size(); ++i)
    if (tv.irr(i) != trivial_character(tv.size())) {
      nontrivial = i;
      break;
    }
  REQUIRE(nontrivial >= 0);

  CharOrbit in_s4 = character_orbit(s4, tv, nontrivial);
  CHECK(in_s4.orbit.size() == 3);
  CHECK(in_s4.inertia.order() == 8);
  CHECK(is_subgroup(v4, in_s4.inertia));

  CharOrbit in_a4 = character_orbit(a4, tv, nontrivial);
  CHECK(in_a4.orbit.size() == 3);
  CHECK(equal_groups(in_a4.inertia, v4));

  CharOrbit triv_orbit = character_orbit(s4, tv, tv.trivial_index());
  CHECK(triv_orbit.orbit.size() == 1);
  CHECK(triv_orbit.inertia.order() == 24);

  PermGroup c3(4, {perm_from_cycles(4, {{1, 2, 3}})});
  CHECK_THROWS_AS(character_orbit(s4, CharTable::compute(c3), 0), NotNormal);
}

TEST_CASE("clifford decomposition of restrictions to a normal subgroup") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = klein_in(4);
  CharTable ts = CharTable::compute(s4);
  CharTable tv = CharTable::compute(v4);
  for (int i = 0; i < ts.size(); ++i) {
    auto parts = restriction_constituents(ts, i, tv);
    // all multiplicities equal, constituents form one orbit
    uint64_t e = parts.front().second;
    uint64_t span = 0;
    for (auto& [j, m] : parts) {
      CHECK(m == e);
      span += m * tv.degree(j);
    }
    CHECK(span == ts.degree(i));
    CharOrbit orb = character_orbit(s4, tv, parts.front().first);
    CHECK(orb.orbit.size() == parts.size());
  }
}

TEST_CASE("clifford correspondence by induction from the inertia group") {
  // theta nontrivial on V4 inside A4: inertia is V4 itself, induction is
  // irreducible of degree 3
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_in(4);
  CharTable ta = CharTable::compute(a4);
  CharTable tv = CharTable::compute(v4);
  int theta = tv.trivial_index() == 0 ? 1 : 0;
  int chi = induce_irr(tv, theta, ta);
  CHECK(ta.degree(chi) == 3);
  auto over = irr_over(ta, tv, theta);
  CHECK(over == std::vector<int>{chi});

  // nontrivial linear of C3 inside S3 induces the reflection character
  PermGroup s3 = symmetric_group(3);
  PermGroup c3(3, {perm_from_cycles(3, {{1, 2, 3}})});
  CharTable ts3 = CharTable::compute(s3);
  CharTable tc3 = CharTable::compute(c3);
  int lin = tc3.trivial_index() == 0 ? 1 : 0;
  int two = induce_irr(tc3, lin, ts3);
  CHECK(ts3.degree(two) == 2);
  // the trivial character of C3 induces reducibly
  CHECK_THROWS_AS(induce_irr(tc3, tc3.trivial_index(), ts3), NotIrreducible);
}

TEST_CASE("extensions of an invariant character") {
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_in(4);
  CharTable ta = CharTable::compute(a4);
  CharTable tv = CharTable::compute(v4);
  // the trivial character of V4 has three extensions: the linears of A4
  auto ext = extensions_of(ta, tv, tv.trivial_index());
  CHECK(ext.size() == 3);
  for (int i : ext) CHECK(ta.degree(i) == 1);
  // canonical extension for p=3 is the trivial character of A4
  int canon = canonical_extension(ta, tv, tv.trivial_index(), 3);
  CHECK(canon == ta.trivial_index());
  // a nontrivial linear of V4 is not A4-invariant and cannot extend
  int theta = tv.trivial_index() == 0 ? 1 : 0;
  CHECK_THROWS_AS(canonical_extension(ta, tv, theta, 3), NoExtension);
}

TEST_CASE("canonical extension picks the p-prime determinant") {
  PermGroup c6 = cyclic_group(6);
  Perm g = c6.generators()[0];
  PermGroup c3(6, {g * g});
  CharTable t6 = CharTable::compute(c6);
  CharTable t3 = CharTable::compute(c3);
  int theta = t3.trivial_index() == 0 ? 1 : 0;
  auto ext = extensions_of(t6, t3, theta);
  CHECK(ext.size() == 2);
  int canon = canonical_extension(t6, t3, theta, 2);
  CHECK(linear_character_order(t6.classes(), t6.irr(canon)) == 3);
  uint64_t other = 0;
  for (int i : ext)
    if (i != canon) other = linear_character_order(t6.classes(), t6.irr(i));
  CHECK(other == 6);
}

TEST_CASE("quotient lifts multiply into the fiber over the trivial row") {
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_in(4);
  CharTable ta = CharTable::compute(a4);
  CosetAction ca = coset_action(a4, v4);
  CharTable tq = CharTable::compute(ca.quotient);
  CHECK(tq.size() == 3);
  std::vector<ClassFunction> lifted;
  for (int i = 0; i < tq.size(); ++i)
    lifted.push_back(lift_class_function(ca, ta.classes(), tq.irr(i),
                                         tq.classes()));
  // the lifts are exactly the rows of A4 over the trivial character of V4,
  // i.e. Gallagher products trivial-extension * beta
  CharTable tv = CharTable::compute(v4);
  auto over = irr_over(ta, tv, tv.trivial_index());
  REQUIRE(over.size() == 3);
  for (int i : over) {
    bool found = false;
    for (const auto& f : lifted) found = found || f == ta.irr(i);
    CHECK(found);
  }
}
