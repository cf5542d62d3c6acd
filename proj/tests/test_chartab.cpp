#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "subcorr/chartab.hpp"
#include "support/table_oracle.hpp"

using namespace subcorr;

namespace {

PermGroup frobenius21() {
  // C7 : C3, the conjugating generator cubes as x -> 2x mod 7
  Perm a = perm_from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}});
  Perm b = perm_from_cycles(7, {{2, 3, 5}, {4, 7, 6}});
  return PermGroup(7, {a, b});
}

std::vector<uint64_t> degrees_of(const CharTable& t) {
  std::vector<uint64_t> d;
  for (int i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
  return d;
}

}  // namespace

TEST_CASE("tables match the exhaustive-search oracle") {
  std::vector<PermGroup> groups = {symmetric_group(3), symmetric_group(4),
                                   alternating_group(4), dihedral_group(4),
                                   quaternion_group(),  frobenius21(),
                                   alternating_group(5)};
  for (const PermGroup& g : groups) {
    CAPTURE(g.order());
    CharTable t = CharTable::compute(g);
    auto expected = oracle::brute_force_rows(g);
    REQUIRE(t.rows().size() == expected.size());
    CHECK(t.rows() == expected);
  }
}

TEST_CASE("degree multisets of the standard small groups") {
  CHECK(degrees_of(CharTable::compute(symmetric_group(3))) ==
        std::vector<uint64_t>{1, 1, 2});
  CHECK(degrees_of(CharTable::compute(symmetric_group(4))) ==
        std::vector<uint64_t>{1, 1, 2, 3, 3});
  CHECK(degrees_of(CharTable::compute(alternating_group(4))) ==
        std::vector<uint64_t>{1, 1, 1, 3});
  CHECK(degrees_of(CharTable::compute(alternating_group(5))) ==
        std::vector<uint64_t>{1, 3, 3, 4, 5});
  CHECK(degrees_of(CharTable::compute(dihedral_group(4))) ==
        std::vector<uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees_of(CharTable::compute(quaternion_group())) ==
        std::vector<uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees_of(CharTable::compute(frobenius21())) ==
        std::vector<uint64_t>{1, 1, 1, 3, 3});
  CHECK(degrees_of(CharTable::compute(symmetric_group(6))) ==
        std::vector<uint64_t>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
}

TEST_CASE("galois action permutes values along power maps") {
  for (const PermGroup& g :
       {alternating_group(5), frobenius21(), quaternion_group()}) {
    CharTable t = CharTable::compute(g);
    const ConjClasses& cls = t.classes();
    long e = (long)cls.exponent();
    for (long j = 1; j < e; ++j) {
      if (std::gcd(j, e) != 1) continue;
      for (int i = 0; i < t.size(); ++i) {
        ClassFunction lhs = galois_class_function(t.irr(i), j);
        for (int k = 0; k < cls.size(); ++k)
          CHECK(lhs[k] == t.irr(i)[cls.power_class(k, j)]);
      }
    }
  }
}

TEST_CASE("frobenius reciprocity holds exactly") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  CharTable ts4 = CharTable::compute(s4);
  CharTable ta4 = CharTable::compute(a4);
  for (int i = 0; i < ta4.size(); ++i) {
    ClassFunction ind = induce_class_function(ta4.classes(), ts4.classes(),
                                              ta4.irr(i));
    CHECK(ind[0] == Cyclotomic(2 * (long)ta4.degree(i)));
    for (int j = 0; j < ts4.size(); ++j) {
      ClassFunction res = restrict_class_function(
          ts4.irr(j), class_fusion(ta4.classes(), ts4.classes()));
      CHECK(inner_product(ts4.classes(), ind, ts4.irr(j)) ==
            inner_product(ta4.classes(), ta4.irr(i), res));
    }
  }
}

TEST_CASE("induction from a point stabilizer decomposes as known") {
  PermGroup s3 = symmetric_group(3);
  PermGroup c3(3, {perm_from_cycles(3, {{1, 2, 3}})});
  PermGroup c2(3, {perm_from_cycles(3, {{1, 2}})});
  CharTable t = CharTable::compute(s3);
  ConjClasses cls3 = ConjClasses::of(c3), cls2 = ConjClasses::of(c2);
  // Ind from C3 of trivial = trivial + sign; from C2 = trivial + 2-dim
  ClassFunction from_c3 =
      induce_class_function(cls3, t.classes(), trivial_character(cls3.size()));
  ClassFunction from_c2 =
      induce_class_function(cls2, t.classes(), trivial_character(cls2.size()));
  std::vector<uint64_t> want_c3(3, 0), want_c2(3, 0);
  want_c3[t.trivial_index()] = 1;
  want_c3[1 - t.trivial_index()] = 1;  // the other linear: sign
  want_c2[t.trivial_index()] = 1;
  want_c2[2] = 1;                      // the degree-2 row sorts last
  CHECK(decompose(t, from_c3) == want_c3);
  CHECK(decompose(t, from_c2) == want_c2);
  CHECK(decompose(t, regular_character(t.classes())) ==
        std::vector<uint64_t>{1, 1, 2});
}

TEST_CASE("decompose rejects non-characters") {
  CharTable t = CharTable::compute(symmetric_group(3));
  ClassFunction half = cf_scale(trivial_character(3), Rational(1, 2));
  CHECK_THROWS_AS(decompose(t, half), NotACharacter);
  ClassFunction diff = cf_sub(t.irr(0), t.irr(2));
  CHECK_THROWS_AS(decompose(t, diff), NotACharacter);  // negative mult
  CHECK(decompose_virtual(t, diff) == std::vector<long long>{1, 0, -1});
}

TEST_CASE("determinant characters and their orders") {
  PermGroup s4 = symmetric_group(4);
  CharTable t = CharTable::compute(s4);
  const ConjClasses& cls = t.classes();
  int transposition = cls.class_of(perm_from_cycles(4, {{1, 2}}));
  for (int i = 0; i < t.size(); ++i) {
    uint64_t d = t.degree(i);
    ClassFunction det = determinant_character(t, i);
    CHECK(is_irreducible_character(cls, det));
    CHECK(det[0] == Cyclotomic(1));
    if (d == 3) {
      // standard rep has det = sign, its sign-twist has trivial det
      bool standard = t.irr(i)[transposition] == Cyclotomic(1);
      CHECK(linear_character_order(cls, det) == (standard ? 2u : 1u));
    }
  }
  CharTable q8 = CharTable::compute(quaternion_group());
  std::vector<uint64_t> orders;
  for (int i = 0; i < q8.size(); ++i)
    if (q8.degree(i) == 1)
      orders.push_back(linear_character_order(q8.classes(), q8.irr(i)));
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<uint64_t>{1, 2, 2, 2});
}

TEST_CASE("conjugation permutes the linear characters of A4") {
  PermGroup a4 = alternating_group(4);
  CharTable t = CharTable::compute(a4);
  Perm outer = perm_from_cycles(4, {{1, 2}});
  int moved = 0, fixed = 0;
  for (int i = 0; i < t.size(); ++i) {
    ClassFunction tw = conjugate_class_function(t.classes(), t.irr(i), outer);
    int j = t.index_of(tw);
    REQUIRE(j >= 0);
    if (j == i)
      ++fixed;
    else
      ++moved;
  }
  CHECK(fixed == 2);  // trivial and the 3-dim are stable
  CHECK(moved == 2);  // the two faithful linears swap
  Perm inner = perm_from_cycles(4, {{1, 2, 3}});
  for (int i = 0; i < t.size(); ++i)
    CHECK(conjugate_class_function(t.classes(), t.irr(i), inner) == t.irr(i));
}

TEST_CASE("class bookkeeping") {
  ConjClasses cls = ConjClasses::of(symmetric_group(4));
  CHECK(cls.exponent() == 12);
  int four = cls.class_of(perm_from_cycles(4, {{1, 2, 3, 4}}));
  int twotwo = cls.class_of(perm_from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(cls.power_class(four, 2) == twotwo);
  CHECK(cls.power_class(four, -1) == four);
  CHECK(cls.inverse_class[four] == four);
  uint64_t total = 0;
  for (uint64_t s : cls.sizes) total += s;
  CHECK(total == 24);
  ConjClasses alt = ConjClasses::of(alternating_group(4));
  CHECK_THROWS_AS(alt.class_of(perm_from_cycles(4, {{1, 2}})), NotAMember);
}

TEST_CASE("table row lookup") {
  CharTable t = CharTable::compute(symmetric_group(3));
  CHECK(t.trivial_index() >= 0);
  CHECK(t.index_of(t.irr(2)) == 2);
  ClassFunction bogus(3, Cyclotomic(7));
  CHECK(t.index_of(bogus) == -1);
}
