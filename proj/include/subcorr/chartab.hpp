#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "subcorr/cyclo.hpp"
#include "subcorr/perm.hpp"

namespace subcorr {

// Conjugacy class data: classes are ordered by their lex-least
// representative, so the identity class is always index 0.
struct ConjClasses {
  PermGroup group;
  std::vector<Perm> reps;
  std::vector<uint64_t> sizes;
  std::vector<uint64_t> orders;
  std::vector<int> inverse_class;

  static ConjClasses of(const PermGroup& g,
                        uint64_t bound = PermGroup::kEnumBound);

  int size() const { return (int)reps.size(); }
  int class_of(const Perm& x) const;             // throws NotAMember
  int power_class(int k, long long m) const;
  uint64_t exponent() const;

 private:
  std::map<Perm, int> index_;
};

// Class function: one exact cyclotomic value per conjugacy class.
using ClassFunction = std::vector<Cyclotomic>;

// Exact character table. Rows are sorted by degree, then by value order,
// so equal tables compare equal entrywise.
class CharTable {
 public:
  static constexpr uint64_t kOrderBound = 2000;
  static CharTable compute(const PermGroup& g);

  const ConjClasses& classes() const { return classes_; }
  const PermGroup& group() const { return classes_.group; }
  int size() const { return (int)irr_.size(); }
  const std::vector<ClassFunction>& rows() const { return irr_; }
  const ClassFunction& irr(int i) const { return irr_[i]; }
  uint64_t degree(int i) const;
  int index_of(const ClassFunction& f) const;    // -1 if no such row
  int trivial_index() const;

 private:
  ConjClasses classes_;
  std::vector<ClassFunction> irr_;
};

Cyclotomic inner_product(const ConjClasses& cls, const ClassFunction& f,
                         const ClassFunction& h);
bool is_irreducible_character(const ConjClasses& cls, const ClassFunction& f);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const ClassFunction& a, const Rational& q);
ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b);
bool cf_is_zero(const ClassFunction& a);

ClassFunction trivial_character(int nclasses);
ClassFunction regular_character(const ConjClasses& cls);

// Index map sending each class of sub to the class of big containing it.
std::vector<int> class_fusion(const ConjClasses& sub, const ConjClasses& big);
ClassFunction restrict_class_function(const ClassFunction& f,
                                      const std::vector<int>& fusion);
ClassFunction induce_class_function(const ConjClasses& sub,
                                    const ConjClasses& big,
                                    const ClassFunction& f);

// Multiplicities of f in the irreducible basis; throws NotACharacter
// unless every multiplicity is a nonnegative integer.
std::vector<uint64_t> decompose(const CharTable& t, const ClassFunction& f);
// Integer multiplicities, negative allowed; throws NotACharacter unless
// every multiplicity is an integer.
std::vector<long long> decompose_virtual(const CharTable& t,
                                         const ClassFunction& f);

// f^g with f a class function of cls.group and g normalizing it:
// (f^g)(x) = f(g x g^-1).
ClassFunction conjugate_class_function(const ConjClasses& cls,
                                       const ClassFunction& f, const Perm& g);
// Entrywise Galois image; j must be a unit modulo every value conductor.
ClassFunction galois_class_function(const ClassFunction& f, long j);

// Determinant of a representation affording irr(i), as a linear character.
ClassFunction determinant_character(const CharTable& t, int i);
uint64_t linear_character_order(const ConjClasses& cls,
                                const ClassFunction& lam);

}  // namespace subcorr
