#pragma once

#include "subcorr/chartab.hpp"

namespace subcorr {

// Orbit of a character of a normal subgroup under conjugation, with its
// inertia group. Orbit entries are row indices of the subgroup table.
struct CharOrbit {
  std::vector<int> orbit;
  PermGroup inertia;
};
CharOrbit character_orbit(const PermGroup& g, const CharTable& tn, int theta);

// Decomposition of irr(chi) restricted to the subgroup: (row, mult) pairs
// with positive multiplicity.
std::vector<std::pair<int, uint64_t>> restriction_constituents(
    const CharTable& tbig, int chi, const CharTable& tsub);

// Rows of tbig lying over irr(theta) of tsub.
std::vector<int> irr_over(const CharTable& tbig, const CharTable& tsub,
                          int theta);

ClassFunction induce_row(const CharTable& tsub, int psi,
                         const ConjClasses& bigcls);
// Index of the induced character in tbig; throws NotIrreducible if the
// induction is reducible.
int induce_irr(const CharTable& tsub, int psi, const CharTable& tbig);

// Rows of tt whose restriction to tsub.group equals irr(theta) exactly.
std::vector<int> extensions_of(const CharTable& tt, const CharTable& tn,
                               int theta);

// The unique extension whose determinant has order prime to p. Throws
// NoExtension when theta does not extend, UniquenessViolation when the
// p'-determinant condition does not pin down a single row.
int canonical_extension(const CharTable& tt, const CharTable& tn, int theta,
                        uint64_t p);

// Pullback of a class function of the quotient through the coset action.
ClassFunction lift_class_function(const CosetAction& ca,
                                  const ConjClasses& bigcls,
                                  const ClassFunction& fq,
                                  const ConjClasses& qcls);

}  // namespace subcorr
