#pragma once

#include <stdexcept>
#include <string>

namespace subcorr {

// Base for every error thrown by the library. Contract violations by the
// caller and internal invariant failures both land here; the concrete type
// says which rule was broken.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SUBCORR_ERROR_TYPE(Name)                                 \
  struct Name : Error {                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

SUBCORR_ERROR_TYPE(MalformedPermutation);
SUBCORR_ERROR_TYPE(GroupMismatch);
SUBCORR_ERROR_TYPE(NotASubgroup);
SUBCORR_ERROR_TYPE(NotAMember);
SUBCORR_ERROR_TYPE(NotAPElement);
SUBCORR_ERROR_TYPE(NotNormal);
SUBCORR_ERROR_TYPE(GroupTooLarge);
SUBCORR_ERROR_TYPE(NotCoprime);
SUBCORR_ERROR_TYPE(NotACharacter);
SUBCORR_ERROR_TYPE(NotIrreducible);
SUBCORR_ERROR_TYPE(NoExtension);
SUBCORR_ERROR_TYPE(NotAnExtension);
SUBCORR_ERROR_TYPE(NotCoprimeCase);
SUBCORR_ERROR_TYPE(NotAboveTheta);
SUBCORR_ERROR_TYPE(BadConductor);
SUBCORR_ERROR_TYPE(IngestError);

// Uniqueness asserted by a theorem failed to hold in a computation. Always a
// bug (ours or the theorem's hypotheses were not checked); never tie-broken.
SUBCORR_ERROR_TYPE(UniquenessViolation);

// A check's hypotheses do not hold for the given instance; the check cannot
// run. Distinct from a check running and failing.
SUBCORR_ERROR_TYPE(HypothesisFailed);

// A verified theorem's conclusion failed on an instance satisfying its
// hypotheses. Strongest regression signal the harness can raise.
SUBCORR_ERROR_TYPE(TheoremViolation);

#undef SUBCORR_ERROR_TYPE

}  // namespace subcorr
