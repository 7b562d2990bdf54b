#ifndef FTHRESH_BERTINI_HPP
#define FTHRESH_BERTINI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fthresh/frobenius.hpp"
#include "fthresh/resolution.hpp"

namespace fthresh {

struct FieldTooSmallWithPartial : FieldTooSmallError {
  FieldTooSmallWithPartial(const std::string& msg,
                           std::vector<Polynomial> partial)
      : FieldTooSmallError(msg), partialForms(std::move(partial)) {}
  std::vector<Polynomial> partialForms;
};

struct LinearFormCertificate {
  Polynomial ell;
  Monomial witnessMonomial;  // monomial of ell^{p-1} f outside n^[p]
  bool nzdVerified = false;
  // true when the splitting-prime chain did not stabilize and ell was tested
  // against I_maxE(R) instead (a strictly larger ideal, so a stronger test
  // at that level).
  bool primeTestHeuristic = false;
};

// Searches for a linear form satisfying the three cut conditions:
// ell^{p-1} f outside n^[p], ell a nonzerodivisor on R, ell outside the
// splitting-prime candidate. Seeded random samples first, exhaustive
// enumeration of P^{n-1}(F_p) as fallback.
LinearFormCertificate findFPureLinear(const FrobeniusContext& fc,
                                      const Polynomial& f, std::uint64_t seed,
                                      int maxE = 2);

struct FPureSequenceStep {
  Polynomial ell;
  Monomial witnessMonomial;
  bool primeTestHeuristic = false;
  bool quotientFPure = false;
  std::int64_t quotientTopA = 0;  // a_{d-1} of the quotient ring
  Rational quotientFpt;           // exact Gorenstein fpt after the cut
};

struct FPureSequence {
  std::vector<Polynomial> forms;
  std::vector<FPureSequenceStep> steps;
};

// Gorenstein staircase: cuts by F-pure linear forms until fpt reaches zero;
// the sequence length equals the original fpt exactly.
FPureSequence fpureSequence(const FrobeniusContext& fc, std::uint64_t seed,
                            int maxE = 2);

struct SequenceBoundCheck {
  bool ok = false;
  std::string failingStage;  // "", "regular", "fpure", "bound"
  int failingIndex = -1;
  std::int64_t degreeSum = 0;
  std::int64_t minNegA = 0;  // min over finite -a_i(R)
};

// Verifies user-supplied homogeneous forms: regular sequence (iterated colon
// test), every quotient F-pure, and the degree-sum bound against the
// a-invariants of R.
SequenceBoundCheck checkFPureSequenceBound(const FrobeniusContext& fc,
                                           const std::vector<Polynomial>& forms);

}  // namespace fthresh

#endif
