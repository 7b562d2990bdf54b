#ifndef FTHRESH_FROBENIUS_HPP
#define FTHRESH_FROBENIUS_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "fthresh/ideal.hpp"
#include "fthresh/rational.hpp"

namespace fthresh {

struct Budget {
  // Upper bound on materialized Hilbert-table work (table length times
  // numerator terms) per level.
  std::int64_t cells = 10000000;
};

// R = S/I with I homogeneous and proper, together with the irrelevant ideal
// of the ambient ring and the per-level Fedder colon cache.
class FrobeniusContext {
 public:
  FrobeniusContext(CtxPtr ring, Ideal I);

  const CtxPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return I_; }
  const Ideal& irrelevant() const { return n_; }
  int nvars() const { return ring_->nvars(); }
  std::int64_t q(int e) const;  // p^e, guarded

  Budget budget;

  // (I^[p^e] : I), cached per level. I = 0 gives the unit ideal.
  const Ideal& fedderColon(int e) const;

 private:
  CtxPtr ring_;
  Ideal I_;
  Ideal n_;
  mutable std::mutex mu_;
  mutable std::map<int, Ideal> colonCache_;
};

// The e-trace on p^e-th roots, represented on integer exponents: a monomial
// x^a survives iff every a_i = p^e - 1 mod p^e, and maps to
// x^{(a - (p^e-1))/p^e} with the same coefficient.
Polynomial trace(const Polynomial& g, int e);

struct FPurity {
  bool pure;
  std::optional<Polynomial> witness;  // colon element outside n^[p]
};

// Fedder's criterion: R is F-pure iff (I^[p]:I) is not inside n^[p].
FPurity isFPure(const FrobeniusContext& fc);

// b_m(p^e) = n(p^e - 1) - min{deg of colon-mod-n^[q] element}; throws
// NotSplitError when the colon lies inside n^[q].
std::int64_t bInvariant(const FrobeniusContext& fc, int e);

// nu_m(p^e): top nonzero degree of the Artinian quotient S/(I + n^[q]).
std::int64_t nuInvariant(const FrobeniusContext& fc, int e);

struct AInvariants;  // resolution module

struct FThresholdReport {
  std::vector<int> eLevels;
  std::vector<std::int64_t> bValues;
  std::vector<std::int64_t> nuValues;
  std::vector<Rational> fptLower;    // b/q, nondecreasing
  std::vector<Rational> cEstimates;  // nu/q
  std::optional<Rational> fptUpperFromA;  // min over finite -a_i
  std::optional<Rational> gorensteinExact;
  bool partial = false;  // budget stopped the level ladder early
};

FThresholdReport fptReport(const FrobeniusContext& fc, int maxE,
                           const AInvariants* aInv = nullptr);

struct GorensteinFptCertificate {
  Polynomial f;  // minimal-degree homogeneous Fedder generator at e = 1
  std::int64_t degF;
  Rational fptExact;  // n - degF/(p-1)
  bool principalityVerified;
};

GorensteinFptCertificate gorensteinFpt(const FrobeniusContext& fc);

// Pullback to S of the splitting ideal I_e(R), computed as (n^[q] : colon).
Ideal splittingIdeal(const FrobeniusContext& fc, int e);

struct SplittingData {
  std::map<int, Ideal> levels;       // e -> pullback of I_e(R)
  std::optional<Ideal> stabilizedPrime;
  std::optional<int> sdim;
  std::vector<bool> candidateCompatible;  // per level, when a candidate exists
  std::string note;
};

// Cumulative intersection of the splitting-ideal chain; the candidate is
// declared when two consecutive cumulative GBs agree and it passes the
// compatibility test up to maxE.
SplittingData splittingPrimeEstimate(const FrobeniusContext& fc, int maxE);

// Per-level test of (I^[q]:I) in (Jt^[q]:Jt); Jt must contain I.
std::vector<bool> isCompatible(const FrobeniusContext& fc, const Ideal& Jt,
                               int maxE);

struct QuotientFptComparison {
  std::vector<int> eLevels;
  std::vector<std::int64_t> bR;
  std::vector<std::int64_t> bQuotient;
  std::vector<Rational> fptLowerR;
  std::vector<Rational> fptLowerQuotient;
  int quotientDim;
  bool holds;  // b_R <= b_{R/J} at every level
};

QuotientFptComparison fptOfQuotientCheck(const FrobeniusContext& fc,
                                         const Ideal& Jt, int maxE);

// f avoids the monomial ideal n^[q] iff some monomial of f has all
// exponents < q.
bool avoidsBracket(const Polynomial& f, std::int64_t q);

}  // namespace fthresh

#endif
