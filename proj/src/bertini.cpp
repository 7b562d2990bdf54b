#include "fthresh/bertini.hpp"

#include <random>
#include <set>

namespace fthresh {

namespace {

Polynomial linearForm(const CtxPtr& ctx, const std::vector<Coeff>& v) {
  std::vector<Term> terms;
  for (int i = 0; i < ctx->nvars(); ++i) {
    if (v[i]) {
      Monomial m = Monomial::one(ctx->nvars());
      m.exp[i] = 1;
      m.deg = 1;
      terms.push_back({std::move(m), v[i]});
    }
  }
  return Polynomial(ctx, std::move(terms));
}

std::optional<Monomial> bracketWitness(const Polynomial& f, std::int64_t q) {
  for (const auto& t : f.terms()) {
    bool inside = false;
    for (auto a : t.mon.exp) {
      if (a >= q) {
        inside = true;
        break;
      }
    }
    if (!inside) return t.mon;
  }
  return std::nullopt;
}

}  // namespace

LinearFormCertificate findFPureLinear(const FrobeniusContext& fc,
                                      const Polynomial& f, std::uint64_t seed,
                                      int maxE) {
  const CtxPtr& ctx = fc.ring();
  std::int64_t p = ctx->p;
  int n = ctx->nvars();
  if (!contains(fc.fedderColon(1), f)) {
    throw PreconditionError("f must lie in the level-1 Fedder colon");
  }
  if (!avoidsBracket(f, p)) {
    throw PreconditionError("f must avoid n^[p]");
  }
  if (!f.isHomogeneous() || f.degree() > (p - 1) * (n - 1)) {
    throw PreconditionError(
        "f must be homogeneous of degree at most (p-1)(n-1)");
  }

  SplittingData sd = splittingPrimeEstimate(fc, maxE);
  bool heuristic = !sd.stabilizedPrime.has_value();
  const Ideal& primeTest =
      sd.stabilizedPrime ? *sd.stabilizedPrime : sd.levels.rbegin()->second;

  Polynomial pth = one(ctx);  // ell^{p-1}, rebuilt per candidate

  auto tryCandidate =
      [&](const std::vector<Coeff>& v) -> std::optional<LinearFormCertificate> {
    Polynomial ell = linearForm(ctx, v);
    if (ell.isZero()) return std::nullopt;
    pth = pow(ell, p - 1);
    auto witness = bracketWitness(mul(pth, f), p);
    if (!witness) return std::nullopt;
    if (normalForm(ell, primeTest).isZero()) return std::nullopt;
    Ideal principal(ctx, {ell});
    if (!idealEquals(colon(fc.ideal(), principal), fc.ideal())) {
      return std::nullopt;
    }
    LinearFormCertificate cert;
    cert.ell = std::move(ell);
    cert.witnessMonomial = *witness;
    cert.nzdVerified = true;
    cert.primeTestHeuristic = heuristic;
    return cert;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  int randomTries = 64 + 8 * n;
  for (int k = 0; k < randomTries; ++k) {
    std::vector<Coeff> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<Coeff>(dist(rng));
    if (auto cert = tryCandidate(v)) return *cert;
  }
  // Exhaustive pass over projective representatives (first nonzero
  // coordinate equal to 1), deterministic order.
  double size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<double>(p);
  if (size <= (1 << 21)) {
    std::vector<Coeff> v(n, 0);
    while (true) {
      int i = n - 1;
      while (i >= 0 && v[i] == p - 1) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
      int first = 0;
      while (first < n && v[first] == 0) ++first;
      if (first < n && v[first] != 1) continue;  // not a projective rep
      if (auto cert = tryCandidate(v)) return *cert;
    }
  }
  throw FieldTooSmallError(
      "no linear form satisfies the cut conditions over F_" +
      std::to_string(p) +
      "; the underlying theorem assumes an infinite field");
}

FPureSequence fpureSequence(const FrobeniusContext& fc, std::uint64_t seed,
                            int maxE) {
  const CtxPtr& ctx = fc.ring();
  Classification cls = classify(fc.ideal());
  if (!cls.isGorenstein) {
    throw PreconditionError("fpureSequence requires a Gorenstein ring");
  }
  if (!isFPure(fc).pure) {
    throw PreconditionError("fpureSequence requires an F-pure ring");
  }

  FPureSequence seq;
  Ideal current = fc.ideal();
  AInvariants aInv = aInvariants(current);
  std::int64_t topA = *aInv.top();

  GorensteinFptCertificate cert = gorensteinFpt(fc);
  if (!cert.principalityVerified) {
    throw InvariantViolation(
        "Gorenstein ring with non-principal Fedder colon");
  }
  if (!cert.fptExact.isInteger() || cert.fptExact.num < 0) {
    throw InvariantViolation("Gorenstein fpt must be a nonnegative integer");
  }
  if (cert.fptExact.num != -topA) {
    throw InvariantViolation("fpt and -a_d disagree on a Gorenstein ring");
  }
  const std::int64_t targetLength = cert.fptExact.num;

  while (cert.fptExact.num > 0) {
    FrobeniusContext cur(ctx, current);
    cur.budget = fc.budget;
    LinearFormCertificate step;
    try {
      step = findFPureLinear(cur, cert.f, seed, maxE);
    } catch (const FieldTooSmallError& err) {
      throw FieldTooSmallWithPartial(err.what(), seq.forms);
    }
    current = idealSum(current, Ideal(ctx, {step.ell}));
    FrobeniusContext next(ctx, current);
    next.budget = fc.budget;
    FPurity purity = isFPure(next);
    if (!purity.pure) {
      throw InvariantViolation("quotient by the chosen form lost F-purity");
    }
    AInvariants aNext = aInvariants(current);
    std::int64_t topNext = *aNext.top();
    if (topNext != topA + 1) {
      throw InvariantViolation("a_d must rise by exactly one per cut");
    }
    GorensteinFptCertificate certNext = gorensteinFpt(next);
    if (!certNext.principalityVerified ||
        certNext.fptExact.num != cert.fptExact.num - 1 ||
        !certNext.fptExact.isInteger()) {
      throw InvariantViolation("fpt must drop by exactly one per cut");
    }
    seq.forms.push_back(step.ell);
    seq.steps.push_back({step.ell, step.witnessMonomial,
                         step.primeTestHeuristic, true, topNext,
                         certNext.fptExact});
    topA = topNext;
    cert = certNext;
  }
  if (static_cast<std::int64_t>(seq.forms.size()) != targetLength) {
    throw InvariantViolation("sequence length must equal the original fpt");
  }
  return seq;
}

SequenceBoundCheck checkFPureSequenceBound(
    const FrobeniusContext& fc, const std::vector<Polynomial>& forms) {
  SequenceBoundCheck check;
  for (const auto& g : forms) {
    if (g.isZero() || !g.isHomogeneous() || g.degree() < 1) {
      throw ArgumentError("forms must be nonzero homogeneous of degree >= 1");
    }
    check.degreeSum += g.degree();
  }
  const CtxPtr& ctx = fc.ring();
  Ideal current = fc.ideal();
  // regular-sequence stage: colon(J, g) = J at every step
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Ideal principal(ctx, {forms[i]});
    if (!idealEquals(colon(current, principal), current)) {
      check.failingStage = "regular";
      check.failingIndex = static_cast<int>(i);
      return check;
    }
    current = idealSum(current, principal);
  }
  // F-purity of every quotient
  current = fc.ideal();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    current = idealSum(current, Ideal(ctx, {forms[i]}));
    FrobeniusContext quotient(ctx, current);
    quotient.budget = fc.budget;
    if (!isFPure(quotient).pure) {
      check.failingStage = "fpure";
      check.failingIndex = static_cast<int>(i);
      return check;
    }
  }
  // degree-sum bound against the a-invariants of R
  AInvariants aInv = aInvariants(fc.ideal());
  bool first = true;
  for (const auto& [i, a] : aInv.values) {
    (void)i;
    if (first || -a < check.minNegA) check.minNegA = -a;
    first = false;
  }
  if (check.degreeSum > check.minNegA) {
    check.failingStage = "bound";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace fthresh
