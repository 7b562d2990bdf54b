#include "fthresh/frobenius.hpp"

#include <algorithm>

#include "fthresh/resolution.hpp"

namespace fthresh {

FrobeniusContext::FrobeniusContext(CtxPtr ring, Ideal I)
    : ring_(std::move(ring)), I_(std::move(I)), n_(irrelevantIdeal(ring_)) {
  requireSameContext(*ring_, *I_.context());
  if (!I_.homogeneous()) {
    throw ArgumentError("defining ideal must be homogeneous");
  }
  if (I_.isUnit()) {
    throw ArgumentError("defining ideal must be proper");
  }
}

std::int64_t FrobeniusContext::q(int e) const {
  if (e < 1) throw ArgumentError("Frobenius level e must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= ring_->p;
    if (q > (std::int64_t(1) << 40)) {
      throw BudgetError("p^e too large at level " + std::to_string(e));
    }
  }
  return q;
}

const Ideal& FrobeniusContext::fedderColon(int e) const {
  q(e);  // validates e
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = colonCache_.find(e);
    if (it != colonCache_.end()) return it->second;
  }
  Ideal result = I_.isZero()
                     ? unitIdeal(ring_)
                     : colon(bracketPower(I_, q(e)), I_);
  std::lock_guard<std::mutex> lock(mu_);
  return colonCache_.emplace(e, std::move(result)).first->second;
}

Polynomial trace(const Polynomial& g, int e) {
  if (e < 1) throw ArgumentError("trace level e must be >= 1");
  const CtxPtr& ctx = g.context();
  if (!ctx) throw ContextError("trace on polynomial without context");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= ctx->p;
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    bool survives = true;
    for (auto a : t.mon.exp) {
      if (a % q != q - 1) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    Monomial m = t.mon;
    m.deg = 0;
    for (auto& a : m.exp) {
      a = static_cast<std::int32_t>((a - (q - 1)) / q);
      m.deg += a;
    }
    // Coefficients are fixed points of Frobenius over F_p.
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial(ctx, std::move(out));
}

bool avoidsBracket(const Polynomial& f, std::int64_t q) {
  for (const auto& t : f.terms()) {
    bool inside = false;
    for (auto a : t.mon.exp) {
      if (a >= q) {
        inside = true;
        break;
      }
    }
    if (!inside) return true;
  }
  return false;
}

FPurity isFPure(const FrobeniusContext& fc) {
  std::int64_t p = fc.ring()->p;
  for (const auto& g : fc.fedderColon(1).groebnerBasis()) {
    if (avoidsBracket(g, p)) return {true, g};
  }
  return {false, std::nullopt};
}

namespace {

// Least degree of a homogeneous Fedder-colon element outside n^[q]; this is
// the lhs of the degree identity behind bInvariant. Works because a reduced
// GB of a homogeneous ideal is homogeneous and membership in the monomial
// ideal n^[q] is decided monomial by monomial.
std::optional<std::int64_t> minDegreeOutsideBracket(const Ideal& colonIdeal,
                                                    std::int64_t q) {
  std::optional<std::int64_t> best;
  for (const auto& g : colonIdeal.groebnerBasis()) {
    if (!avoidsBracket(g, q)) continue;
    std::int64_t d = g.degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

struct AutoTable {
  HilbertFunctionTable table;
};

// hilbertFunctionAuto with the frobenius-side cell budget applied to the
// actual work: table length times numerator terms.
HilbertFunctionTable budgetedAutoTable(const Ideal& J, const Budget& budget) {
  int n = J.context()->nvars();
  std::vector<Monomial> lt;
  for (const auto& g : J.groebnerBasis()) lt.push_back(g.leadingMonomial());
  if (J.isUnit()) return {};
  std::vector<std::int64_t> purePow(n, -1);
  for (const auto& m : lt) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.exp[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = i;
      }
    }
    if (pure && support >= 0 &&
        (purePow[support] < 0 || m.exp[support] < purePow[support])) {
      purePow[support] = m.exp[support];
    }
  }
  std::int64_t bound = 0;
  for (int i = 0; i < n; ++i) {
    if (purePow[i] < 0) {
      throw NotArtinianError("quotient is not Artinian");
    }
    bound += purePow[i] - 1;
  }
  auto num = detail::hilbertNumerator(lt, n);
  std::int64_t cells =
      (bound + 1) * std::max<std::int64_t>(1, static_cast<std::int64_t>(num.size()));
  if (cells > budget.cells) {
    throw BudgetError("Hilbert table of " + std::to_string(cells) +
                      " cells exceeds the budget");
  }
  HilbertFunctionTable table;
  for (std::int64_t d = 0; d <= bound; ++d) {
    std::int64_t h = 0;
    for (const auto& [j, c] : num) {
      if (j > d) break;
      h += c * detail::binomial(d - j + n - 1, n - 1);
    }
    table.values[d] = h;
    if (h != 0) table.top = d;
  }
  return table;
}

std::int64_t tableValue(const HilbertFunctionTable& t, std::int64_t d) {
  auto it = t.values.find(d);
  return it == t.values.end() ? 0 : it->second;
}

}  // namespace

std::int64_t bInvariant(const FrobeniusContext& fc, int e) {
  std::int64_t q = fc.q(e);
  int n = fc.nvars();
  const Ideal& col = fc.fedderColon(e);
  Ideal bracket = bracketPower(fc.irrelevant(), q);

  // Least degree where the Hilbert functions of n^[q] and colon + n^[q]
  // part ways; equals n(q-1) - b_m(p^e).
  HilbertFunctionTable hfBracket = budgetedAutoTable(bracket, fc.budget);
  HilbertFunctionTable hfSum =
      budgetedAutoTable(idealSum(col, bracket), fc.budget);
  std::int64_t topDeg = n * (q - 1);
  std::optional<std::int64_t> u;
  for (std::int64_t d = 0; d <= topDeg; ++d) {
    if (tableValue(hfBracket, d) != tableValue(hfSum, d)) {
      u = d;
      break;
    }
  }
  if (!u) {
    throw NotSplitError("R is not F-split at level e = " + std::to_string(e));
  }
  // Cross-check against the direct GB degree scan.
  auto u2 = minDegreeOutsideBracket(col, q);
  if (!u2 || *u2 != *u) {
    throw InvariantViolation("Hilbert and GB routes disagree on b_m(p^e)");
  }
  return n * (q - 1) - *u;
}

std::int64_t nuInvariant(const FrobeniusContext& fc, int e) {
  std::int64_t q = fc.q(e);
  Ideal artinian = idealSum(fc.ideal(), bracketPower(fc.irrelevant(), q));
  HilbertFunctionTable t = budgetedAutoTable(artinian, fc.budget);
  if (!t.top) {
    throw InvariantViolation("S/(I + n^[q]) vanished for a proper ideal I");
  }
  return *t.top;
}

FThresholdReport fptReport(const FrobeniusContext& fc, int maxE,
                           const AInvariants* aInv) {
  if (maxE < 1) throw ArgumentError("maxE must be >= 1");
  FPurity purity = isFPure(fc);
  if (!purity.pure) {
    throw PreconditionError("fptReport requires an F-pure ring");
  }
  FThresholdReport report;
  for (int e = 1; e <= maxE; ++e) {
    std::int64_t q = fc.q(e);
    std::int64_t b, nu;
    try {
      b = bInvariant(fc, e);
      nu = nuInvariant(fc, e);
    } catch (const BudgetError&) {
      report.partial = true;
      break;
    }
    if (b < 0 || b > nu || nu > std::int64_t(fc.nvars()) * (q - 1)) {
      throw InvariantViolation("0 <= b <= nu <= n(q-1) failed at level " +
                               std::to_string(e));
    }
    report.eLevels.push_back(e);
    report.bValues.push_back(b);
    report.nuValues.push_back(nu);
    report.fptLower.push_back(Rational(b, q));
    report.cEstimates.push_back(Rational(nu, q));
  }
  for (std::size_t k = 0; k + 1 < report.bValues.size(); ++k) {
    if (fc.ring()->p * report.bValues[k] > report.bValues[k + 1]) {
      throw InvariantViolation("p*b(p^e) <= b(p^{e+1}) failed");
    }
    if (report.fptLower[k] > report.fptLower[k + 1]) {
      throw InvariantViolation("fpt lower bounds must be nondecreasing");
    }
  }
  if (aInv) {
    std::optional<Rational> upper;
    for (const auto& [i, a] : aInv->values) {
      Rational bound(-a);
      if (!upper || bound < *upper) upper = bound;
      for (std::size_t k = 0; k < report.eLevels.size(); ++k) {
        std::int64_t q = fc.q(report.eLevels[k]);
        if (report.fptLower[k] > bound) {
          throw InvariantViolation("fpt lower bound exceeds -a_i");
        }
        if ((1 - q) * a > report.nuValues[k]) {
          throw InvariantViolation("(1-p^e) a_i <= nu_m(p^e) failed");
        }
      }
    }
    report.fptUpperFromA = upper;
  }
  GorensteinFptCertificate cert = gorensteinFpt(fc);
  if (cert.principalityVerified) report.gorensteinExact = cert.fptExact;
  return report;
}

GorensteinFptCertificate gorensteinFpt(const FrobeniusContext& fc) {
  std::int64_t p = fc.ring()->p;
  int n = fc.nvars();
  const Ideal& col = fc.fedderColon(1);
  // GB elements of the homogeneous colon are homogeneous; pick the least
  // degree element outside n^[p]. The GB is sorted by lead monomial, which
  // makes the tie-break deterministic.
  const Polynomial* best = nullptr;
  for (const auto& g : col.groebnerBasis()) {
    if (!avoidsBracket(g, p)) continue;
    if (!best || g.degree() < best->degree()) best = &g;
  }
  if (!best) {
    throw PreconditionError("gorensteinFpt requires an F-pure ring");
  }
  GorensteinFptCertificate cert{*best, best->degree(), Rational(0), false};
  Ideal principal = idealSum(Ideal(fc.ring(), {cert.f}),
                             bracketPower(fc.ideal(), p));
  cert.principalityVerified = idealEquals(principal, col);
  cert.fptExact = Rational(n * (p - 1) - cert.degF, p - 1);
  return cert;
}

Ideal splittingIdeal(const FrobeniusContext& fc, int e) {
  std::int64_t q = fc.q(e);
  Ideal bracket = bracketPower(fc.irrelevant(), q);
  const Ideal& col = fc.fedderColon(e);
  Ideal result = colon(bracket, col);
  if (!idealContains(result, fc.ideal())) {
    throw InvariantViolation("splitting ideal does not contain I");
  }
  return result;
}

SplittingData splittingPrimeEstimate(const FrobeniusContext& fc, int maxE) {
  if (maxE < 1) throw ArgumentError("maxE must be >= 1");
  SplittingData data;
  std::optional<Ideal> cumulative;
  std::optional<Ideal> previous;
  bool stabilized = false;
  for (int e = 1; e <= maxE; ++e) {
    Ideal level = splittingIdeal(fc, e);
    data.levels.emplace(e, level);
    if (previous && !idealContains(*previous, level)) {
      throw InvariantViolation("splitting-ideal chain is not decreasing");
    }
    previous = level;
    Ideal next = cumulative ? intersect(*cumulative, level) : level;
    if (cumulative && idealEquals(next, *cumulative)) {
      stabilized = true;
      cumulative = std::move(next);
      break;
    }
    cumulative = std::move(next);
  }
  if (!stabilized) {
    data.note = "chain did not stabilize within maxE";
    return data;
  }
  data.candidateCompatible = isCompatible(fc, *cumulative, maxE);
  bool allCompatible =
      std::all_of(data.candidateCompatible.begin(),
                  data.candidateCompatible.end(), [](bool b) { return b; });
  if (!allCompatible) {
    // Stabilization was premature: the candidate cannot be the splitting
    // prime if it fails compatibility at some computed level.
    data.note = "stabilized candidate failed the compatibility check";
    return data;
  }
  data.stabilizedPrime = *cumulative;
  data.sdim = krullDim(*cumulative);
  data.note = "heuristic: stabilization certified only up to maxE";
  return data;
}

std::vector<bool> isCompatible(const FrobeniusContext& fc, const Ideal& Jt,
                               int maxE) {
  if (maxE < 1) throw ArgumentError("maxE must be >= 1");
  requireSameContext(*fc.ring(), *Jt.context());
  if (!idealContains(Jt, fc.ideal())) {
    throw ArgumentError("pullback ideal must contain the defining ideal");
  }
  std::vector<bool> result;
  for (int e = 1; e <= maxE; ++e) {
    std::int64_t q = fc.q(e);
    Ideal colJ = Jt.isZero() ? unitIdeal(fc.ring())
                             : colon(bracketPower(Jt, q), Jt);
    bool ok = true;
    for (const auto& g : fc.fedderColon(e).groebnerBasis()) {
      if (!contains(colJ, g)) {
        ok = false;
        break;
      }
    }
    result.push_back(ok);
  }
  return result;
}

QuotientFptComparison fptOfQuotientCheck(const FrobeniusContext& fc,
                                         const Ideal& Jt, int maxE) {
  std::vector<bool> compat = isCompatible(fc, Jt, maxE);
  if (!std::all_of(compat.begin(), compat.end(), [](bool b) { return b; })) {
    throw PreconditionError(
        "fptOfQuotientCheck requires a compatible ideal up to maxE");
  }
  if (Jt.isUnit()) {
    throw ArgumentError("quotient by the unit ideal");
  }
  FrobeniusContext quotient(fc.ring(), Jt);
  quotient.budget = fc.budget;
  QuotientFptComparison cmp;
  cmp.quotientDim = krullDim(Jt);
  cmp.holds = true;
  for (int e = 1; e <= maxE; ++e) {
    std::int64_t q = fc.q(e);
    std::int64_t bR = bInvariant(fc, e);
    std::int64_t bQ = bInvariant(quotient, e);
    cmp.eLevels.push_back(e);
    cmp.bR.push_back(bR);
    cmp.bQuotient.push_back(bQ);
    cmp.fptLowerR.push_back(Rational(bR, q));
    cmp.fptLowerQuotient.push_back(Rational(bQ, q));
    if (bR > bQ) cmp.holds = false;
  }
  if (!cmp.holds) {
    throw InvariantViolation("b_R(p^e) <= b_{R/J}(p^e) failed");
  }
  if (!cmp.fptLowerQuotient.empty() &&
      cmp.fptLowerQuotient.back() > Rational(cmp.quotientDim)) {
    throw InvariantViolation("fpt lower bound of R/J exceeds dim(R/J)");
  }
  return cmp;
}

}  // namespace fthresh
