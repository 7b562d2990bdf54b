#include "fthresh/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace fthresh {

namespace {

// --- multivariate division -------------------------------------------------

// Full reduction of f modulo basis. Every basis element must be nonzero.
// When quotients is non-null it receives one polynomial per basis element
// such that f = sum quotients[i]*basis[i] + remainder.
Polynomial reduceFull(const Polynomial& f, const std::vector<Polynomial>& basis,
                      std::vector<Polynomial>* quotients = nullptr) {
  const CtxPtr& ctx = f.context();
  PrimeField F = ctx->field();
  std::vector<std::vector<Term>> quotTerms;
  if (quotients) quotTerms.resize(basis.size());

  std::vector<Term> work(f.terms());
  std::vector<Term> rem;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    int gi = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (divides(basis[k].leadingMonomial(), lt.mon)) {
        gi = static_cast<int>(k);
        break;
      }
    }
    if (gi < 0) {
      rem.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const Polynomial& g = basis[gi];
    Monomial shift = divMonomial(lt.mon, g.leadingMonomial());
    Coeff c = F.mul(lt.coeff, F.inv(g.leadingTerm().coeff));
    if (quotients) quotTerms[gi].push_back({shift, c});
    if (g.size() == 1) {
      ++head;  // the head cancels exactly, nothing else changes
      continue;
    }
    // work[head+1..] - c * shift * tail(g), merged in order.
    std::vector<Term> next;
    next.reserve(work.size() - head - 1 + g.size() - 1);
    std::size_t i = head + 1, j = 1;
    const auto& gt = g.terms();
    Monomial gm;
    bool gmValid = false;
    while (i < work.size() && j < gt.size()) {
      if (!gmValid) {
        gm = mulMonomial(gt[j].mon, shift);
        gmValid = true;
      }
      int cc = compareMonomials(*ctx, work[i].mon, gm);
      if (cc > 0) {
        next.push_back(std::move(work[i++]));
      } else if (cc < 0) {
        Coeff v = F.neg(F.mul(gt[j].coeff, c));
        next.push_back({std::move(gm), v});
        gmValid = false;
        ++j;
      } else {
        Coeff v = F.sub(work[i].coeff, F.mul(gt[j].coeff, c));
        if (v) next.push_back({std::move(work[i].mon), v});
        ++i;
        ++j;
        gmValid = false;
      }
    }
    while (i < work.size()) next.push_back(std::move(work[i++]));
    while (j < gt.size()) {
      next.push_back({mulMonomial(gt[j].mon, shift), F.neg(F.mul(gt[j].coeff, c))});
      ++j;
    }
    work = std::move(next);
    head = 0;
  }
  if (quotients) {
    quotients->clear();
    for (auto& qt : quotTerms) {
      quotients->push_back(detail_fromSortedTerms(ctx, std::move(qt)));
    }
  }
  return detail_fromSortedTerms(ctx, std::move(rem));
}

Polynomial makeMonic(const Polynomial& f) {
  if (f.isZero()) return f;
  PrimeField F = f.context()->field();
  Coeff lc = f.leadingTerm().coeff;
  if (lc == 1) return f;
  return scale(f, F.inv(lc));
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  // Both inputs monic.
  Monomial l = lcmMonomial(f.leadingMonomial(), g.leadingMonomial());
  Polynomial a = mulTerm(f, divMonomial(l, f.leadingMonomial()), 1);
  Polynomial b = mulTerm(g, divMonomial(l, g.leadingMonomial()), 1);
  return sub(a, b);
}

// Minimalize + interreduce + sort: the unique reduced GB from any GB.
std::vector<Polynomial> reduceBasis(const RingContext& ctx,
                                    std::vector<Polynomial> basis) {
  // Drop elements whose lead is divisible by another surviving lead.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(basis[j].leadingMonomial(), basis[i].leadingMonomial())) {
        // Equal leads: keep the smaller index.
        if (basis[i].leadingMonomial() == basis[j].leadingMonomial() && j > i)
          continue;
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(makeMonic(basis[i]));
  }
  // Tail-reduce until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = makeMonic(reduceFull(minimal[i], others));
      if (r != minimal[i]) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compareMonomials(ctx, a.leadingMonomial(),
                                      b.leadingMonomial()) < 0;
            });
  return minimal;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

// Buchberger with the Gebauer-Moeller update and normal pair selection.
std::vector<Polynomial> buchberger(const CtxPtr& ctx,
                                   std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;

  auto update = [&](Polynomial h) {
    h = makeMonic(std::move(h));
    const int t = static_cast<int>(basis.size());
    const Monomial& lth = h.leadingMonomial();
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(basis.size());
    for (int i = 0; i < t; ++i) {
      const Monomial& lti = basis[i].leadingMonomial();
      cands.push_back({i, lcmMonomial(lti, lth),
                       gcdMonomial(lti, lth).isOne()});
    }
    // Keep a candidate if coprime (eliminated later) or no other candidate
    // lcm divides it; equal lcms keep the last surviving one.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b) {
          if (divides(cands[b].lcm, cands[a].lcm)) drop = true;
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) {
          if (divides(kept[b].lcm, cands[a].lcm) &&
              kept[b].lcm != cands[a].lcm)
            drop = true;
        }
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // Old pairs made redundant by h (chain criterion).
    std::vector<Pair> survivors;
    for (auto& pr : pairs) {
      bool redundant =
          divides(lth, pr.lcm) &&
          lcmMonomial(basis[pr.i].leadingMonomial(), lth) != pr.lcm &&
          lcmMonomial(basis[pr.j].leadingMonomial(), lth) != pr.lcm;
      if (!redundant) survivors.push_back(std::move(pr));
    }
    pairs = std::move(survivors);
    for (auto& c : kept) {
      if (!c.coprime) pairs.push_back({c.i, t, std::move(c.lcm)});
    }
    basis.push_back(std::move(h));
  };

  for (auto& g : gens) {
    if (!g.isZero()) update(std::move(g));
  }
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm in the monomial order.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (compareMonomials(*ctx, pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    }
    Pair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + best);
    Polynomial s = sPolynomial(basis[pr.i], basis[pr.j]);
    Polynomial r = reduceFull(s, basis);
    if (!r.isZero()) update(std::move(r));
  }
  return reduceBasis(*ctx, std::move(basis));
}

}  // namespace

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  if (!ctx_) throw ContextError("ideal without ring context");
  for (auto& g : gens) {
    if (g.isZero()) continue;
    requireSameContext(*ctx_, *g.context());
    gens_.push_back(std::move(g));
  }
}

bool Ideal::homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.isHomogeneous()) return false;
  }
  return true;
}

const std::vector<Polynomial>& Ideal::groebnerBasis() const {
  std::call_once(cache_->once, [this] {
    cache_->gb = buchberger(ctx_, gens_);
  });
  return cache_->gb;
}

bool Ideal::isUnit() const {
  const auto& gb = groebnerBasis();
  return gb.size() == 1 && gb[0].isConstant() && !gb[0].isZero();
}

Polynomial normalForm(const Polynomial& f, const Ideal& J) {
  requireSameContext(*f.context(), *J.context());
  return reduceFull(f, J.groebnerBasis());
}

bool contains(const Ideal& J, const Polynomial& f) {
  return normalForm(f, J).isZero();
}

bool idealContains(const Ideal& outer, const Ideal& inner) {
  for (const auto& g : inner.generators()) {
    if (!contains(outer, g)) return false;
  }
  return true;
}

bool idealEquals(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebnerBasis();
  const auto& gb = b.groebnerBasis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i] != gb[i]) return false;
  }
  return true;
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
  requireSameContext(*a.context(), *b.context());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal(a.context(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  requireSameContext(*a.context(), *b.context());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(mul(f, g));
  }
  return Ideal(a.context(), std::move(gens));
}

Ideal idealPower(const Ideal& a, std::int64_t r) {
  if (r < 0) throw ArgumentError("negative ideal power");
  if (r == 0) return unitIdeal(a.context());
  Ideal result = a;
  for (std::int64_t k = 1; k < r; ++k) result = idealProduct(result, a);
  return result;
}

Ideal bracketPower(const Ideal& a, std::int64_t q) {
  std::int64_t qq = q;
  std::uint32_t p = a.context()->p;
  while (qq > 1 && qq % p == 0) qq /= p;
  if (qq != 1) {
    throw ArgumentError("bracket power exponent " + std::to_string(q) +
                        " is not a power of " + std::to_string(p));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(frobeniusTwist(g, q));
  return Ideal(a.context(), std::move(gens));
}

Ideal unitIdeal(CtxPtr ctx) {
  Polynomial u = one(ctx);
  return Ideal(std::move(ctx), {std::move(u)});
}

Ideal irrelevantIdeal(CtxPtr ctx) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ctx->nvars(); ++i) gens.push_back(variable(ctx, i));
  return Ideal(std::move(ctx), std::move(gens));
}

namespace {

std::string freshVarName(const RingContext& ctx) {
  std::string name = "t";
  while (ctx.varIndex(name) >= 0) name += "_";
  return name;
}

Polynomial embed(const Polynomial& f, const CtxPtr& big) {
  std::vector<Term> t = f.terms();
  for (auto& x : t) {
    x.mon.exp.push_back(0);
  }
  return Polynomial(big, std::move(t));
}

Polynomial contractDropLast(const Polynomial& f, const CtxPtr& small) {
  std::vector<Term> t = f.terms();
  for (auto& x : t) {
    if (x.mon.exp.back() != 0) {
      throw InvariantViolation("contraction of a polynomial involving t");
    }
    x.mon.exp.pop_back();
  }
  return Polynomial(small, std::move(t));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  requireSameContext(*a.context(), *b.context());
  CtxPtr ctx = a.context();
  if (a.isZero() || b.isZero()) return Ideal(ctx);
  // t*A + (1-t)*B in S[t], block order eliminating t; the t-free part of the
  // GB generates A meet B.
  int n = ctx->nvars();
  std::vector<std::string> vars = ctx->varNames;
  vars.push_back(freshVarName(*ctx));
  CtxPtr big = makeRing(ctx->p, std::move(vars),
                        MonomialOrder{OrderKind::Block, n});
  Polynomial t = variable(big, n);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(mul(t, embed(f, big)));
  for (const auto& g : b.generators()) {
    Polynomial ge = embed(g, big);
    gens.push_back(sub(ge, mul(t, ge)));
  }
  Ideal J(big, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& h : J.groebnerBasis()) {
    bool tFree = true;
    for (const auto& term : h.terms()) {
      if (term.mon.exp.back() != 0) {
        tFree = false;
        break;
      }
    }
    if (tFree) out.push_back(contractDropLast(h, ctx));
  }
  return Ideal(ctx, std::move(out));
}

Polynomial exactDivide(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw ArgumentError("division by zero polynomial");
  std::vector<Polynomial> quot;
  Polynomial r = reduceFull(f, {g}, &quot);
  if (!r.isZero()) {
    throw InvariantViolation("exact polynomial division left a remainder");
  }
  return quot[0];
}

Ideal colon(const Ideal& a, const Ideal& b) {
  requireSameContext(*a.context(), *b.context());
  if (b.isZero()) throw ArgumentError("colon by the zero ideal");
  bool first = true;
  Ideal result(a.context());
  for (const auto& g : b.generators()) {
    // a : (g) = (1/g) * (a meet (g))
    Ideal meet = intersect(a, Ideal(a.context(), {g}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.groebnerBasis()) {
      gens.push_back(exactDivide(h, g));
    }
    Ideal part(a.context(), std::move(gens));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

// --- Hilbert functions -------------------------------------------------------

namespace detail {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<__int128>(1) << 62)) {
      throw BudgetError("binomial coefficient overflow");
    }
  }
  return static_cast<std::int64_t>(r);
}

namespace {

std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens) {
  std::vector<bool> keep(gens.size(), true);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (keep[i]) out.push_back(std::move(gens[i]));
  }
  return out;
}

using Series = std::map<std::int64_t, std::int64_t>;

void addShifted(Series& dst, const Series& src, std::int64_t shift,
                std::int64_t sign) {
  for (const auto& [d, c] : src) {
    std::int64_t& slot = dst[d + shift];
    slot += sign * c;
    if (slot == 0) dst.erase(d + shift);
  }
}

Series numeratorRec(std::vector<Monomial> gens, long& nodes) {
  if (++nodes > 4000000) {
    throw BudgetError("Hilbert numerator recursion too large");
  }
  gens = minimalizeMonomials(std::move(gens));
  for (const auto& m : gens) {
    if (m.isOne()) return {};  // unit ideal
  }
  if (gens.empty()) return {{0, 1}};
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg < b.deg;
  });
  // A generator with support disjoint from every other splits off a clean
  // (1 - t^deg) factor.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool disjoint = true;
    for (std::size_t j = 0; j < gens.size() && disjoint; ++j) {
      if (i == j) continue;
      if (!gcdMonomial(gens[i], gens[j]).isOne()) disjoint = false;
    }
    if (disjoint) {
      std::int64_t d = gens[i].deg;
      std::vector<Monomial> rest;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i) rest.push_back(gens[j]);
      }
      Series base = numeratorRec(std::move(rest), nodes);
      Series out = base;
      addShifted(out, base, d, -1);
      return out;
    }
  }
  // Split on the last (largest) generator m:
  //   N(L' + m) = N(L') - t^{deg m} N(L' : m).
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colonGens;
  colonGens.reserve(gens.size());
  for (const auto& g : gens) {
    colonGens.push_back(divMonomial(g, gcdMonomial(g, m)));
  }
  Series left = numeratorRec(gens, nodes);
  Series right = numeratorRec(std::move(colonGens), nodes);
  Series out = std::move(left);
  addShifted(out, right, m.deg, -1);
  return out;
}

}  // namespace

std::map<std::int64_t, std::int64_t> hilbertNumerator(
    std::vector<Monomial> gens, int nvars) {
  (void)nvars;
  long nodes = 0;
  return numeratorRec(std::move(gens), nodes);
}

std::vector<Polynomial> naiveGroebner(CtxPtr ctx,
                                      std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (!g.isZero()) basis.push_back(makeMonic(std::move(g)));
  }
  bool added = true;
  while (added) {
    added = false;
    std::size_t sz = basis.size();
    for (std::size_t i = 0; i < sz && !added; ++i) {
      for (std::size_t j = i + 1; j < sz && !added; ++j) {
        Polynomial r = reduceFull(sPolynomial(basis[i], basis[j]), basis);
        if (!r.isZero()) {
          basis.push_back(makeMonic(std::move(r)));
          added = true;
        }
      }
    }
  }
  return reduceBasis(*ctx, std::move(basis));
}

}  // namespace detail

namespace {

std::vector<Monomial> leadMonomials(const Ideal& J) {
  std::vector<Monomial> lt;
  for (const auto& g : J.groebnerBasis()) lt.push_back(g.leadingMonomial());
  return lt;
}

HilbertFunctionTable tabulate(const std::map<std::int64_t, std::int64_t>& num,
                              int n, std::int64_t upTo) {
  HilbertFunctionTable table;
  for (std::int64_t d = 0; d <= upTo; ++d) {
    std::int64_t h = 0;
    for (const auto& [j, c] : num) {
      if (j > d) break;
      h += c * detail::binomial(d - j + n - 1, n - 1);
    }
    table.values[d] = h;
    if (h != 0) table.top = d;
    if (h < 0) throw InvariantViolation("negative Hilbert function value");
  }
  return table;
}

void requireHomogeneous(const Ideal& J, const char* what) {
  if (!J.homogeneous()) {
    throw ArgumentError(std::string(what) + " requires a homogeneous ideal");
  }
}

}  // namespace

HilbertFunctionTable hilbertFunction(const Ideal& J, std::int64_t upTo) {
  requireHomogeneous(J, "hilbertFunction");
  if (upTo < 0) throw ArgumentError("hilbertFunction bound must be >= 0");
  auto num = detail::hilbertNumerator(leadMonomials(J), J.context()->nvars());
  return tabulate(num, J.context()->nvars(), upTo);
}

HilbertFunctionTable hilbertFunctionAuto(const Ideal& J) {
  requireHomogeneous(J, "hilbertFunction");
  int n = J.context()->nvars();
  auto lt = leadMonomials(J);
  if (J.isUnit()) return {};  // the zero ring: empty table
  // Artinian iff some pure power of every variable leads the ideal.
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
    if (pure && support >= 0) {
      if (purePow[support] < 0 || m.exp[support] < purePow[support]) {
        purePow[support] = m.exp[support];
      }
    }
  }
  std::int64_t bound = 0;
  for (int i = 0; i < n; ++i) {
    if (purePow[i] < 0) {
      throw NotArtinianError(
          "quotient is not Artinian: no pure power of " +
          J.context()->varNames[i] + " in the lead term ideal");
    }
    bound += purePow[i] - 1;
  }
  auto num = detail::hilbertNumerator(lt, n);
  return tabulate(num, n, bound);
}

int krullDim(const Ideal& J) {
  requireHomogeneous(J, "krullDim");
  if (J.isUnit()) return -1;
  int n = J.context()->nvars();
  if (n > 24) throw BudgetError("krullDim subset search limited to 24 vars");
  std::vector<std::uint32_t> supports;
  for (const auto& m : leadMonomials(J)) {
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (m.exp[i] > 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  // Largest variable subset Y containing the support of no lead monomial.
  int best = 0;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    int size = std::popcount(y);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~y) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Polynomial> minimalGenerators(const Ideal& J) {
  requireHomogeneous(J, "minimalGenerators");
  std::vector<Polynomial> sorted = J.generators();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.degree() < b.degree();
                   });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    if (!contains(Ideal(J.context(), kept), g)) kept.push_back(g);
  }
  return kept;
}

}  // namespace fthresh
