#include "fthresh/resolution.hpp"

#include <algorithm>

namespace fthresh {

namespace {

// --- free-module Groebner machinery ------------------------------------------
//
// Module terms carry a component index. The order is position-over-term with
// lower components larger, which doubles as an elimination order: in the
// kernel computation the target components sit below the source components
// and dominate every term that involves them.

struct MTerm {
  Monomial mon;
  int comp;
  Coeff c;
};

struct MPoly {
  std::vector<MTerm> t;  // strictly descending
  bool isZero() const { return t.empty(); }
  const MTerm& lead() const { return t.front(); }
};

struct ModCtx {
  CtxPtr ring;

  int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return compareMonomials(*ring, ma, mb);
  }

  MPoly normalize(std::vector<MTerm> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
      return cmp(a.mon, a.comp, b.mon, b.comp) > 0;
    });
    PrimeField F = ring->field();
    MPoly out;
    for (auto& x : terms) {
      Coeff c = x.c % F.p;
      if (c == 0) continue;
      if (!out.t.empty() && out.t.back().comp == x.comp &&
          out.t.back().mon == x.mon) {
        Coeff merged = F.add(out.t.back().c, c);
        if (merged == 0) {
          out.t.pop_back();
        } else {
          out.t.back().c = merged;
        }
      } else {
        out.t.push_back({std::move(x.mon), x.comp, c});
      }
    }
    return out;
  }

  MPoly scaleShift(const MPoly& f, const Monomial& m, Coeff c) const {
    PrimeField F = ring->field();
    MPoly out;
    out.t.reserve(f.t.size());
    for (const auto& x : f.t) {
      out.t.push_back({mulMonomial(x.mon, m), x.comp, F.mul(x.c, c)});
    }
    return out;  // order preserved
  }

  MPoly makeMonic(MPoly f) const {
    if (f.isZero()) return f;
    PrimeField F = ring->field();
    Coeff lc = f.lead().c;
    if (lc == 1) return f;
    Coeff inv = F.inv(lc);
    for (auto& x : f.t) x.c = F.mul(x.c, inv);
    return f;
  }

  // Full reduction modulo basis (all elements monic, nonzero).
  MPoly reduce(const MPoly& f, const std::vector<MPoly>& basis) const {
    PrimeField F = ring->field();
    std::vector<MTerm> work = f.t;
    std::vector<MTerm> rem;
    std::size_t head = 0;
    while (head < work.size()) {
      const MTerm& lt = work[head];
      int gi = -1;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const MTerm& gl = basis[k].lead();
        if (gl.comp == lt.comp && divides(gl.mon, lt.mon)) {
          gi = static_cast<int>(k);
          break;
        }
      }
      if (gi < 0) {
        rem.push_back(std::move(work[head]));
        ++head;
        continue;
      }
      const MPoly& g = basis[gi];
      Monomial shift = divMonomial(lt.mon, g.lead().mon);
      Coeff c = lt.c;  // divisor monic
      if (g.t.size() == 1) {
        ++head;
        continue;
      }
      std::vector<MTerm> next;
      next.reserve(work.size() - head - 1 + g.t.size() - 1);
      std::size_t i = head + 1, j = 1;
      Monomial gm;
      int gcomp = 0;
      bool gmValid = false;
      while (i < work.size() && j < g.t.size()) {
        if (!gmValid) {
          gm = mulMonomial(g.t[j].mon, shift);
          gcomp = g.t[j].comp;
          gmValid = true;
        }
        int cc = cmp(work[i].mon, work[i].comp, gm, gcomp);
        if (cc > 0) {
          next.push_back(std::move(work[i++]));
        } else if (cc < 0) {
          next.push_back({std::move(gm), gcomp, F.neg(F.mul(g.t[j].c, c))});
          gmValid = false;
          ++j;
        } else {
          Coeff v = F.sub(work[i].c, F.mul(g.t[j].c, c));
          if (v) next.push_back({std::move(work[i].mon), work[i].comp, v});
          ++i;
          ++j;
          gmValid = false;
        }
      }
      while (i < work.size()) next.push_back(std::move(work[i++]));
      while (j < g.t.size()) {
        next.push_back({mulMonomial(g.t[j].mon, shift), g.t[j].comp,
                        F.neg(F.mul(g.t[j].c, c))});
        ++j;
      }
      work = std::move(next);
      head = 0;
    }
    MPoly out;
    out.t = std::move(rem);
    return out;
  }

  MPoly subScaled(const MPoly& a, const MPoly& b, const Monomial& bm,
                  Coeff bc) const {
    // a - bc * x^bm * b, merged.
    PrimeField F = ring->field();
    std::vector<MTerm> out;
    out.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    int scomp = 0;
    bool valid = false;
    while (i < a.t.size() && j < b.t.size()) {
      if (!valid) {
        shifted = mulMonomial(b.t[j].mon, bm);
        scomp = b.t[j].comp;
        valid = true;
      }
      int cc = cmp(a.t[i].mon, a.t[i].comp, shifted, scomp);
      if (cc > 0) {
        out.push_back(a.t[i++]);
      } else if (cc < 0) {
        out.push_back({shifted, scomp, F.neg(F.mul(b.t[j].c, bc))});
        valid = false;
        ++j;
      } else {
        Coeff v = F.sub(a.t[i].c, F.mul(b.t[j].c, bc));
        if (v) out.push_back({a.t[i].mon, a.t[i].comp, v});
        ++i;
        ++j;
        valid = false;
      }
    }
    while (i < a.t.size()) out.push_back(a.t[i++]);
    while (j < b.t.size()) {
      out.push_back({mulMonomial(b.t[j].mon, bm), b.t[j].comp,
                     F.neg(F.mul(b.t[j].c, bc))});
      ++j;
    }
    MPoly r;
    r.t = std::move(out);
    return r;
  }

  MPoly sPair(const MPoly& f, const MPoly& g) const {
    const MTerm& lf = f.lead();
    const MTerm& lg = g.lead();
    Monomial l = lcmMonomial(lf.mon, lg.mon);
    MPoly a = scaleShift(f, divMonomial(l, lf.mon), 1);
    return subScaled(a, g, divMonomial(l, lg.mon), 1);
  }

  std::vector<MPoly> reduceBasis(std::vector<MPoly> basis) const {
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j || !keep[j] || !keep[i]) continue;
        const MTerm& li = basis[i].lead();
        const MTerm& lj = basis[j].lead();
        if (lj.comp == li.comp && divides(lj.mon, li.mon) &&
            !(li.mon == lj.mon && j > i)) {
          keep[i] = false;
        }
      }
    }
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (keep[i]) minimal.push_back(makeMonic(std::move(basis[i])));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j) {
          if (j != i) others.push_back(minimal[j]);
        }
        MPoly r = makeMonic(reduce(minimal[i], others));
        bool same = r.t.size() == minimal[i].t.size();
        if (same) {
          for (std::size_t k = 0; k < r.t.size(); ++k) {
            if (r.t[k].c != minimal[i].t[k].c ||
                r.t[k].comp != minimal[i].t[k].comp ||
                r.t[k].mon != minimal[i].t[k].mon) {
              same = false;
              break;
            }
          }
        }
        if (!same) {
          minimal[i] = std::move(r);
          changed = true;
        }
      }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a,
                                                  const MPoly& b) {
      return cmp(a.lead().mon, a.lead().comp, b.lead().mon, b.lead().comp) < 0;
    });
    return minimal;
  }

  // Buchberger for submodules. Pairs form only between elements with the
  // same lead component; the coprime criterion is not valid for modules and
  // is not used.
  std::vector<MPoly> buchberger(std::vector<MPoly> gens) const {
    std::vector<MPoly> basis;
    struct Pair {
      int i, j;
      Monomial lcm;
      int comp;
    };
    std::vector<Pair> pairs;

    auto update = [&](MPoly h) {
      h = makeMonic(std::move(h));
      const int t = static_cast<int>(basis.size());
      const MTerm& lth = h.lead();
      struct Cand {
        int i;
        Monomial lcm;
      };
      std::vector<Cand> cands;
      for (int i = 0; i < t; ++i) {
        const MTerm& lti = basis[i].lead();
        if (lti.comp != lth.comp) continue;
        cands.push_back({i, lcmMonomial(lti.mon, lth.mon)});
      }
      std::vector<Cand> kept;
      for (std::size_t a = 0; a < cands.size(); ++a) {
        bool drop = false;
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b) {
          if (divides(cands[b].lcm, cands[a].lcm)) drop = true;
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) {
          if (divides(kept[b].lcm, cands[a].lcm) &&
              kept[b].lcm != cands[a].lcm) {
            drop = true;
          }
        }
        if (!drop) kept.push_back(cands[a]);
      }
      std::vector<Pair> survivors;
      for (auto& pr : pairs) {
        bool redundant =
            pr.comp == lth.comp && divides(lth.mon, pr.lcm) &&
            lcmMonomial(basis[pr.i].lead().mon, lth.mon) != pr.lcm &&
            lcmMonomial(basis[pr.j].lead().mon, lth.mon) != pr.lcm;
        if (!redundant) survivors.push_back(std::move(pr));
      }
      pairs = std::move(survivors);
      for (auto& c : kept) {
        pairs.push_back({c.i, t, std::move(c.lcm), lth.comp});
      }
      basis.push_back(std::move(h));
    };

    for (auto& g : gens) {
      if (!g.isZero()) update(std::move(g));
    }
    while (!pairs.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        int c = cmp(pairs[k].lcm, pairs[k].comp, pairs[best].lcm,
                    pairs[best].comp);
        if (c < 0) best = k;
      }
      Pair pr = std::move(pairs[best]);
      pairs.erase(pairs.begin() + best);
      MPoly s = sPair(basis[pr.i], basis[pr.j]);
      MPoly r = reduce(s, basis);
      if (!r.isZero()) update(std::move(r));
    }
    return reduceBasis(std::move(basis));
  }

  // GB of the kernel of the map S^a -> S^b sending e_i to columns[i]:
  // run Buchberger in S^{b+a} on columns[i] + e_{b+i} and keep the elements
  // free of the first b components.
  std::vector<MPoly> kernelGB(int b, const std::vector<MPoly>& columns) const {
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      MPoly w = columns[i];
      w.t.push_back({Monomial::one(ring->nvars()),
                     b + static_cast<int>(i), 1});
      // Appended unit term has the highest component: stays last.
      gens.push_back(std::move(w));
    }
    std::vector<MPoly> gb = buchberger(std::move(gens));
    std::vector<MPoly> kernel;
    for (auto& g : gb) {
      if (g.lead().comp < b) continue;
      MPoly shifted;
      shifted.t.reserve(g.t.size());
      for (auto& x : g.t) {
        shifted.t.push_back({std::move(x.mon), x.comp - b, x.c});
      }
      kernel.push_back(std::move(shifted));
    }
    return kernel;
  }
};

std::int64_t mpolyDegree(const MPoly& f,
                         const std::vector<std::int64_t>& shifts) {
  if (f.isZero()) return -1;
  std::int64_t d = f.t.front().mon.deg + shifts[f.t.front().comp];
  for (const auto& x : f.t) {
    if (x.mon.deg + shifts[x.comp] != d) {
      throw InvariantViolation("module element is not homogeneous");
    }
  }
  return d;
}

// Graded Nakayama: scan by ascending degree, keep an element iff it is not
// in the submodule generated by those already kept.
std::vector<MPoly> minimalModGens(const ModCtx& M,
                                  const std::vector<std::int64_t>& shifts,
                                  std::vector<MPoly> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const MPoly& a, const MPoly& b) {
                     return mpolyDegree(a, shifts) < mpolyDegree(b, shifts);
                   });
  std::vector<MPoly> kept;
  std::vector<MPoly> keptGB;
  for (auto& g : gens) {
    if (!kept.empty() && M.reduce(g, keptGB).isZero()) continue;
    kept.push_back(g);
    keptGB = M.buchberger(kept);
  }
  return kept;
}

MPoly columnFromMatrix(const CtxPtr& ctx,
                       const std::vector<std::vector<Polynomial>>& mat,
                       int col, bool transpose) {
  // transpose=false: entries mat[r][col] at component r.
  // transpose=true: entries mat[col][c] at component c.
  std::vector<MTerm> terms;
  int rows = static_cast<int>(mat.size());
  int cols = rows ? static_cast<int>(mat[0].size()) : 0;
  if (!transpose) {
    for (int r = 0; r < rows; ++r) {
      for (const auto& t : mat[r][col].terms()) {
        terms.push_back({t.mon, r, t.coeff});
      }
    }
  } else {
    for (int c = 0; c < cols; ++c) {
      for (const auto& t : mat[col][c].terms()) {
        terms.push_back({t.mon, c, t.coeff});
      }
    }
  }
  ModCtx M{ctx};
  return M.normalize(std::move(terms));
}

std::vector<std::vector<Polynomial>> matrixFromColumns(
    const CtxPtr& ctx, int rows, const std::vector<MPoly>& cols) {
  std::vector<std::vector<Polynomial>> mat(
      rows, std::vector<Polynomial>(cols.size(), zero(ctx)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::vector<Term>> perRow(rows);
    for (const auto& x : cols[c].t) {
      perRow[x.comp].push_back({x.mon, x.c});
    }
    for (int r = 0; r < rows; ++r) {
      mat[r][c] = Polynomial(ctx, std::move(perRow[r]));
    }
  }
  return mat;
}

void checkComplex(const GradedComplex& C) {
  const CtxPtr& ctx = C.ctx;
  for (std::size_t k = 0; k < C.maps.size(); ++k) {
    const auto& mat = C.maps[k];
    const auto& rowShifts = C.modules[k].shifts;
    const auto& colShifts = C.modules[k + 1].shifts;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      for (std::size_t c = 0; c < mat[r].size(); ++c) {
        const Polynomial& e = mat[r][c];
        if (e.isZero()) continue;
        if (!e.isHomogeneous() ||
            e.degree() != colShifts[c] - rowShifts[r]) {
          throw InvariantViolation("differential entry has wrong degree");
        }
      }
    }
  }
  // d_k . d_{k+1} = 0
  for (std::size_t k = 0; k + 1 < C.maps.size(); ++k) {
    const auto& A = C.maps[k];
    const auto& B = C.maps[k + 1];
    for (std::size_t r = 0; r < A.size(); ++r) {
      for (std::size_t c = 0; c < B[0].size(); ++c) {
        Polynomial acc = zero(ctx);
        for (std::size_t m = 0; m < B.size(); ++m) {
          acc = add(acc, mul(A[r][m], B[m][c]));
        }
        if (!acc.isZero()) {
          throw InvariantViolation("complex maps do not compose to zero");
        }
      }
    }
  }
}

}  // namespace

GradedComplex freeResolution(const Ideal& I) {
  if (!I.homogeneous()) {
    throw ArgumentError("freeResolution requires a homogeneous ideal");
  }
  if (I.isUnit()) {
    throw ArgumentError("freeResolution requires a proper ideal");
  }
  CtxPtr ctx = I.context();
  GradedComplex C;
  C.ctx = ctx;
  C.modules.push_back({{0}});
  std::vector<Polynomial> gens = minimalGenerators(I);
  if (gens.empty()) return C;  // R = S

  ModCtx M{ctx};
  GradedFreeModule F1;
  std::vector<std::vector<Polynomial>> d1(1);
  for (const auto& g : gens) {
    F1.shifts.push_back(g.degree());
    d1[0].push_back(g);
  }
  C.modules.push_back(F1);
  C.maps.push_back(d1);

  while (true) {
    int level = C.length();
    const auto& mat = C.maps[level - 1];
    int rows = C.modules[level - 1].rank();
    std::vector<MPoly> cols;
    for (int c = 0; c < C.modules[level].rank(); ++c) {
      cols.push_back(columnFromMatrix(ctx, mat, c, false));
    }
    std::vector<MPoly> kernel = M.kernelGB(rows, cols);
    std::vector<MPoly> minimal =
        minimalModGens(M, C.modules[level].shifts, std::move(kernel));
    if (minimal.empty()) break;
    GradedFreeModule next;
    for (const auto& g : minimal) {
      next.shifts.push_back(mpolyDegree(g, C.modules[level].shifts));
    }
    C.maps.push_back(
        matrixFromColumns(ctx, C.modules[level].rank(), minimal));
    C.modules.push_back(std::move(next));
    if (C.length() > ctx->nvars()) {
      throw InvariantViolation(
          "resolution exceeds the Hilbert syzygy bound");
    }
  }
  checkComplex(C);
  return C;
}

BettiTable bettiTable(const GradedComplex& C) {
  for (const auto& mat : C.maps) {
    for (const auto& row : mat) {
      for (const auto& e : row) {
        if (!e.isZero() && e.degree() == 0) {
          throw MinimalityError("complex has a unit entry");
        }
      }
    }
  }
  BettiTable B;
  for (int i = 0; i <= C.length(); ++i) {
    for (auto j : C.modules[i].shifts) {
      ++B.entries[{i, j}];
    }
  }
  B.pd = C.length();
  B.reg = 0;
  for (const auto& [key, count] : B.entries) {
    (void)count;
    B.reg = std::max(B.reg, key.second - key.first);
  }
  return B;
}

namespace {

// Vector-space dimension of a graded submodule at one degree, read off the
// lead-term module of its GB: per component, count monomials of the right
// degree inside the component's lead ideal.
struct SubmoduleDims {
  int n;
  std::vector<std::int64_t> shifts;  // of the ambient free module
  // per component: Hilbert numerator of S/(lead ideal)
  std::vector<std::map<std::int64_t, std::int64_t>> numerators;

  SubmoduleDims(const CtxPtr& ctx, int rank,
                const std::vector<std::int64_t>& shifts_,
                const std::vector<MPoly>& gb)
      : n(ctx->nvars()), shifts(shifts_) {
    std::vector<std::vector<Monomial>> leads(rank);
    for (const auto& g : gb) {
      leads[g.lead().comp].push_back(g.lead().mon);
    }
    for (int c = 0; c < rank; ++c) {
      numerators.push_back(detail::hilbertNumerator(leads[c], n));
    }
  }

  std::int64_t dimAt(std::int64_t d) const {
    std::int64_t total = 0;
    for (std::size_t c = 0; c < numerators.size(); ++c) {
      std::int64_t t = d - shifts[c];
      if (t < 0) continue;
      std::int64_t all = detail::binomial(t + n - 1, n - 1);
      std::int64_t outside = 0;
      for (const auto& [j, coeff] : numerators[c]) {
        if (j > t) break;
        outside += coeff * detail::binomial(t - j + n - 1, n - 1);
      }
      total += all - outside;
    }
    return total;
  }
};

}  // namespace

AInvariants aInvariants(const Ideal& I) {
  if (!I.homogeneous()) {
    throw ArgumentError("aInvariants requires a homogeneous ideal");
  }
  if (I.isUnit()) {
    throw ArgumentError("aInvariants requires a proper ideal");
  }
  CtxPtr ctx = I.context();
  int n = ctx->nvars();
  GradedComplex C = freeResolution(I);
  int pd = C.length();
  ModCtx M{ctx};

  AInvariants result;
  result.dim = krullDim(I);

  for (int k = 0; k <= pd; ++k) {
    int rank = C.modules[k].rank();
    std::vector<std::int64_t> dualShifts;
    for (auto s : C.modules[k].shifts) dualShifts.push_back(-s);

    // image of the dual of d_k inside F_k^*
    std::vector<MPoly> imGB;
    if (k >= 1) {
      std::vector<MPoly> cols;
      int prevRank = C.modules[k - 1].rank();
      for (int r = 0; r < prevRank; ++r) {
        cols.push_back(columnFromMatrix(ctx, C.maps[k - 1], r, true));
      }
      imGB = M.buchberger(std::move(cols));
    }
    // kernel of the dual of d_{k+1}
    std::vector<MPoly> kerGB;
    if (k < pd) {
      std::vector<MPoly> cols;
      for (int r = 0; r < rank; ++r) {
        cols.push_back(columnFromMatrix(ctx, C.maps[k], r, true));
      }
      int target = C.modules[k + 1].rank();
      kerGB = M.kernelGB(target, cols);
    } else {
      for (int r = 0; r < rank; ++r) {
        MPoly e;
        e.t.push_back({Monomial::one(n), r, 1});
        kerGB.push_back(std::move(e));
      }
    }

    std::optional<std::int64_t> witnessDeg;
    for (const auto& g : kerGB) {
      if (imGB.empty() ? !g.isZero() : !M.reduce(g, imGB).isZero()) {
        std::int64_t d = mpolyDegree(g, dualShifts);
        if (!witnessDeg || d < *witnessDeg) witnessDeg = d;
      }
    }
    if (!witnessDeg) continue;  // Ext^k = 0

    SubmoduleDims kerDims(ctx, rank, dualShifts, kerGB);
    SubmoduleDims imDims(ctx, rank, dualShifts, imGB);
    std::int64_t dmin = *witnessDeg;
    for (const auto& g : kerGB) {
      dmin = std::min(dmin, mpolyDegree(g, dualShifts));
    }
    std::optional<std::int64_t> minDeg;
    for (std::int64_t d = dmin; d <= *witnessDeg; ++d) {
      if (kerDims.dimAt(d) > imDims.dimAt(d)) {
        minDeg = d;
        break;
      }
    }
    if (!minDeg) {
      throw InvariantViolation("nonzero Ext without a degree witness");
    }
    result.values[n - k] = -n - *minDeg;
  }
  if (!result.values.count(result.dim)) {
    throw InvariantViolation("a_d must be finite for a proper ideal");
  }
  return result;
}

Classification classify(const Ideal& I) {
  GradedComplex C = freeResolution(I);
  Classification cls;
  cls.pd = C.length();
  cls.dim = krullDim(I);
  cls.depth = I.context()->nvars() - cls.pd;
  cls.isCM = (cls.depth == cls.dim);
  cls.type = C.modules[cls.pd].rank();
  cls.isGorenstein = cls.isCM && cls.type == 1;
  return cls;
}

HomologicalBoundsReport homologicalBounds(const Ideal& I,
                                          std::optional<Rational> fpt) {
  HomologicalBoundsReport rep;
  GradedComplex C = freeResolution(I);
  BettiTable B = bettiTable(C);
  rep.pd = B.pd;
  rep.reg = B.reg;
  rep.dim = krullDim(I);
  rep.mu = static_cast<std::int64_t>(minimalGenerators(I).size());
  rep.fpt = fpt;
  rep.pdBoundHolds = rep.pd <= rep.mu;
  if (fpt) {
    rep.asserted = true;
    rep.regBoundHolds = Rational(rep.reg) <= Rational(rep.dim) - *fpt;
  }
  return rep;
}

}  // namespace fthresh
