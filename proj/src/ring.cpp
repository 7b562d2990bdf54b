#include "fthresh/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fthresh {

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!isPrime(prime)) {
    throw ArgumentError("modulus " + std::to_string(prime) + " is not prime");
  }
  if (prime >= (1u << 31)) {
    throw ArgumentError("modulus must fit in 31 bits");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t k) const {
  std::uint64_t r = 1, b = a % p;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<Coeff>(r);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw ArgumentError("division by zero in F_p");
  return pow(a, p - 2);
}

bool PrimeField::isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int RingContext::varIndex(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (varNames[i] == name) return i;
  }
  return -1;
}

CtxPtr makeRing(std::uint32_t p, std::vector<std::string> varNames,
                MonomialOrder order) {
  PrimeField check(p);  // validates primality
  if (varNames.empty()) throw ArgumentError("ring needs at least one variable");
  for (std::size_t i = 0; i < varNames.size(); ++i) {
    for (std::size_t j = i + 1; j < varNames.size(); ++j) {
      if (varNames[i] == varNames[j]) {
        throw ArgumentError("duplicate variable name " + varNames[i]);
      }
    }
  }
  if (order.kind == OrderKind::Block &&
      (order.split <= 0 || order.split >= static_cast<int>(varNames.size()))) {
    throw ArgumentError("block order split out of range");
  }
  auto ctx = std::make_shared<RingContext>();
  ctx->p = p;
  ctx->varNames = std::move(varNames);
  ctx->order = order;
  return ctx;
}

bool sameContext(const RingContext& a, const RingContext& b) {
  if (&a == &b) return true;
  return a.p == b.p && a.varNames == b.varNames && a.order == b.order;
}

void requireSameContext(const RingContext& a, const RingContext& b) {
  if (!sameContext(a, b)) throw ContextError("ring context mismatch");
}

Monomial::Monomial(std::vector<std::int32_t> e) : exp(std::move(e)) {
  deg = 0;
  for (auto x : exp) {
    if (x < 0) throw ArgumentError("negative exponent");
    deg += x;
  }
}

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.exp.assign(nvars, 0);
  m.deg = 0;
  return m;
}

namespace {

// grevlex on a slice [lo, hi): degree first, then the last nonzero entry of
// a - b negative means a > b.
int grevlexSlice(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compareMonomials(const RingContext& ctx, const Monomial& a,
                     const Monomial& b) {
  int n = ctx.nvars();
  if (static_cast<int>(a.exp.size()) != n ||
      static_cast<int>(b.exp.size()) != n) {
    throw ContextError("monomial length does not match ring");
  }
  switch (ctx.order.kind) {
    case OrderKind::Grevlex:
      return grevlexSlice(a, b, 0, n);
    case OrderKind::Lex:
      for (int i = 0; i < n; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Block: {
      int c = grevlexSlice(a, b, ctx.order.split, n);
      if (c != 0) return c;
      return grevlexSlice(a, b, 0, ctx.order.split);
    }
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < a.exp.size(); ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

Monomial mulMonomial(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
  r.deg = a.deg + b.deg;
  return r;
}

Monomial divMonomial(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) {
    r.exp[i] -= b.exp[i];
    if (r.exp[i] < 0) throw ArgumentError("monomial division not exact");
  }
  r.deg = a.deg - b.deg;
  return r;
}

Monomial lcmMonomial(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (std::size_t i = 0; i < r.exp.size(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

Monomial gcdMonomial(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (std::size_t i = 0; i < r.exp.size(); ++i) {
    r.exp[i] = std::min(a.exp[i], b.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

Monomial powMonomial(const Monomial& a, std::int64_t k) {
  if (k < 0) throw ArgumentError("negative monomial power");
  Monomial r = a;
  for (auto& e : r.exp) e = static_cast<std::int32_t>(e * k);
  r.deg = a.deg * k;
  return r;
}

Polynomial::Polynomial(CtxPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextError("polynomial without ring context");
  const auto& c = *ctx_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compareMonomials(c, a.mon, b.mon) > 0;
  });
  terms_.reserve(terms.size());
  PrimeField F = c.field();
  for (auto& t : terms) {
    if (static_cast<int>(t.mon.exp.size()) != c.nvars()) {
      throw ContextError("monomial length does not match ring");
    }
    Coeff coeff = t.coeff % c.p;
    if (coeff == 0) continue;
    if (!terms_.empty() && terms_.back().mon == t.mon) {
      Coeff merged = F.add(terms_.back().coeff, coeff);
      if (merged == 0) {
        terms_.pop_back();
      } else {
        terms_.back().coeff = merged;
      }
    } else {
      terms_.push_back({std::move(t.mon), coeff});
    }
  }
}

Polynomial::Polynomial(CtxPtr ctx, std::vector<Term> terms, SortedTag)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

Polynomial detail_fromSortedTerms(CtxPtr ctx, std::vector<Term> t) {
  return Polynomial(std::move(ctx), std::move(t), Polynomial::SortedTag{});
}

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw ArgumentError("zero polynomial has no lead term");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.deg);
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_.front().mon.deg;
  for (const auto& t : terms_) {
    if (t.mon.deg != d) return false;
  }
  return true;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.isOne());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ctx_ || !b.ctx_) return a.terms_.empty() && b.terms_.empty();
  requireSameContext(*a.ctx_, *b.ctx_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].mon != b.terms_[i].mon) {
      return false;
    }
  }
  return true;
}

Polynomial zero(CtxPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial one(CtxPtr ctx) { return constant(std::move(ctx), 1); }

Polynomial constant(CtxPtr ctx, std::int64_t c) {
  Coeff r = ctx->field().reduce(c);
  int n = ctx->nvars();
  if (r == 0) return zero(std::move(ctx));
  return Polynomial(std::move(ctx), {{Monomial::one(n), r}});
}

Polynomial variable(CtxPtr ctx, int i) {
  if (i < 0 || i >= ctx->nvars()) throw ArgumentError("variable index");
  Monomial m = Monomial::one(ctx->nvars());
  m.exp[i] = 1;
  m.deg = 1;
  return Polynomial(std::move(ctx), {{std::move(m), 1}});
}

Polynomial monomialPoly(CtxPtr ctx, Monomial m, Coeff c) {
  return Polynomial(std::move(ctx), {{std::move(m), c}});
}

namespace {

// Merge two descending term lists, combining equal monomials; g is scaled
// by gScale on the fly.
Polynomial mergeScaled(const Polynomial& f, const Polynomial& g, Coeff gScale) {
  requireSameContext(*f.context(), *g.context());
  const RingContext& ctx = *f.context();
  PrimeField F = ctx.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    int c = compareMonomials(ctx, a[i].mon, b[j].mon);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = F.mul(b[j].coeff, gScale);
      if (v) out.push_back({b[j].mon, v});
      ++j;
    } else {
      Coeff v = F.add(a[i].coeff, F.mul(b[j].coeff, gScale));
      if (v) out.push_back({a[i].mon, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Coeff v = F.mul(b[j].coeff, gScale);
    if (v) out.push_back({b[j].mon, v});
  }
  return detail_fromSortedTerms(f.context(), std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g) {
  return mergeScaled(f, g, 1);
}

Polynomial sub(const Polynomial& f, const Polynomial& g) {
  return mergeScaled(f, g, f.context()->field().neg(1));
}

Polynomial neg(const Polynomial& f) {
  return scale(f, f.context()->field().neg(1));
}

Polynomial scale(const Polynomial& f, Coeff c) {
  PrimeField F = f.context()->field();
  c %= F.p;
  if (c == 0) return zero(f.context());
  std::vector<Term> t = f.terms();
  for (auto& x : t) x.coeff = F.mul(x.coeff, c);
  return Polynomial(f.context(), std::move(t));
}

Polynomial mulTerm(const Polynomial& f, const Monomial& m, Coeff c) {
  PrimeField F = f.context()->field();
  c %= F.p;
  if (c == 0) return zero(f.context());
  std::vector<Term> t = f.terms();
  for (auto& x : t) {
    x.mon = mulMonomial(x.mon, m);
    x.coeff = F.mul(x.coeff, c);
  }
  // Multiplication by a monomial preserves the term order.
  return detail_fromSortedTerms(f.context(), std::move(t));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  requireSameContext(*f.context(), *g.context());
  const RingContext& ctx = *f.context();
  if (f.isZero() || g.isZero()) return zero(f.context());
  PrimeField F = ctx.field();
  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return compareMonomials(ctx, a, b) > 0;
  };
  std::map<Monomial, std::uint64_t, decltype(cmp)> acc(cmp);
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      Monomial m = mulMonomial(a.mon, b.mon);
      acc[std::move(m)] += std::uint64_t(a.coeff) * b.coeff % F.p;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, v] : acc) {
    Coeff c = static_cast<Coeff>(v % F.p);
    if (c) out.push_back({m, c});
  }
  return detail_fromSortedTerms(f.context(), std::move(out));
}

Polynomial frobeniusTwist(const Polynomial& f, std::int64_t q) {
  std::vector<Term> t = f.terms();
  for (auto& x : t) x.mon = powMonomial(x.mon, q);
  return Polynomial(f.context(), std::move(t));
}

Polynomial pow(const Polynomial& f, std::int64_t k) {
  if (k < 0) throw ArgumentError("negative polynomial power");
  CtxPtr ctx = f.context();
  if (!ctx) throw ContextError("pow on polynomial without context");
  if (k == 0) return one(ctx);
  if (f.isZero()) return zero(ctx);
  // Base-p splitting: f^k = prod_i (f^{k_i})^{p^i}, with the inner powers
  // Frobenius twists. Exact in characteristic p and far cheaper than direct
  // powering for the large exponents the Fedder computations need.
  std::uint32_t p = ctx->p;
  std::vector<Coeff> digits;
  std::int64_t kk = k;
  while (kk) {
    digits.push_back(static_cast<Coeff>(kk % p));
    kk /= p;
  }
  // Small powers f^0..f^{p-1} computed iteratively, on demand.
  std::vector<Polynomial> smallPows{one(ctx), f};
  auto smallPow = [&](Coeff d) -> const Polynomial& {
    while (smallPows.size() <= d) {
      smallPows.push_back(mul(smallPows.back(), f));
    }
    return smallPows[d];
  };
  Polynomial result = one(ctx);
  std::int64_t qi = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i]) {
      result = mul(result, frobeniusTwist(smallPow(digits[i]), qi));
    }
    qi *= p;
  }
  return result;
}

std::map<std::int64_t, Polynomial> homogeneousComponents(const Polynomial& f) {
  std::map<std::int64_t, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) buckets[t.mon.deg].push_back(t);
  std::map<std::int64_t, Polynomial> out;
  for (auto& [d, terms] : buckets) {
    out.emplace(d, Polynomial(f.context(), std::move(terms)));
  }
  return out;
}

std::string toString(const RingContext& ctx, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ctx.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << "*";
    os << ctx.varNames[i];
    if (m.exp[i] > 1) os << "^" << m.exp[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string toString(const Polynomial& f) {
  if (f.isZero()) return "0";
  const RingContext& ctx = *f.context();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    if (t.mon.isOne()) {
      os << t.coeff;
    } else if (t.coeff != 1) {
      os << t.coeff << "*" << toString(ctx, t.mon);
    } else {
      os << toString(ctx, t.mon);
    }
    first = false;
  }
  return os.str();
}

namespace {

struct PolyParser {
  const RingContext& ctx;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::int64_t parseNumber() {
    skipWs();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected number");
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      v %= static_cast<std::int64_t>(ctx.p);  // reduce as we go
      ++pos;
    }
    return v;
  }

  std::string parseIdent() {
    skipWs();
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) ||
                             s[pos] == '_'))
      fail("expected identifier");
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  std::int64_t parseExponent() {
    skipWs();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected exponent");
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ll << 30)) fail("exponent too large");
      ++pos;
    }
    return v;
  }

  // term := [coeff '*'] factor { '*' factor } | coeff
  Term parseTerm() {
    Term t{Monomial::one(ctx.nvars()), 1};
    PrimeField F = ctx.field();
    bool sawFactor = false;
    skipWs();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      t.coeff = F.reduce(parseNumber());
      sawFactor = true;
      if (!eat('*')) {
        return t;  // bare constant
      }
      sawFactor = false;
    }
    while (true) {
      std::string name = parseIdent();
      int idx = ctx.varIndex(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      std::int64_t e = 1;
      if (eat('^')) e = parseExponent();
      t.mon.exp[idx] += static_cast<std::int32_t>(e);
      t.mon.deg += e;
      sawFactor = true;
      if (!eat('*')) break;
    }
    if (!sawFactor) fail("empty term");
    return t;
  }
};

}  // namespace

Polynomial parsePolynomial(CtxPtr ctx, const std::string& text) {
  PolyParser P{*ctx, text};
  std::vector<Term> terms;
  PrimeField F = ctx->field();
  P.skipWs();
  if (P.pos == text.size()) throw ParseError("empty polynomial", 1, 1);
  bool negative = false;
  if (P.eat('-')) negative = true;
  while (true) {
    Term t = P.parseTerm();
    if (negative) t.coeff = F.neg(t.coeff);
    terms.push_back(std::move(t));
    P.skipWs();
    if (P.pos >= text.size()) break;
    if (P.eat('+')) {
      negative = false;
    } else if (P.eat('-')) {
      negative = true;
    } else {
      P.fail("expected '+' or '-'");
    }
  }
  return Polynomial(std::move(ctx), std::move(terms));
}

}  // namespace fthresh
