#ifndef FTHRESH_RING_HPP
#define FTHRESH_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fthresh/errors.hpp"

namespace fthresh {

using Coeff = std::uint32_t;

// Arithmetic in the prime field F_p, p < 2^31.
struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime);

  Coeff reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p ? static_cast<Coeff>(s - p) : static_cast<Coeff>(s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(std::uint64_t(a) * b % p);
  }
  Coeff pow(Coeff a, std::uint64_t k) const;
  Coeff inv(Coeff a) const;

  static bool isPrime(std::uint64_t n);
};

enum class OrderKind { Grevlex, Lex, Block };

// Block: exponents [split, n) are compared first (grevlex within the block),
// then [0, split) by grevlex. Used to eliminate auxiliary variables appended
// at the end of the variable list.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int split = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct RingContext;
using CtxPtr = std::shared_ptr<const RingContext>;

struct RingContext {
  std::uint32_t p;
  std::vector<std::string> varNames;
  MonomialOrder order;

  int nvars() const { return static_cast<int>(varNames.size()); }
  PrimeField field() const { return PrimeField(p); }
  int varIndex(const std::string& name) const;  // -1 if absent
};

CtxPtr makeRing(std::uint32_t p, std::vector<std::string> varNames,
                MonomialOrder order = {});
bool sameContext(const RingContext& a, const RingContext& b);
void requireSameContext(const RingContext& a, const RingContext& b);

struct Monomial {
  std::vector<std::int32_t> exp;
  std::int64_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<std::int32_t> e);
  static Monomial one(int nvars);

  bool isOne() const { return deg == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
};

// Total order on monomials: +1 if a > b, 0 if equal, -1 if a < b.
int compareMonomials(const RingContext& ctx, const Monomial& a,
                     const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mulMonomial(const Monomial& a, const Monomial& b);
Monomial divMonomial(const Monomial& a, const Monomial& b);  // a / b, b | a
Monomial lcmMonomial(const Monomial& a, const Monomial& b);
Monomial gcdMonomial(const Monomial& a, const Monomial& b);
Monomial powMonomial(const Monomial& a, std::int64_t k);

struct Term {
  Monomial mon;
  Coeff coeff;
};

// Sparse polynomial over F_p: terms strictly descending in the context's
// monomial order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(CtxPtr ctx, std::vector<Term> terms);

  const CtxPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().mon; }

  // -1 for the zero polynomial.
  std::int64_t degree() const;
  bool isHomogeneous() const;
  bool isMonomial() const { return terms_.size() == 1; }
  bool isConstant() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  struct SortedTag {};
  Polynomial(CtxPtr ctx, std::vector<Term> terms, SortedTag);
  friend Polynomial detail_fromSortedTerms(CtxPtr ctx, std::vector<Term> t);

  CtxPtr ctx_;
  std::vector<Term> terms_;
};

// Internal: wraps terms already in strict descending order with no zeros.
Polynomial detail_fromSortedTerms(CtxPtr ctx, std::vector<Term> t);

Polynomial zero(CtxPtr ctx);
Polynomial one(CtxPtr ctx);
Polynomial constant(CtxPtr ctx, std::int64_t c);
Polynomial variable(CtxPtr ctx, int i);
Polynomial monomialPoly(CtxPtr ctx, Monomial m, Coeff c = 1);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial mulTerm(const Polynomial& f, const Monomial& m, Coeff c);
Polynomial scale(const Polynomial& f, Coeff c);
Polynomial pow(const Polynomial& f, std::int64_t k);

// f^q with q a power of the characteristic: raises each exponent vector and
// fixes coefficients (c^p = c in F_p).
Polynomial frobeniusTwist(const Polynomial& f, std::int64_t q);

std::map<std::int64_t, Polynomial> homogeneousComponents(const Polynomial& f);

// Text form: terms joined by " + ", coefficients as canonical residues,
// e.g. "x^2 + 4*y*z". parsePolynomial accepts the same grammar plus '-'.
std::string toString(const Polynomial& f);
std::string toString(const RingContext& ctx, const Monomial& m);
Polynomial parsePolynomial(CtxPtr ctx, const std::string& text);

}  // namespace fthresh

#endif
