#ifndef FTHRESH_IDEAL_HPP
#define FTHRESH_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fthresh/ring.hpp"

namespace fthresh {

// Ideal of the ambient polynomial ring, with a lazily computed reduced
// Groebner basis cached per value (copies share the cache).
class Ideal {
 public:
  explicit Ideal(CtxPtr ctx, std::vector<Polynomial> gens = {});

  const CtxPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool homogeneous() const;

  // Unique reduced GB for the context's order: monic, auto-reduced,
  // sorted ascending by leading monomial. Cached; thread-safe.
  const std::vector<Polynomial>& groebnerBasis() const;

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const;
  bool isProper() const { return !isUnit(); }

 private:
  CtxPtr ctx_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };
  std::shared_ptr<Cache> cache_;
};

// Remainder of multivariate division by the reduced GB of J.
Polynomial normalForm(const Polynomial& f, const Ideal& J);
bool contains(const Ideal& J, const Polynomial& f);
bool idealContains(const Ideal& outer, const Ideal& inner);
bool idealEquals(const Ideal& a, const Ideal& b);

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, std::int64_t r);
// Frobenius bracket power; q must be a power of the characteristic.
Ideal bracketPower(const Ideal& a, std::int64_t q);
Ideal intersect(const Ideal& a, const Ideal& b);
// a : b = {f | f*b in a}; b must be nonzero.
Ideal colon(const Ideal& a, const Ideal& b);

Ideal unitIdeal(CtxPtr ctx);
// The irrelevant ideal (x_1,...,x_n).
Ideal irrelevantIdeal(CtxPtr ctx);

// Exact quotient f/g; throws InvariantViolation if g does not divide f.
Polynomial exactDivide(const Polynomial& f, const Polynomial& g);

struct HilbertFunctionTable {
  std::map<std::int64_t, std::int64_t> values;  // degree -> dim [S/J]_d
  std::optional<std::int64_t> top;              // largest nonzero degree
};

// Values dim_K [S/J]_d for d = 0..upTo. J must be homogeneous.
HilbertFunctionTable hilbertFunction(const Ideal& J, std::int64_t upTo);
// Tabulates the whole (finite) table of an Artinian quotient; throws
// NotArtinianError otherwise.
HilbertFunctionTable hilbertFunctionAuto(const Ideal& J);

// dim S/J; J = (1) gives -1.
int krullDim(const Ideal& J);

// Minimal homogeneous generating set (graded Nakayama selection).
std::vector<Polynomial> minimalGenerators(const Ideal& J);

namespace detail {
// Numerator of the Hilbert series of S/L, L the monomial ideal generated by
// gens: coefficients of a polynomial in t, as degree -> coefficient.
std::map<std::int64_t, std::int64_t> hilbertNumerator(
    std::vector<Monomial> gens, int nvars);
std::int64_t binomial(std::int64_t n, std::int64_t k);
// Buchberger without pair-elimination criteria; test oracle.
std::vector<Polynomial> naiveGroebner(CtxPtr ctx,
                                      std::vector<Polynomial> gens);
}  // namespace detail

}  // namespace fthresh

#endif
