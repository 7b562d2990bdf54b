#ifndef FTHRESH_TEST_UTIL_HPP
#define FTHRESH_TEST_UTIL_HPP

#include <random>

#include "fthresh/ideal.hpp"

namespace fthresh::testutil {

inline Monomial randomMonomial(std::mt19937_64& rng, int n, int maxExp) {
  std::uniform_int_distribution<int> d(0, maxExp);
  std::vector<std::int32_t> e(n);
  for (auto& x : e) x = d(rng);
  return Monomial(std::move(e));
}

inline Polynomial randomPoly(const CtxPtr& ctx, std::mt19937_64& rng,
                             int terms, int maxExp) {
  std::uniform_int_distribution<int> coeff(0, static_cast<int>(ctx->p) - 1);
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    Coeff c = static_cast<Coeff>(coeff(rng));
    if (c == 0) c = 1;
    t.push_back({randomMonomial(rng, ctx->nvars(), maxExp), c});
  }
  return Polynomial(ctx, std::move(t));
}

inline Polynomial randomHomogeneous(const CtxPtr& ctx, std::mt19937_64& rng,
                                    int terms, int degree) {
  std::uniform_int_distribution<int> coeff(1, static_cast<int>(ctx->p) - 1);
  std::vector<Term> t;
  int n = ctx->nvars();
  for (int i = 0; i < terms; ++i) {
    // random composition of `degree` into n parts
    std::vector<std::int32_t> e(n, 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int d = 0; d < degree; ++d) ++e[pick(rng)];
    t.push_back({Monomial(std::move(e)), static_cast<Coeff>(coeff(rng))});
  }
  return Polynomial(ctx, std::move(t));
}

}  // namespace fthresh::testutil

#endif
