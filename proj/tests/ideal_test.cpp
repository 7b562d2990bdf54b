#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fthresh/ideal.hpp"
#include "test_util.hpp"

using namespace fthresh;

namespace {

Ideal idealOf(const CtxPtr& ctx, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parsePolynomial(ctx, s));
  return Ideal(ctx, std::move(ps));
}

std::vector<std::string> gbStrings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebnerBasis()) out.push_back(toString(g));
  return out;
}

}  // namespace

TEST_CASE("groebnerBasis examples") {
  auto ctx = makeRing(5, {"x", "y"});
  Ideal linear = idealOf(ctx, {"x + y", "x - y"});
  CHECK(gbStrings(linear) == std::vector<std::string>{"y", "x"});

  auto c3 = makeRing(5, {"x", "y", "z"});
  Ideal mono = idealOf(c3, {"x*y", "x*z", "y*z"});
  auto gb = gbStrings(mono);
  std::sort(gb.begin(), gb.end());
  CHECK(gb == std::vector<std::string>{"x*y", "x*z", "y*z"});

  auto c7 = makeRing(7, {"x", "y"});
  Ideal twisted = idealOf(c7, {"x^2 - y", "y^2 - x"});
  // oracle: exhaustive S-pair Buchberger with no pair elimination
  auto naive = detail::naiveGroebner(c7, twisted.generators());
  CHECK(twisted.groebnerBasis() == naive);
  CHECK(gbStrings(twisted) ==
        std::vector<std::string>{"y^2 + 6*x", "x^2 + 6*y"});

  CHECK(Ideal(ctx).groebnerBasis().empty());
}

TEST_CASE("GB determinism under generator permutation") {
  auto ctx = makeRing(7, {"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) {
      gens.push_back(testutil::randomPoly(ctx, rng, 3, 3));
    }
    Ideal a(ctx, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    Ideal b(ctx, gens);
    CHECK(a.groebnerBasis() == b.groebnerBasis());
  }
}

TEST_CASE("GB agrees with the naive oracle on random inputs") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  std::mt19937_64 rng(23);
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      gens.push_back(testutil::randomPoly(ctx, rng, 3, 2));
    }
    Ideal I(ctx, gens);
    CHECK(I.groebnerBasis() == detail::naiveGroebner(ctx, gens));
  }
}

TEST_CASE("normalForm examples") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  CHECK(normalForm(parsePolynomial(ctx, "x^2"), idealOf(ctx, {"x"})).isZero());
  CHECK(normalForm(parsePolynomial(ctx, "x + 1"), idealOf(ctx, {"y"})) ==
        parsePolynomial(ctx, "x + 1"));
  CHECK(normalForm(parsePolynomial(ctx, "x^2*y^2"),
                   idealOf(ctx, {"x*y", "x*z", "y*z"}))
            .isZero());
  // idempotence
  Ideal J = idealOf(ctx, {"x^2 - y*z", "y^3"});
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto f = testutil::randomPoly(ctx, rng, 5, 4);
    auto r = normalForm(f, J);
    CHECK(normalForm(r, J) == r);
  }
}

TEST_CASE("membership matches divisibility for monomial ideals") {
  auto ctx = makeRing(3, {"x", "y", "z", "w"});
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> gens;
    int g = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> mons;
    for (int i = 0; i < g; ++i) {
      Monomial m = testutil::randomMonomial(rng, 4, 3);
      mons.push_back(m);
      gens.push_back(monomialPoly(ctx, m));
    }
    Ideal I(ctx, gens);
    for (int t = 0; t < 5; ++t) {
      Monomial probe = testutil::randomMonomial(rng, 4, 6);
      bool direct = false;
      for (const auto& m : mons) direct = direct || divides(m, probe);
      CHECK(contains(I, monomialPoly(ctx, probe)) == direct);
      ++checked;
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("idealOps examples") {
  auto ctx = makeRing(5, {"x", "y"});
  Ideal X = idealOf(ctx, {"x"});
  Ideal Y = idealOf(ctx, {"y"});
  CHECK(idealEquals(idealSum(X, Y), idealOf(ctx, {"x", "y"})));
  CHECK(idealEquals(idealPower(idealOf(ctx, {"x", "y"}), 2),
                    idealOf(ctx, {"x^2", "x*y", "y^2"})));
  CHECK(idealPower(Y, 0).isUnit());
  CHECK_THROWS_AS(idealPower(Y, -1), ArgumentError);
}

TEST_CASE("bracketPower") {
  auto ctx = makeRing(5, {"x", "y"});
  Ideal I = idealOf(ctx, {"x", "y"});
  CHECK(idealEquals(bracketPower(I, 5), idealOf(ctx, {"x^5", "y^5"})));
  CHECK(idealEquals(bracketPower(I, 1), I));
  CHECK_THROWS_AS(bracketPower(I, 10), ArgumentError);
  CHECK_THROWS_AS(bracketPower(I, 3), ArgumentError);

  auto c2 = makeRing(2, {"x", "y"});
  CHECK(idealEquals(bracketPower(idealOf(c2, {"x + y"}), 2),
                    idealOf(c2, {"x^2 + y^2"})));
}

TEST_CASE("bracketPower contains q-th powers of arbitrary elements") {
  auto ctx = makeRing(3, {"x", "y", "z"});
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      gens.push_back(testutil::randomPoly(ctx, rng, 3, 2));
    }
    Ideal J(ctx, gens);
    // random element of J
    Polynomial g = zero(ctx);
    for (const auto& h : gens) {
      g = add(g, mul(h, testutil::randomPoly(ctx, rng, 2, 2)));
    }
    CHECK(contains(bracketPower(J, 9), pow(g, 9)));
  }
}

TEST_CASE("intersect examples") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  CHECK(idealEquals(intersect(idealOf(ctx, {"x"}), idealOf(ctx, {"y"})),
                    idealOf(ctx, {"x*y"})));
  // oracle for monomial ideals: pairwise lcms
  CHECK(idealEquals(intersect(idealOf(ctx, {"x", "y"}), idealOf(ctx, {"x", "z"})),
                    idealOf(ctx, {"x", "y*z"})));
  Ideal J = idealOf(ctx, {"x^2 - y*z"});
  CHECK(idealEquals(intersect(J, unitIdeal(ctx)), J));
  CHECK(intersect(J, Ideal(ctx)).isZero());
}

TEST_CASE("intersect matches the pairwise-lcm oracle on monomial ideals") {
  auto ctx = makeRing(3, {"x", "y", "z"});
  std::mt19937_64 rng(37);
  for (int k = 0; k < 12; ++k) {
    std::vector<Monomial> am, bm;
    std::vector<Polynomial> ap, bp;
    for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i) {
      am.push_back(testutil::randomMonomial(rng, 3, 3));
      ap.push_back(monomialPoly(ctx, am.back()));
    }
    for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i) {
      bm.push_back(testutil::randomMonomial(rng, 3, 3));
      bp.push_back(monomialPoly(ctx, bm.back()));
    }
    std::vector<Polynomial> lcms;
    for (const auto& a : am) {
      for (const auto& b : bm) {
        lcms.push_back(monomialPoly(ctx, lcmMonomial(a, b)));
      }
    }
    CHECK(idealEquals(intersect(Ideal(ctx, ap), Ideal(ctx, bp)),
                      Ideal(ctx, lcms)));
  }
}

TEST_CASE("colon examples") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  CHECK(idealEquals(colon(idealOf(ctx, {"x^2"}), idealOf(ctx, {"x"})),
                    idealOf(ctx, {"x"})));
  CHECK(idealEquals(colon(idealOf(ctx, {"x^5*y^5"}), idealOf(ctx, {"x*y"})),
                    idealOf(ctx, {"x^4*y^4"})));
  CHECK(idealEquals(colon(idealOf(ctx, {"x*y", "x*z", "y*z"}),
                          idealOf(ctx, {"x"})),
                    idealOf(ctx, {"y", "z"})));
  CHECK_THROWS_AS(colon(idealOf(ctx, {"x"}), Ideal(ctx)), ArgumentError);
}

TEST_CASE("colon and intersect containments") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  std::mt19937_64 rng(41);
  for (int k = 0; k < 10; ++k) {
    Ideal A(ctx, {testutil::randomPoly(ctx, rng, 2, 2),
                  testutil::randomPoly(ctx, rng, 2, 2)});
    Ideal B(ctx, {testutil::randomPoly(ctx, rng, 2, 2)});
    if (B.isZero()) continue;
    Ideal meet = intersect(A, B);
    CHECK(idealContains(A, meet));
    CHECK(idealContains(B, meet));
    Ideal q = colon(A, B);
    CHECK(idealContains(A, idealProduct(q, B)));
    CHECK(idealContains(q, A));
  }
}

TEST_CASE("exactDivide") {
  auto ctx = makeRing(7, {"x", "y"});
  auto f = parsePolynomial(ctx, "x^2 + y");
  auto g = parsePolynomial(ctx, "x^3 - 2*y^2 + x");
  CHECK(exactDivide(mul(f, g), g) == f);
  CHECK_THROWS_AS(exactDivide(parsePolynomial(ctx, "x + 1"), f),
                  InvariantViolation);
  CHECK_THROWS_AS(exactDivide(f, zero(ctx)), ArgumentError);
}

TEST_CASE("minimalGenerators") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  Ideal I = idealOf(ctx, {"x", "x^2", "y", "x*y + y^2"});
  auto mg = minimalGenerators(I);
  CHECK(mg.size() == 2);
  CHECK(minimalGenerators(Ideal(ctx)).empty());
}
