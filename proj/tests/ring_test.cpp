#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fthresh/ring.hpp"
#include "test_util.hpp"

using namespace fthresh;

TEST_CASE("prime field arithmetic") {
  PrimeField F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.reduce(-1) == 6);
  CHECK_THROWS_AS(PrimeField(6), ArgumentError);
  CHECK_THROWS_AS(PrimeField(1u << 31), ArgumentError);
  CHECK(PrimeField::isPrime(2));
  CHECK(!PrimeField::isPrime(1));
}

TEST_CASE("arith examples") {
  auto ctx = makeRing(5, {"x", "y"});
  auto x = variable(ctx, 0), y = variable(ctx, 1);
  CHECK(add(add(x, y), neg(y)) == x);
  CHECK(toString(mul(add(x, y), sub(x, y))) == "x^2 + 4*y^2");

  auto c2 = makeRing(2, {"x", "y"});
  auto f = add(variable(c2, 0), variable(c2, 1));
  CHECK(toString(pow(f, 2)) == "x^2 + y^2");
  CHECK(pow(f, 0) == one(c2));
  CHECK_THROWS_AS(pow(f, -1), ArgumentError);

  auto other = makeRing(5, {"x", "z"});
  CHECK_THROWS_AS(add(x, variable(other, 0)), ContextError);
}

TEST_CASE("homogeneous add stays homogeneous") {
  auto ctx = makeRing(7, {"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    auto f = testutil::randomHomogeneous(ctx, rng, 4, 3);
    auto g = testutil::randomHomogeneous(ctx, rng, 4, 3);
    CHECK(add(f, g).isHomogeneous());
  }
}

TEST_CASE("compareMonomials conventions") {
  auto g3 = makeRing(5, {"x", "y", "z"});
  // grevlex: x^2 y > x y z at equal degree
  CHECK(compareMonomials(*g3, Monomial({2, 1, 0}), Monomial({1, 1, 1})) > 0);
  // degree first: x^3 < x^2 y^2
  CHECK(compareMonomials(*g3, Monomial({3, 0, 0}), Monomial({2, 2, 0})) < 0);
  auto lex = makeRing(5, {"x", "y"}, MonomialOrder{OrderKind::Lex, 0});
  // lex: x^2 > x y^2
  CHECK(compareMonomials(*lex, Monomial({2, 0}), Monomial({1, 2})) > 0);
}

TEST_CASE("monomial order axioms") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  std::mt19937_64 rng(42);
  for (int k = 0; k < 300; ++k) {
    Monomial a = testutil::randomMonomial(rng, 3, 5);
    Monomial b = testutil::randomMonomial(rng, 3, 5);
    Monomial c = testutil::randomMonomial(rng, 3, 5);
    int ab = compareMonomials(*ctx, a, b);
    CHECK(ab == -compareMonomials(*ctx, b, a));
    CHECK((ab == 0) == (a == b));
    // compatibility with multiplication
    CHECK(compareMonomials(*ctx, mulMonomial(a, c), mulMonomial(b, c)) == ab);
    // 1 is the least monomial
    if (!a.isOne()) {
      CHECK(compareMonomials(*ctx, a, Monomial::one(3)) > 0);
    }
    // transitivity on the sampled triple
    int bc = compareMonomials(*ctx, b, c);
    if (ab >= 0 && bc >= 0) {
      CHECK(compareMonomials(*ctx, a, c) >= 0);
    }
  }
}

TEST_CASE("block order eliminates the trailing block") {
  auto ctx = makeRing(5, {"x", "y", "t"}, MonomialOrder{OrderKind::Block, 2});
  // any t beats any power of x,y
  CHECK(compareMonomials(*ctx, Monomial({0, 0, 1}), Monomial({4, 4, 0})) > 0);
  CHECK(compareMonomials(*ctx, Monomial({1, 0, 1}), Monomial({0, 0, 1})) > 0);
}

TEST_CASE("homogeneousComponents") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  auto x = variable(ctx, 0), y = variable(ctx, 1), z = variable(ctx, 2);
  auto f = add(add(mul(x, x), mul(x, y)), z);
  auto comps = homogeneousComponents(f);
  REQUIRE(comps.size() == 2);
  CHECK(comps.at(2) == add(mul(x, x), mul(x, y)));
  CHECK(comps.at(1) == z);

  CHECK(homogeneousComponents(zero(ctx)).empty());

  auto h = mul(x, y);
  auto hc = homogeneousComponents(h);
  REQUIRE(hc.size() == 1);
  CHECK(hc.at(2) == h);

  // components sum back to f
  Polynomial sum = zero(ctx);
  for (const auto& [d, c] : comps) sum = add(sum, c);
  CHECK(sum == f);
}

TEST_CASE("Frobenius power identity") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ctx = makeRing(p, {"x", "y", "z"});
    std::mt19937_64 rng(p);
    for (int k = 0; k < 40; ++k) {
      auto f = testutil::randomPoly(ctx, rng, 5, 4);
      CHECK(pow(f, p) == frobeniusTwist(f, p));
    }
  }
}

TEST_CASE("pow matches iterated multiplication") {
  auto ctx = makeRing(7, {"x", "y"});
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    auto f = testutil::randomPoly(ctx, rng, 3, 3);
    Polynomial it = one(ctx);
    for (int e = 0; e <= 9; ++e) {
      CHECK(pow(f, e) == it);
      it = mul(it, f);
    }
  }
}

TEST_CASE("polynomial text syntax") {
  auto ctx = makeRing(5, {"x", "y", "z"});
  CHECK(toString(parsePolynomial(ctx, "x^2 + 4*y*z")) == "x^2 + 4*y*z");
  CHECK(parsePolynomial(ctx, "7") == constant(ctx, 2));
  CHECK(parsePolynomial(ctx, "x - x") == zero(ctx));
  CHECK(parsePolynomial(ctx, " x ^ 2 * y ") ==
        parsePolynomial(ctx, "x^2*y"));
  CHECK(parsePolynomial(ctx, "-x + y") == sub(variable(ctx, 1), variable(ctx, 0)));
  CHECK(parsePolynomial(ctx, "2*x*x") == scale(mul(variable(ctx, 0), variable(ctx, 0)), 2));
  CHECK_THROWS_AS(parsePolynomial(ctx, "w + 1"), ParseError);
  CHECK_THROWS_AS(parsePolynomial(ctx, "x +"), ParseError);
  CHECK_THROWS_AS(parsePolynomial(ctx, ""), ParseError);

  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    auto f = testutil::randomPoly(ctx, rng, 6, 5);
    CHECK(parsePolynomial(ctx, toString(f)) == f);
  }
}

TEST_CASE("canonical form invariants") {
  auto ctx = makeRing(5, {"x", "y"});
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    auto f = testutil::randomPoly(ctx, rng, 6, 4);
    auto g = testutil::randomPoly(ctx, rng, 6, 4);
    for (const Polynomial& h : {add(f, g), sub(f, g), mul(f, g)}) {
      for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.terms()[i].coeff != 0);
        CHECK(h.terms()[i].coeff < ctx->p);
        if (i + 1 < h.size()) {
          CHECK(compareMonomials(*ctx, h.terms()[i].mon,
                                 h.terms()[i + 1].mon) > 0);
        }
      }
    }
    CHECK(sub(f, f) == zero(ctx));
  }
}
