#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bmpoly/errors.hpp"
#include "bmpoly/poly.hpp"
#include "int_poly.hpp"
#include "test_support.hpp"

using namespace bmpoly;
using bmpoly::test::p;
using bmpoly::test::q;

TEST_SUITE("rational") {
  TEST_CASE("normalized on construction") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.is_canonical());
    CHECK(r.str() == "-3/2");
  }

  TEST_CASE("text form omits unit denominators") {
    CHECK(Rational(7).str() == "7");
    CHECK(q("14/2").str() == "7");
    CHECK(q("-0/5").str() == "0");
    CHECK(q("21/8") == Rational(BigInt(21), BigInt(8)));
  }

  TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK_THROWS_AS(q("1/-2"), ParseError);
    CHECK_THROWS_AS(q("1.5"), ParseError);
    CHECK_THROWS_AS(q("3/"), ParseError);
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  }

  TEST_CASE("arithmetic stays canonical") {
    test::Gen gen(7);
    for (int t = 0; t < 200; ++t) {
      const Rational a = gen.rational(50, 30);
      const Rational b = gen.rational(50, 30);
      CHECK((a + b).is_canonical());
      CHECK((a - b).is_canonical());
      CHECK((a * b).is_canonical());
      if (!b.is_zero()) CHECK((a / b).is_canonical());
    }
  }

  TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    // Pascal's rule
    for (long n = 1; n < 40; ++n) {
      for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_SUITE("poly") {
  TEST_CASE("normalization and degree") {
    const Poly z{Rational(0), Rational(0)};
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    CHECK(p("[1, 2, 0, 0]").degree() == 1u);
    CHECK(Poly::constant(0).is_zero());
    CHECK(Poly::constant(5).degree() == 0u);
    CHECK_THROWS_AS(Poly().leading(), DegenerateInput);
  }

  TEST_CASE("standard predicate") {
    CHECK(Poly().is_standard());
    CHECK(p("[-1, 2]").is_standard());
    CHECK_FALSE(p("[1, -2]").is_standard());
  }

  TEST_CASE("text form round trip") {
    CHECK(p("[21/8, 15/4, 3/2]").str() == "[21/8, 15/4, 3/2]");
    CHECK(Poly().str() == "[]");
    CHECK(p("[ ]").is_zero());
    CHECK_THROWS_AS(p("1, 2"), ParseError);
    CHECK_THROWS_AS(p("[1, ]"), ParseError);
  }

  TEST_CASE("poly_arith examples") {
    CHECK(poly_arith(ArithOp::mul, p("[1, 1]"), p("[-1, 1]")) == p("[-1, 0, 1]"));
    const Poly f = p("[3, -1/2, 7]");
    CHECK(poly_arith(ArithOp::add, f, Poly()) == f);
    CHECK(poly_arith(ArithOp::sub, f, f).is_zero());
    // 2^-4 (24x^2 + 60x + 42), the n = 2 row before scaling
    CHECK(scale(p("[42, 60, 24]"), q("1/16")) == p("[21/8, 15/4, 3/2]"));
    CHECK(scale(f, 0).is_zero());
  }

  TEST_CASE("product degree is additive") {
    test::Gen gen(11);
    for (int t = 0; t < 100; ++t) {
      const Poly f = gen.nonzero_poly(6);
      const Poly g = gen.nonzero_poly(6);
      CHECK((f * g).degree() == *f.degree() + *g.degree());
    }
  }

  TEST_CASE("ring axioms on random polynomials") {
    test::Gen gen(12);
    for (int t = 0; t < 100; ++t) {
      const Poly f = gen.poly(5), g = gen.poly(5), h = gen.poly(5);
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f - f == Poly());
    }
  }

  TEST_CASE("derivative") {
    CHECK(derivative(p("[-1, 0, 1]")) == p("[0, 2]"));
    CHECK(derivative(Poly::constant(7)).is_zero());
    CHECK(derivative(Poly()).is_zero());
    CHECK(derivative(p("[21/8, 15/4, 3/4]")) == p("[15/4, 3/2]"));
  }

  TEST_CASE("derivative is linear") {
    test::Gen gen(13);
    for (int t = 0; t < 100; ++t) {
      const Poly f = gen.poly(7), g = gen.poly(7);
      const Rational a = gen.rational(), b = gen.rational();
      CHECK(derivative(f * a + g * b) == derivative(f) * a + derivative(g) * b);
    }
  }

  TEST_CASE("evaluate") {
    CHECK(evaluate(p("[-1, 0, 1]"), 2) == 3);
    CHECK(evaluate(p("[3/2, 1]"), 0) == q("3/2"));
    CHECK(evaluate(Poly(), q("17/3")) == 0);
    CHECK(evaluate(p("[1, 1, 1]"), q("-1/2")) == q("3/4"));
  }

  TEST_CASE("divrem examples") {
    auto [q1, r1] = divrem(p("[-1, 0, 1]"), p("[0, 1]"));
    CHECK(q1 == p("[0, 1]"));
    CHECK(r1 == p("[-1]"));
    auto [q2, r2] = divrem(p("[0, 0, 0, 1]"), p("[1, 0, 1]"));
    CHECK(q2 == p("[0, 1]"));
    CHECK(r2 == p("[0, -1]"));
    const Poly f = p("[4, -2/3, 5, 1/7]");
    auto [q3, r3] = divrem(f, Poly::constant(q("-2/5")));
    CHECK(q3 == f * q("-5/2"));
    CHECK(r3.is_zero());
    auto [q4, r4] = divrem(p("[1, 2]"), p("[0, 0, 1]"));
    CHECK(q4.is_zero());
    CHECK(r4 == p("[1, 2]"));
  }

  TEST_CASE("divrem by zero throws") {
    CHECK_THROWS_AS(divrem(p("[1, 1]"), Poly()), DivisionByZeroPolynomial);
  }

  TEST_CASE("divrem round trip") {
    test::Gen gen(14);
    for (int t = 0; t < 200; ++t) {
      const Poly f = gen.poly(8);
      const Poly g = gen.nonzero_poly(8);
      auto [quo, rem] = divrem(f, g);
      CHECK(quo * g + rem == f);
      CHECK((rem.is_zero() || *rem.degree() < *g.degree()));
    }
  }

  TEST_CASE("gcd examples") {
    CHECK(gcd(p("[-1, 0, 1]"), p("[-1, 1]")) == p("[-1, 1]"));
    CHECK(gcd(p("[1, 0, 1]"), p("[0, 1]")) == p("[1]"));
    CHECK(gcd(p("[1, -2, 1]"), p("[-2, 2]")) == p("[-1, 1]"));
    CHECK(gcd(Poly(), p("[2, 4]")) == p("[1/2, 1]"));
    CHECK_THROWS_AS(gcd(Poly(), Poly()), DegenerateInput);
  }

  TEST_CASE("gcd of products recovers the common factor") {
    test::Gen gen(15);
    for (int t = 0; t < 60; ++t) {
      const Poly common = monic(gen.nonzero_poly(3));
      const Poly a = gen.nonzero_poly(4), b = gen.nonzero_poly(4);
      const Poly g = gcd(a * common, b * common);
      // g is monic and divides both, and common divides g
      CHECK(g.leading() == 1);
      CHECK(divrem(a * common, g).remainder.is_zero());
      CHECK(divrem(b * common, g).remainder.is_zero());
      CHECK(divrem(g, common).remainder.is_zero());
      // cross-check against plain Euclid over the rationals
      Poly x = a * common, y = b * common;
      while (!y.is_zero()) {
        Poly r = divrem(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
      }
      CHECK(g == monic(x));
    }
  }

  TEST_CASE("squarefree part") {
    CHECK(squarefree_part(p("[1, -2, 1]")) == p("[-1, 1]"));
    CHECK(squarefree_part(p("[0, 0, 0, 1]")) == p("[0, 1]"));
    CHECK(squarefree_part(p("[-1, 0, 1]")) == p("[-1, 0, 1]"));
    CHECK(squarefree_part(Poly::constant(3)) == Poly::constant(1));
    CHECK_THROWS_AS(squarefree_part(Poly()), DegenerateInput);
  }

  TEST_CASE("squarefree part divides f and is squarefree") {
    test::Gen gen(16);
    for (int t = 0; t < 60; ++t) {
      const Poly base = gen.nonzero_poly(3);
      const Poly f = base * base * gen.nonzero_poly(4);
      if (f.is_constant()) continue;
      const Poly s = squarefree_part(f);
      CHECK(divrem(f, s).remainder.is_zero());
      CHECK(gcd(s, derivative(s)).is_constant());
    }
  }

  TEST_CASE("squarefree decomposition") {
    const Rational one(1);
    const Poly f = from_roots(std::vector<Rational>{1, 2, 2, 3, 3, 3}) * q("5/3");
    const auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::pair{p("[-1, 1]"), 1u});
    CHECK(parts[1] == std::pair{p("[-2, 1]"), 2u});
    CHECK(parts[2] == std::pair{p("[-3, 1]"), 3u});
    CHECK(squarefree_decomposition(Poly::constant(2)).empty());
  }

  TEST_CASE("taylor shift") {
    // (x - 1)^2 shifted by +1 is x^2
    CHECK(taylor_shift(p("[1, -2, 1]"), 1) == p("[0, 0, 1]"));
    test::Gen gen(17);
    for (int t = 0; t < 30; ++t) {
      const Poly f = gen.poly(6);
      const Rational c = gen.rational(), x = gen.rational();
      CHECK(evaluate(taylor_shift(f, c), x) == evaluate(f, x + c));
    }
  }
}

TEST_SUITE("int kernels") {
  TEST_CASE("sign evaluation agrees with exact evaluation") {
    test::Gen gen(18);
    for (int t = 0; t < 200; ++t) {
      const Poly f = gen.nonzero_poly(7);
      const auto ip = detail::positive_primitive(f);
      const Rational x = gen.rational(20, 9);
      CHECK(detail::sign_at(ip, x) == evaluate(f, x).sign());
    }
  }

  TEST_CASE("exact quotient keeps the sign") {
    test::Gen gen(19);
    for (int t = 0; t < 100; ++t) {
      const Poly a = gen.nonzero_poly(4), b = gen.nonzero_poly(4);
      const auto quo = detail::exact_quotient(detail::positive_primitive(a * b), detail::positive_primitive(b));
      // a positive multiple of a: same sign as a at a generic point
      const Rational x = gen.rational(30, 7);
      if (evaluate(a, x).is_zero()) continue;
      CHECK(detail::sign_at(quo, x) == evaluate(a, x).sign());
    }
    CHECK_THROWS(detail::exact_quotient(detail::positive_primitive(p("[1, 0, 1]")),
                                        detail::positive_primitive(p("[0, 1]"))));
  }
}
