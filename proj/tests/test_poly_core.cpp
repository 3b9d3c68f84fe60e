#include <doctest.h>

#include <random>

#include "jetsolve/determinant.hpp"
#include "jetsolve/errors.hpp"
#include "jetsolve/polynomial.hpp"
#include "support.hpp"

using namespace jetsolve;
using support::P;

TEST_SUITE("scalar") {
  TEST_CASE("parse and print") {
    CHECK(to_string(parse_scalar("6/4")) == "3/2");
    CHECK(to_string(parse_scalar("-3/4")) == "-3/4");
    CHECK(to_string(parse_scalar("4/2")) == "2");
    CHECK(to_string(parse_scalar("0/7")) == "0");
    CHECK(to_string(parse_scalar("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  }

  TEST_CASE("lowest terms and positive denominator") {
    const Scalar x = parse_scalar("-10/4");
    CHECK(x.get_den() == 2);
    CHECK(x.get_num() == -5);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("add") {
    CHECK((P("x+1") + P("-x-1")).is_zero());
    CHECK(P("x^2-3*x+2") + P("x^2-4*x+3") == P("2*x^2-7*x+5"));
    CHECK(P("x*y-3") + Polynomial() == P("x*y-3"));
  }

  TEST_CASE("mul") {
    CHECK(P("x-1") * P("x-2") == P("x^2-3*x+2"));
    CHECK(P("x^2*y-1/2") * Polynomial(1) == P("x^2*y-1/2"));
    CHECK((P("x^2*y-1/2") * Polynomial()).is_zero());
  }

  TEST_CASE("evaluate") {
    CHECK(P("x^2-3*x+2").evaluate({{"x", 1}}) == 0);
    CHECK(P("x^2-3*x+2").evaluate({{"x", 0}}) == 2);
    CHECK(Polynomial().evaluate({}) == 0);
    CHECK(P("x*y").evaluate({{"x", Scalar(1, 2)}, {"y", Scalar(2, 3)}}) == Scalar(1, 3));
    try {
      (void)P("x*y+1").evaluate({{"x", 2}});
      FAIL("expected MissingAssignmentError");
    } catch (const MissingAssignmentError& e) {
      CHECK(e.variable() == "y");
    }
  }

  TEST_CASE("partial derivative") {
    CHECK(P("x^2*y").partial_derivative("x") == P("2*x*y"));
    CHECK(P("x^2*y").partial_derivative("z").is_zero());
    CHECK(P("Q1*Q2 - Q1^2").partial_derivative("Q1") == P("Q2 - 2*Q1"));
    CHECK(P("S1[1]*S1[0]^3").partial_derivative("S1[0]") == P("3*S1[1]*S1[0]^2"));
  }

  TEST_CASE("degree_in") {
    CHECK(P("x^2*y + y^3").degree_in("x") == 2);
    CHECK(P("y^3").degree_in("x") == 0);
    CHECK(Polynomial().degree_in("x") == Polynomial::kDegreeOfZero);
    CHECK(P("x^2*y + y^3").total_degree() == 3);
  }

  TEST_CASE("coefficients_in") {
    auto c = P("x^2+y^2-5").coefficients_in("y");
    REQUIRE(c.size() == 3);
    CHECK(c[0] == P("x^2-5"));
    CHECK(c[1].is_zero());
    CHECK(c[2] == Polynomial(1));
    c = P("x*y-2").coefficients_in("y");
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Polynomial(-2));
    CHECK(c[1] == P("x"));
    c = Polynomial(7).coefficients_in("y");
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Polynomial(7));
    CHECK(Polynomial().coefficients_in("y").empty());
  }

  TEST_CASE("printing") {
    CHECK(P("5 + 2*x^2 - 7*x").to_string() == "2*x^2 - 7*x + 5");
    CHECK(P("1 - x").to_string() == "-x + 1");
    CHECK(P("3/4*x").to_string() == "3/4*x");
    CHECK(Polynomial().to_string() == "0");
    CHECK(P("-1").to_string() == "-1");
    CHECK(P("S1[10] + S1[2]").to_string() == "S1[2] + S1[10]");
  }

  TEST_CASE("parser") {
    CHECK(P("(x+1)^2") == P("x^2+2*x+1"));
    CHECK(P("-(x-1)") == P("1-x"));
    CHECK(P("--x") == P("x"));
    CHECK(P("  2 *  x ") == P("2*x"));
    CHECK(P("S1[ 1 , 0 ]").variables() == std::vector<std::string>{"S1[1,0]"});
    CHECK(P("-3/4") == Polynomial(Scalar(-3, 4)));
    CHECK_THROWS_AS(P("2x"), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("x^y"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("S1[1,]"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
  }

  TEST_CASE("canonical form ignores construction history") {
    const Polynomial a = P("y*x + x");
    const Polynomial b = P("x*(y+1) + z - z");
    CHECK(a == b);
    CHECK(a.variables() == b.variables());
    CHECK(a.to_string() == b.to_string());
    CHECK((P("x+z") - P("z")).variables() == std::vector<std::string>{"x"});
  }

  TEST_CASE("substitute and rename") {
    CHECK(P("x^2 + y").substitute({{"x", P("y+1")}}) == P("y^2 + 3*y + 1"));
    CHECK(P("x*y").rename({{"x", "z"}}) == P("z*y"));
    CHECK(P("x*y + x").partial_evaluate({{"x", 2}}) == P("2*y + 2"));
  }

  TEST_CASE("ring laws on random inputs") {
    std::mt19937 rng(20240611);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial f = support::random_polynomial(rng, vars, 3, 4);
      const Polynomial g = support::random_polynomial(rng, vars, 3, 4);
      const Polynomial h = support::random_polynomial(rng, vars, 2, 3);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f + g == g + f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * g == g * f);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(P(f.to_string()) == f);
    }
  }

  TEST_CASE("coefficients reconstruct the polynomial") {
    std::mt19937 rng(7);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial f = support::random_polynomial(rng, vars, 4, 5);
      for (const auto& v : vars) {
        Polynomial rebuilt;
        const auto c = f.coefficients_in(v);
        for (std::size_t i = 0; i < c.size(); ++i) {
          CHECK_FALSE(c[i].involves(v));
          rebuilt += c[i] * Polynomial::variable(v, static_cast<unsigned>(i));
        }
        CHECK(rebuilt == f);
      }
    }
  }

  TEST_CASE("derivative linearity and product rule") {
    std::mt19937 rng(11);
    const std::vector<std::string> vars{"x", "y"};
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial f = support::random_polynomial(rng, vars, 3, 4);
      const Polynomial g = support::random_polynomial(rng, vars, 3, 4);
      const Scalar a = support::small_rational(rng);
      CHECK((a * f + g).partial_derivative("x") == a * f.partial_derivative("x") + g.partial_derivative("x"));
      CHECK((f * g).partial_derivative("y") == f.partial_derivative("y") * g + f * g.partial_derivative("y"));
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(13);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial f = support::random_polynomial(rng, vars, 3, 4);
      const Polynomial g = support::random_polynomial(rng, vars, 3, 4);
      const Assignment pt{{"x", support::small_rational(rng)},
                          {"y", support::small_rational(rng)},
                          {"z", support::small_rational(rng)}};
      CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
      CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    }
  }
}

TEST_SUITE("determinant") {
  TEST_CASE("small matrices") {
    CHECK(determinant({}) == Polynomial(1));
    CHECK(determinant({{P("x")}}) == P("x"));
    CHECK(determinant({{P("1"), P("x-3")}, {P("x"), P("-2")}}) == P("-x^2+3*x-2"));
    CHECK(determinant({{1, 2}, {2, 4}}).is_zero());
    CHECK_THROWS_AS(determinant({{1, 2}}), ShapeError);
  }

  TEST_CASE("agrees with the product of a triangular diagonal") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 6;
      PolyMatrix m(n, std::vector<Polynomial>(n));
      Polynomial expected(1);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
          m[r][c] = support::random_polynomial(rng, {"x", "y"}, 2, 2);
          if (r == c) expected *= m[r][c];
        }
      CHECK(determinant(m) == expected);
      std::swap(m[0], m[n - 1]);
      if (n > 1) CHECK(determinant(m) == -expected);
    }
  }
}
