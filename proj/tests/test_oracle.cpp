#include <doctest.h>

#include <algorithm>
#include <random>

#include "jetsolve/errors.hpp"
#include "jetsolve/oracle.hpp"
#include "jetsolve/reduction.hpp"
#include "support.hpp"

using namespace jetsolve;
using support::P;

TEST_SUITE("gcd oracle") {
  TEST_CASE("examples") {
    CHECK(gcd_univariate(P("x^2-3*x+2"), P("x^2-4*x+3"), "x") == P("x-1"));
    CHECK(gcd_univariate(P("x^2-1"), P("x^2-4"), "x") == Polynomial(1));
    CHECK(gcd_univariate(Polynomial(), P("2*x+4"), "x") == P("x+2"));
    CHECK(gcd_univariate(P("3*x^2-3"), Polynomial(), "x") == P("x^2-1"));
    CHECK(gcd_univariate(Polynomial(5), P("x"), "x") == Polynomial(1));
    CHECK_THROWS_AS(gcd_univariate(Polynomial(), Polynomial(), "x"), ShapeError);
    CHECK_THROWS_AS(gcd_univariate(P("x*y"), P("x"), "x"), ShapeError);
  }

  TEST_CASE("remainder") {
    CHECK(remainder_univariate(P("x^3"), P("x-1"), "x") == Polynomial(1));
    CHECK(remainder_univariate(P("x^2-1"), P("2*x+2"), "x").is_zero());
  }

  TEST_CASE("divides both inputs and recovers planted factors") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      auto integer = [&] { return static_cast<int>(rng() % 13) - 6; };
      std::vector<Scalar> shared, a, b;
      for (unsigned i = rng() % 3; i > 0; --i) shared.push_back(Scalar(integer()));
      for (unsigned i = rng() % 3; i > 0; --i) a.push_back(Scalar(2 * integer() + 1, 2));
      for (unsigned i = rng() % 3; i > 0; --i) b.push_back(Scalar(3 * integer() + 1, 3));
      std::vector<Scalar> fa = shared, fb = shared;
      fa.insert(fa.end(), a.begin(), a.end());
      fb.insert(fb.end(), b.begin(), b.end());
      const Polynomial f = support::from_roots(fa, "x", support::small_nonzero_rational(rng));
      const Polynomial g = support::from_roots(fb, "x", support::small_nonzero_rational(rng));
      const Polynomial d = gcd_univariate(f, g, "x");
      CHECK(remainder_univariate(f, d, "x").is_zero());
      CHECK(remainder_univariate(g, d, "x").is_zero());
      // Half-integer and third-integer roots never coincide, so the gcd is
      // exactly the shared part.
      CHECK(d == support::from_roots(shared, "x"));
    }
  }
}

TEST_SUITE("resultant oracle") {
  TEST_CASE("examples") {
    CHECK(sylvester_resultant(P("x^2+y^2-5"), P("x+y-3"), "y") == P("2*x^2-6*x+4"));
    CHECK(sylvester_resultant(P("x-1"), P("x-2"), "x") == Polynomial(1));
    CHECK(sylvester_resultant(P("x^2+1"), Polynomial(3), "x") == Polynomial(9));
    CHECK(sylvester_resultant(P("x^2+1"), Polynomial(), "x").is_zero());
    CHECK_THROWS_AS(sylvester_resultant(P("y"), P("y+1"), "x"), UndefinedResultantError);
  }

  TEST_CASE("product formula over planted roots") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Scalar> a, b;
      for (unsigned i = 1 + rng() % 3; i > 0; --i) a.push_back(support::small_rational(rng, 4, 2));
      for (unsigned i = 1 + rng() % 3; i > 0; --i) b.push_back(support::small_rational(rng, 4, 2));
      // With g's rows first the resultant of monic f, g is prod (b_j - a_i).
      Scalar expected = 1;
      for (const auto& ai : a)
        for (const auto& bj : b) expected *= bj - ai;
      const Polynomial r = sylvester_resultant(support::from_roots(a, "x"), support::from_roots(b, "x"), "x");
      CHECK(r == Polynomial(expected));
      const bool common = std::any_of(a.begin(), a.end(), [&](const Scalar& x) {
        return std::find(b.begin(), b.end(), x) != b.end();
      });
      CHECK(r.is_zero() == common);
    }
  }
}

TEST_SUITE("rational root search") {
  TEST_CASE("examples") {
    const std::vector<Polynomial> curves{P("x^2+y^2-5"), P("x*y-2"), P("x+y-3")};
    const auto roots = rational_root_search(curves, 5);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Assignment{{"x", 1}, {"y", 2}});
    CHECK(roots[1] == Assignment{{"x", 2}, {"y", 1}});
    const std::vector<Polynomial> irrational{P("x^2-2")};
    CHECK(rational_root_search(irrational, 10).empty());
    const std::vector<Polynomial> half{P("2*x-1")};
    CHECK(rational_root_search(half, 1).empty());
    CHECK(rational_root_search(half, 2).size() == 1);
    const std::vector<Polynomial> line{P("x-1")};
    const std::vector<std::string> xy{"x", "y"};
    CHECK(rational_root_search(line, xy, 1).size() == 3);
  }

  TEST_CASE("agrees with the solver on planted systems") {
    std::mt19937 rng(33);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const Assignment planted{{"x", support::small_rational(rng, 2, 1)}, {"y", support::small_rational(rng, 2, 1)}};
      std::vector<Polynomial> system;
      for (int k = 0; k < 3; ++k) {
        const Polynomial f = support::random_polynomial(rng, {"x", "y"}, 2, 3);
        system.push_back(f - Polynomial(f.evaluate(planted)));
      }
      const std::vector<std::string> xy{"x", "y"};
      const ReductionOutcome out = solve_overdetermined(system, xy);
      if (out.status != Status::solved) continue;
      bool small = true;
      for (const auto& pt : out.solutions)
        for (const auto& [name, value] : pt)
          if (abs(value.get_num()) > 3 || value.get_den() > 3) small = false;
      if (!small) continue;
      // Every solver point is found by the search; the search may find more
      // only when the solver reported residual, which it did not.
      const auto found = rational_root_search(system, xy, 3);
      for (const auto& pt : out.solutions) CHECK(std::find(found.begin(), found.end(), pt) != found.end());
      for (const auto& pt : found) CHECK(std::find(out.solutions.begin(), out.solutions.end(), pt) != out.solutions.end());
      ++compared;
    }
    CHECK(compared > 10);
  }

  TEST_CASE("univariate pairs agree with the common-root oracle") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial f = support::random_univariate(rng, "x", 1 + static_cast<int>(rng() % 4));
      const Polynomial g = support::random_univariate(rng, "x", 1 + static_cast<int>(rng() % 4));
      const std::vector<Polynomial> pair{f, g};
      const std::vector<std::string> x{"x"};
      const ReductionOutcome out = solve_overdetermined(pair, x);
      const auto expected = support::common_roots(f, g, "x");
      if (out.status == Status::inconsistent) {
        CHECK(expected.empty());
      } else if (out.status == Status::solved) {
        std::vector<Scalar> got;
        for (const auto& pt : out.solutions) got.push_back(pt.at("x"));
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
      }
    }
  }
}
