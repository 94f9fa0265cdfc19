#include "sureloss/errors.hpp"
#include "sureloss/linear_system.hpp"

#include <doctest.h>

using namespace sureloss;

TEST_CASE("unique solution of a square system") {
  // 3x + 5y... the Forest stake system with alpha = -47/21 moved right.
  Matrix a{{Rational(-3), Rational(5)}, {Rational(4), Rational(-16)}};
  std::vector<Rational> b{Rational(-47, 21) - Rational(5), Rational(-47, 21) + Rational(11)};
  const auto sol = solve_linear_system(a, b);
  REQUIRE(sol);
  CHECK(sol->unique());
  CHECK(sol->particular == std::vector<Rational>{Rational(18, 7), Rational(2, 21)});
}

TEST_CASE("rank-deficient consistent system exposes its null space") {
  Matrix a{{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}};
  const auto sol = solve_linear_system(a, {Rational(-1, 2), Rational(1, 2)});
  REQUIRE(sol);
  REQUIRE(sol->nullspace.size() == 1);
  const auto& d = sol->nullspace.front();
  CHECK(a[0][0] * d[0] + a[0][1] * d[1] == Rational(0));
  CHECK(a[0][0] * sol->particular[0] + a[0][1] * sol->particular[1] == Rational(-1, 2));
}

TEST_CASE("inconsistent system") {
  Matrix a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  CHECK_FALSE(solve_linear_system(a, {Rational(1), Rational(3)}));
}

TEST_CASE("pivoting handles leading zeros and empty systems") {
  Matrix a{{Rational(0), Rational(2)}, {Rational(3), Rational(0)}};
  const auto sol = solve_linear_system(a, {Rational(4), Rational(9)});
  REQUIRE(sol);
  CHECK(sol->particular == std::vector<Rational>{Rational(3), Rational(2)});
  const auto empty = solve_linear_system({}, {});
  REQUIRE(empty);
  CHECK(empty->particular.empty());
  CHECK_THROWS_AS(solve_linear_system({{Rational(1)}}, {}), DomainError);
}
