#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antisym/lp.hpp"
#include "antisym/rational.hpp"

using namespace antisym;
using namespace antisym::exact;

namespace {

RationalLP make_lp(ObjectiveSense sense, std::vector<Rational> c) {
  RationalLP lp;
  lp.sense = sense;
  lp.objective = std::move(c);
  return lp;
}

}  // namespace

TEST_CASE("rational basics: canonical form and exact arithmetic") {
  Rational a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  CHECK(a.str() == "1/2");

  Rational b(-3, -6);  // normalises to positive denominator
  CHECK(b == Rational(1, 2));

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1) / Rational(-4, 6) == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);

  CHECK(Rational::parse("25/12") == Rational(25, 12));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);

  CHECK(pow(Rational(3, 4), 3) == Rational(27, 64));
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 7) == 0);
  const int parts[] = {2, 1, 1};
  CHECK(multinomial(parts) == 12);
}

TEST_CASE("rational round-trip property: (a+b)-b == a") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("nearest_rational recovers simple fractions") {
  double err = 1;
  CHECK(nearest_rational(0.5, 64, &err) == Rational(1, 2));
  CHECK(err < 1e-15);
  CHECK(nearest_rational(-1.0 + 3e-11, 64, &err) == Rational(-1));
  CHECK(nearest_rational(19.0 / 24.0, 64, &err) == Rational(19, 24));
}

TEST_CASE("solve_lp: box maximum") {
  auto lp = make_lp(ObjectiveSense::Maximize, {1, 1});
  lp.add_constraint({1, 0}, ConstraintSense::LessEq, 1);
  lp.add_constraint({0, 1}, ConstraintSense::LessEq, 1);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(2));
  CHECK(sol.primal == std::vector<Rational>{1, 1});
  // strong duality witnessed exactly
  Rational dual_value(0);
  for (int i = 0; i < lp.num_rows(); ++i) dual_value += lp.rhs[i] * sol.dual[i];
  CHECK(dual_value == sol.value);
}

TEST_CASE("solve_lp: two-variable mixture program") {
  // max p2/2 - p1  s.t.  p1 + p2 = 1, -2 p1 + p2 >= 0, p1 + p2 >= 0, p >= 0
  auto lp = make_lp(ObjectiveSense::Maximize, {-1, Rational(1, 2)});
  lp.add_constraint({1, 1}, ConstraintSense::Equal, 1);
  lp.add_constraint({-2, 1}, ConstraintSense::GreaterEq, 0);
  lp.add_constraint({1, 1}, ConstraintSense::GreaterEq, 0);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(1, 2));
  CHECK(sol.primal == std::vector<Rational>{0, 1});
}

TEST_CASE("solve_lp: infeasible and unbounded statuses") {
  auto inf = make_lp(ObjectiveSense::Maximize, {1});
  inf.add_constraint({1}, ConstraintSense::GreaterEq, 1);
  inf.add_constraint({1}, ConstraintSense::LessEq, 0);
  CHECK(solve_lp(inf).status == LPStatus::Infeasible);

  auto unb = make_lp(ObjectiveSense::Maximize, {1});
  unb.add_constraint({-1}, ConstraintSense::LessEq, 0);
  CHECK(solve_lp(unb).status == LPStatus::Unbounded);
}

TEST_CASE("solve_lp: minimization with free variable") {
  // min z s.t. z >= 3, z free
  auto lp = make_lp(ObjectiveSense::Minimize, {1});
  lp.var_bounds = {VarBound::Free};
  lp.add_constraint({1}, ConstraintSense::GreaterEq, 3);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(3));
  CHECK(sol.primal[0] == Rational(3));
  CHECK(sol.dual[0] == Rational(1));  // min sense: >= rows carry nonnegative multipliers
}

TEST_CASE("solve_lp: Bland's rule terminates on a classic cycling instance") {
  // Beale's example; Dantzig's rule cycles on it.
  auto lp = make_lp(ObjectiveSense::Maximize,
                    {Rational(3, 4), -150, Rational(1, 50), -6});
  lp.add_constraint({Rational(1, 4), -60, Rational(-1, 25), 9}, ConstraintSense::LessEq, 0);
  lp.add_constraint({Rational(1, 2), -90, Rational(-1, 50), 3}, ConstraintSense::LessEq, 0);
  lp.add_constraint({0, 0, 1, 0}, ConstraintSense::LessEq, 1);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(1, 20));
}

TEST_CASE("solve_lp: malformed dimensions rejected") {
  auto lp = make_lp(ObjectiveSense::Maximize, {1, 2});
  lp.add_constraint({1}, ConstraintSense::LessEq, 1);  // too narrow
  CHECK_THROWS_AS(solve_lp(lp), InputError);
}

TEST_CASE("verify_feasible: exact boundary behaviour") {
  auto lp = make_lp(ObjectiveSense::Maximize, {1});
  lp.add_constraint({1}, ConstraintSense::LessEq, 1);
  const Rational on_boundary[] = {Rational(1)};
  const Rational outside[] = {Rational(2)};
  const Rational negative[] = {Rational(-1, 7)};
  CHECK(verify_feasible(lp, on_boundary));
  CHECK_FALSE(verify_feasible(lp, outside));
  CHECK_FALSE(verify_feasible(lp, negative));  // violates x >= 0

  const Rational short_point[] = {Rational(1)};
  auto wide = make_lp(ObjectiveSense::Maximize, {1, 1});
  wide.add_constraint({1, 1}, ConstraintSense::LessEq, 2);
  CHECK_THROWS_AS(verify_feasible(wide, short_point), InputError);
}

TEST_CASE("random small LPs: exact strong duality and complementary slackness") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> dim_n(1, 6), dim_m(1, 8), coef(-3, 3), rhs(0, 6);
  int optimal_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = dim_n(rng), m = dim_m(rng);
    RationalLP lp;
    lp.sense = ObjectiveSense::Maximize;
    for (int j = 0; j < n; ++j) lp.objective.push_back(coef(rng));
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(coef(rng));
      lp.add_constraint(std::move(row), ConstraintSense::LessEq, rhs(rng));
    }
    // box row keeps every instance bounded; x = 0 keeps every instance feasible
    lp.add_constraint(std::vector<Rational>(n, Rational(1)), ConstraintSense::LessEq, 10);

    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    ++optimal_count;
    REQUIRE(verify_feasible(lp, sol.primal));

    // b.y == c.x exactly
    Rational dual_value(0);
    for (int i = 0; i < lp.num_rows(); ++i) dual_value += lp.rhs[i] * sol.dual[i];
    REQUIRE(dual_value == sol.value);

    // dual feasibility: y >= 0 on <= rows, A^T y >= c
    for (const auto& y : sol.dual) REQUIRE(y.sign() >= 0);
    for (int j = 0; j < n; ++j) {
      Rational aty(0);
      for (int i = 0; i < lp.num_rows(); ++i) aty += lp.rows[i][j] * sol.dual[i];
      REQUIRE(aty >= lp.objective[j]);
      // complementary slackness: x_j (A^T y - c)_j == 0
      REQUIRE((sol.primal[j] * (aty - lp.objective[j])).is_zero());
    }
    for (int i = 0; i < lp.num_rows(); ++i) {
      Rational ax(0);
      for (int j = 0; j < n; ++j) ax += lp.rows[i][j] * sol.primal[j];
      REQUIRE((sol.dual[i] * (lp.rhs[i] - ax)).is_zero());
    }
  }
  CHECK(optimal_count == 200);
}
