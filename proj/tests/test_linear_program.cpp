#include <doctest.h>

#include "support/lp_instances.hpp"
#include "support/random_states.hpp"
#include "support/vertex_enumeration.hpp"
#include "thermo/linear_program.hpp"

using namespace thermo;

namespace {

LinearProgram forced_variable() {
  LinearProgram lp(1);
  lp.objective = {1};
  lp.add_eq({1}, 5);
  return lp;
}

LinearProgram contradictory() {
  LinearProgram lp(2);
  lp.add_eq({1, 1}, 1);
  lp.add_le({1, 0}, -1);
  return lp;
}

}  // namespace

TEST_CASE("single forced variable") {
  const LinearProgram lp = forced_variable();
  const LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(*sol.optimum == 5);
  CHECK(*sol.point == Vector{5});
  CHECK(check_solution(lp, sol));
}

TEST_CASE("infeasible program carries a Farkas certificate") {
  const LinearProgram lp = contradictory();
  const LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Infeasible);
  REQUIRE(sol.certificate);
  const Vector& y = *sol.certificate;
  REQUIRE(y.size() == 2);
  // y^T A >= 0 columnwise and y^T b < 0, by hand.
  CHECK(y[1].sign() >= 0);
  CHECK((y[0] * 1 + y[1] * 1).sign() >= 0);
  CHECK((y[0] * 1 + y[1] * 0).sign() >= 0);
  CHECK((y[0] * 1 + y[1] * -1).sign() < 0);
  CHECK(check_solution(lp, sol));
}

TEST_CASE("unbounded program carries a ray") {
  LinearProgram lp(2);
  lp.objective = {-1, 0};
  lp.add_le({0, 1}, 1);
  const LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Unbounded);
  CHECK(*sol.ray == Vector{1, 0});
  CHECK(check_solution(lp, sol));
}

TEST_CASE("check_solution rejects any violation") {
  const LinearProgram lp = forced_variable();
  LpSolution sol = solve(lp);
  sol.point = Vector{Rational(5) + Rational(1, 1'000'000'000)};
  sol.optimum = (*sol.point)[0];
  CHECK_FALSE(check_solution(lp, sol));

  LpSolution wrong_value = solve(lp);
  wrong_value.optimum = 4;
  CHECK_FALSE(check_solution(lp, wrong_value));

  LpSolution bad_cert = solve(contradictory());
  (*bad_cert.certificate)[1] = -1;
  CHECK_FALSE(check_solution(contradictory(), bad_cert));

  LpSolution missing;
  missing.status = LpStatus::Optimal;
  CHECK_FALSE(check_solution(lp, missing));
}

TEST_CASE("malformed programs throw") {
  LinearProgram lp(2);
  lp.add_eq({1}, 1);
  CHECK_THROWS_AS(solve(lp), std::invalid_argument);
}

TEST_CASE("redundant and degenerate rows") {
  LinearProgram lp(3);
  lp.objective = {1, 2, 3};
  lp.add_eq({1, 1, 1}, 1);
  lp.add_eq({2, 2, 2}, 2);  // duplicate
  lp.add_eq({1, 0, -1}, 0);
  lp.add_le({0, 1, 0}, 0);
  const LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(*sol.optimum == 2);  // x = (1/2, 0, 1/2)
  CHECK(check_solution(lp, sol));
}

TEST_CASE("zero objective stops at a feasible point") {
  LinearProgram lp(2);
  lp.add_eq({1, 1}, 1);
  const LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(*sol.optimum == 0);
  CHECK(check_solution(lp, sol));
}

TEST_CASE("Bland's rule terminates on classic cycling instances") {
  for (const LinearProgram& lp : {testing::beale(), testing::chvatal()}) {
    const LpSolution sol = solve(lp);
    const auto oracle = testing::brute_force_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(oracle.status == LpStatus::Optimal);
    CHECK(*sol.optimum == *oracle.optimum);
    CHECK(check_solution(lp, sol));
  }
  CHECK(*solve(testing::beale()).optimum == Rational(-1, 20));
  CHECK(*solve(testing::chvatal()).optimum == -1);
}

TEST_CASE("property: solve agrees with vertex enumeration") {
  testing::Rng rng(2024);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const LinearProgram lp = testing::random_lp(rng);
    const LpSolution sol = solve(lp);
    const auto oracle = testing::brute_force_lp(lp);
    CAPTURE(trial);
    REQUIRE(sol.status == oracle.status);
    if (sol.status == LpStatus::Optimal) CHECK(*sol.optimum == *oracle.optimum);
    CHECK(check_solution(lp, sol));
    ++counts[static_cast<int>(sol.status)];
  }
  // The generator must exercise every outcome.
  CHECK(counts[0] > 20);
  CHECK(counts[1] > 20);
  CHECK(counts[2] > 20);
}
