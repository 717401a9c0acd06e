// Copyright 2026 The qcslp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qcslp/lp_solver.hpp"
#include "qcslp/rng.hpp"
#include "test_oracles.hpp"

using namespace qcslp;

namespace {

LpProblem make_lp(const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
                  const Eigen::VectorXd& c) {
  LpProblem p;
  p.num_vars = static_cast<int>(c.size());
  p.objective = c;
  p.G = G;
  p.h = h;
  p.nonneg = true;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("lp_solver");

TEST_CASE("binding lower bound") {
  Eigen::MatrixXd G(1, 2);
  G << -1.0, 0.0;
  Eigen::VectorXd h(1);
  h << -1.0;
  Eigen::VectorXd c(2);
  c << 1.0, 1.0;
  const LpProblem p = make_lp(G, h, c);

  const LpSolution sol = solve_lp(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.z(0) == doctest::Approx(1.0));
  CHECK(sol.z(1) == doctest::Approx(0.0));
  CHECK(sol.objective_value == doctest::Approx(1.0));

  const LpSolution oracle = enumerate_vertices_oracle(p);
  REQUIRE(oracle.status == LpStatus::kOptimal);
  CHECK(oracle.objective_value == doctest::Approx(1.0));
}

TEST_CASE("infeasible system") {
  Eigen::MatrixXd G(1, 1);
  G << 1.0;
  Eigen::VectorXd h(1);
  h << -1.0;
  Eigen::VectorXd c(1);
  c << 1.0;
  const LpProblem p = make_lp(G, h, c);
  CHECK(solve_lp(p).status == LpStatus::kInfeasible);
  CHECK(enumerate_vertices_oracle(p).status == LpStatus::kInfeasible);
}

TEST_CASE("unbounded direction") {
  Eigen::MatrixXd G(1, 1);
  G << 0.0;
  Eigen::VectorXd h(1);
  h << 1.0;
  Eigen::VectorXd c(1);
  c << -1.0;
  const LpProblem p = make_lp(G, h, c);
  CHECK(solve_lp(p).status == LpStatus::kUnbounded);
  CHECK(enumerate_vertices_oracle(p).status == LpStatus::kUnbounded);
}

TEST_CASE("degenerate vertex from a duplicated constraint") {
  Eigen::MatrixXd G(3, 2);
  G << -1.0, -1.0,  //
      -1.0, -1.0,   // duplicate row
      1.0, 0.0;
  Eigen::VectorXd h(3);
  h << -2.0, -2.0, 5.0;
  Eigen::VectorXd c(2);
  c << 3.0, 1.0;
  const LpProblem p = make_lp(G, h, c);

  const LpSolution sol = solve_lp(p);
  const LpSolution oracle = enumerate_vertices_oracle(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  REQUIRE(oracle.status == LpStatus::kOptimal);
  CHECK(sol.objective_value ==
        doctest::Approx(oracle.objective_value).epsilon(1e-8));
  CHECK(sol.objective_value == doctest::Approx(2.0));  // all weight on x2
}

TEST_CASE("iteration limit is reported") {
  Eigen::MatrixXd G(2, 2);
  G << -1.0, 0.0, 0.0, -1.0;
  Eigen::VectorXd h(2);
  h << -1.0, -1.0;
  Eigen::VectorXd c(2);
  c << 1.0, 1.0;
  LpSolveOptions opts;
  opts.max_iters = 1;
  CHECK(solve_lp(make_lp(G, h, c), opts).status == LpStatus::kIterationLimit);
}

TEST_CASE("oracle rejects oversized problems") {
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(10, 5);
  Eigen::VectorXd h = Eigen::VectorXd::Ones(10);
  Eigen::VectorXd c = Eigen::VectorXd::Ones(5);
  CHECK_THROWS_AS(enumerate_vertices_oracle(make_lp(G, h, c)),
                  std::invalid_argument);
}

TEST_CASE("solver input validation") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = Eigen::VectorXd::Ones(2);
  p.G = Eigen::MatrixXd::Zero(1, 2);
  p.h = Eigen::VectorXd::Zero(1);
  p.nonneg = false;  // signed models must be split first
  CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
  p.nonneg = true;
  p.objective = Eigen::VectorXd::Ones(3);
  CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
}

TEST_CASE("matches the vertex oracle on random small LPs") {
  Rng rng(777);
  int optimal = 0;
  int infeasible = 0;
  int unbounded = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const LpProblem p = test::random_small_lp(rng, 5, 5);
    const LpSolution fast = solve_lp(p);
    const LpSolution slow = enumerate_vertices_oracle(p);
    REQUIRE(fast.status == slow.status);
    if (fast.status == LpStatus::kOptimal) {
      ++optimal;
      CHECK(std::abs(fast.objective_value - slow.objective_value) <=
            1e-8 * (1.0 + std::abs(slow.objective_value)));
      // Returned point is feasible: checked again here on top of the
      // solver's own postcondition.
      CHECK((p.G * fast.z - p.h).maxCoeff() <= 1e-9);
      CHECK(fast.z.minCoeff() >= -1e-9);
    } else if (fast.status == LpStatus::kInfeasible) {
      ++infeasible;
    } else if (fast.status == LpStatus::kUnbounded) {
      ++unbounded;
    }
  }
  // The corpus has to exercise all three outcomes to mean anything.
  CHECK(optimal > 50);
  CHECK(infeasible > 5);
  CHECK(unbounded > 5);
}

TEST_CASE("dantzig rule reaches the same optimum") {
  Rng rng(4242);
  LpSolveOptions dantzig;
  dantzig.pivot_rule = LpSolveOptions::PivotRule::kDantzig;
  for (int rep = 0; rep < 100; ++rep) {
    const LpProblem p = test::random_small_lp(rng, 5, 5);
    const LpSolution bland = solve_lp(p);
    const LpSolution fast = solve_lp(p, dantzig);
    REQUIRE(bland.status == fast.status);
    if (bland.status == LpStatus::kOptimal) {
      CHECK(std::abs(bland.objective_value - fast.objective_value) <=
            1e-8 * (1.0 + std::abs(bland.objective_value)));
    }
  }
}

TEST_CASE("no corpus LP hits the iteration limit under bland") {
  Rng rng(31337);
  for (int rep = 0; rep < 300; ++rep) {
    const LpProblem p = test::random_small_lp(rng, 6, 6);
    CHECK(solve_lp(p).status != LpStatus::kIterationLimit);
  }
}

TEST_SUITE_END();
