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

#ifndef QCSLP_LP_SOLVER_HPP_
#define QCSLP_LP_SOLVER_HPP_

#include <Eigen/Core>

#include "qcslp/lp_model.hpp"

namespace qcslp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolveOptions {
  // Absolute tolerance on constraint residuals of a returned solution.
  double feas_tol = 1e-9;
  // Tableau entries at or below this magnitude are treated as zero.
  double pivot_tol = 1e-10;
  // 0 means the default 50 * (num_vars + num_rows).
  int max_iters = 0;
  // Bland's rule guarantees termination; Dantzig is the faster path.
  enum class PivotRule { kBland, kDantzig } pivot_rule = PivotRule::kBland;
};

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  Eigen::VectorXd z;  // valid when status == kOptimal
  double objective_value = 0.0;
  int iterations = 0;
};

// Two-phase primal simplex on the slack-augmented standard form of
//   min objective . z  s.t.  G z <= h,  z >= 0.
// Phase 1 detects infeasibility; an entering column with no positive ratio
// row means unbounded. Every optimal return is verified to satisfy
// G z <= h + feas_tol and z >= -feas_tol (throws std::logic_error otherwise).
// Requires p.nonneg; signed models are pre-split by lp_model.
LpSolution solve_lp(const LpProblem& p, const LpSolveOptions& opts = {});

// Independent brute-force check used by the tests: enumerates every square
// subsystem of active constraints (rows of G, the nonnegativity facets, and
// one large bounding box), keeps the feasible vertices, and returns the best.
// Unboundedness is detected by the optimum escaping with the box radius.
// Assumes the feasible set, if any, meets ||z||_1 <= 1e6. Requires
// p.num_vars + rows <= 12 (throws std::invalid_argument beyond that).
LpSolution enumerate_vertices_oracle(const LpProblem& p);

}  // namespace qcslp

#endif  // QCSLP_LP_SOLVER_HPP_
