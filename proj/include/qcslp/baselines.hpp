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

#ifndef QCSLP_BASELINES_HPP_
#define QCSLP_BASELINES_HPP_

#include <Eigen/Core>
#include <string>

#include "qcslp/lp_solver.hpp"
#include "qcslp/problem.hpp"

namespace qcslp {

enum class Method { kQcsLp, kBpdnInf, kBpdn2, kNiht };

enum class SolveStatus {
  kOk,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNonConverged,
};

const char* method_name(Method m);
const char* status_name(SolveStatus s);

struct RecoveryResult {
  Eigen::VectorXd x_hat;
  Method method = Method::kQcsLp;
  SolveStatus status = SolveStatus::kOk;
  int iterations = 0;
  double wall_time_ms = 0.0;
};

// Recovery through the quantization-consistent polytope (build_qcs_lp +
// solve_lp). x_true is feasible for any valid instance, so the LP cannot be
// infeasible; failures still propagate as flagged results with x_hat = 0.
RecoveryResult solve_qcs_lp(const ProblemInstance& p,
                            const LpSolveOptions& opts = {});

// min ||x||_1  s.t.  ||QA x - Qy||_inf <= epsilon, signed x via the LP split.
RecoveryResult solve_bpdn_inf(const Eigen::MatrixXd& QA,
                              const Eigen::VectorXd& Qy, double epsilon,
                              const LpSolveOptions& opts = {});

struct Bpdn2Options {
  double tol = 1e-7;
  int max_iters = 20000;
  // Primal/dual step balance: tau = step_scale / L, sigma = 1 / (step_scale
  // * L) with L = ||QA||_2, so tau * sigma * L^2 = 1.
  double step_scale = 1.0;
};

// min ||x||_1  s.t.  ||QA x - Qy||_2 <= epsilon by primal-dual operator
// splitting (Chambolle & Pock 2011): a soft-thresholding step on the l1 term
// alternates with a projection of the residual variable onto the epsilon
// ball inside the dual update. Converged results satisfy
// ||QA x_hat - Qy||_2 <= epsilon + 5 * tol; exhaustion returns the current
// iterate flagged kNonConverged.
RecoveryResult solve_bpdn_2(const Eigen::MatrixXd& QA,
                            const Eigen::VectorXd& Qy, double epsilon,
                            const Bpdn2Options& opts = {});

struct NihtOptions {
  double tol = 1e-6;
  int max_iters = 1000;
};

// Normalized iterative hard thresholding (Blumensath & Davies 2010) run
// directly on the quantized data. The step is the normalized gradient step
// on the current support with the standard halving backtrack whenever the
// proposed support changes; x_0 = 0.
RecoveryResult niht(const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy,
                    int k, const NihtOptions& opts = {});

// Keeps the k largest-magnitude entries (ties to the lowest index), zeroing
// the rest. Idempotent; at most k nonzeros.
Eigen::VectorXd hard_threshold(const Eigen::VectorXd& v, int k);

}  // namespace qcslp

#endif  // QCSLP_BASELINES_HPP_
