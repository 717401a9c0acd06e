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

#ifndef QCSLP_LP_MODEL_HPP_
#define QCSLP_LP_MODEL_HPP_

#include <Eigen/Core>
#include <string>
#include <utility>

namespace qcslp {

// Dense inequality-form LP:  minimize objective . z  s.t.  G z <= h,
// and z >= 0 when nonneg is set.
struct LpProblem {
  int num_vars = 0;
  Eigen::VectorXd objective;
  Eigen::MatrixXd G;  // p x num_vars
  Eigen::VectorXd h;  // p
  bool nonneg = false;
};

// Constraint polytope for recovery from quantized data with per-entry error
// bounds delta_A and delta_y. For x >= 0 the rows encode
//   |(QA x)_i - Qy_i| <= delta_A * ||x||_1 + delta_y,
// i.e. there is some matrix perturbation within delta_A and some measurement
// perturbation within delta_y that makes x consistent with the data:
//   C = [ QA - delta_A * 1 ; -QA - delta_A * 1 ],
//   c = [ Qy + delta_y * 1 ; -Qy + delta_y * 1 ].
// Throws std::invalid_argument on shape mismatch or negative bounds.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_lp_constraints(
    const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy, double delta_A,
    double delta_y);

// min 1'x  s.t.  C x <= c,  x >= 0. On the nonnegative orthant the all-ones
// objective equals ||x||_1 exactly.
LpProblem build_qcs_lp(const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy,
                       double delta_A, double delta_y);

// min ||x||_1  s.t.  ||QA x - Qy||_inf <= epsilon, with signed x encoded by
// the split x = xp - xm, xp, xm >= 0 (2n variables, 2m rows).
LpProblem build_bpdn_inf_lp(const Eigen::MatrixXd& QA,
                            const Eigen::VectorXd& Qy, double epsilon);

// Residual bounds used when running BPDN against quantized data.
// Setting 1 ignores the matrix error; Setting 2 moves it onto the
// measurements using ||x||_1 <= k r. The l_2 variants scale by sqrt(m).
double epsilon_setting1(double delta_y);
double epsilon_setting2(double delta_A, int k, double r, double delta_y);
double epsilon_l2(double eps_inf, int m);

// Plain-text dump for cross-checking against external solvers:
//   # qcslp lp dump v1
//   vars <n>
//   nonneg <0|1>
//   minimize
//   <c_1 ... c_n>
//   subject_to
//   <g_i1 ... g_in> <= <h_i>     (one line per row)
std::string to_lp_text(const LpProblem& p);

}  // namespace qcslp

#endif  // QCSLP_LP_MODEL_HPP_
