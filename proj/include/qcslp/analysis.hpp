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

#ifndef QCSLP_ANALYSIS_HPP_
#define QCSLP_ANALYSIS_HPP_

#include <Eigen/Core>
#include <optional>

#include "qcslp/problem.hpp"

namespace qcslp {

// Coherence summary of a quantized sensing matrix together with the
// hypotheses under which the l1 recovery error of the consistent LP admits a
// finite radius T.
struct CoherenceReport {
  double mu = 0.0;   // max |QA_j . QA_h| over j != h, unnormalized columns
  double rho = 0.0;  // max column l2 norm (or a caller-supplied bound)
  bool hypothesis_gap_ok = false;  // 2 (delta_A + rho)^2 < 2 - mu - rho^2
  // Largest k for which the bound stays finite at these (mu, rho, delta_A);
  // LONG_MAX when every k qualifies, nullopt when none does.
  std::optional<long> k_max_for_T;
  std::optional<double> T;  // error radius; finite and > 0 when delta_y > 0
};

// Maximum absolute inner product between distinct columns, columns taken as
// they are (no normalization). Throws std::invalid_argument when n < 2.
double mutual_coherence(const Eigen::MatrixXd& QA);

double max_column_norm(const Eigen::MatrixXd& QA);

// Radius T of the guarantee ||x_hat - x_true||_1 < T, solved from the
// sparsity condition
//   k <= (2 - rho^2 + mu) / (2 (mu + delta_A^2 + 2 delta_A rho
//        + (rho sqrt(m) + delta_A m) 2 delta_y / T)):
//   T = 2 delta_y (rho sqrt(m) + delta_A m)
//       / ((2 - rho^2 + mu) / (2k) - (mu + delta_A^2 + 2 delta_A rho)).
// Returns a value only when 2 (delta_A + rho)^2 < 2 - mu - rho^2 and the
// denominator is strictly positive; delta_y = 0 yields T = 0 (exact limit).
std::optional<double> robustness_bound(double mu, double rho, double delta_A,
                                       double delta_y, int m, int k);

CoherenceReport analyze_instance(const ProblemInstance& p,
                                 std::optional<double> rho_override = {});

// Per-recovery quality measures. An entry counts as nonzero when its
// magnitude exceeds zero_tol; x_true is exactly sparse, so its support is
// read off directly.
struct MetricsRecord {
  double rel_l2_sq = 0.0;  // ||x_hat - x||_2^2 / ||x||_2^2
  double rel_l1 = 0.0;     // ||x_hat - x||_1 / ||x||_1
  double sparsity = 0.0;   // nonzeros of x_hat / n
  double fpr = 0.0;        // false positives / (n - k); 0 when k == n
  double fnr = 0.0;        // false negatives / k
  double zero_tol = 0.0;
};

// Throws std::invalid_argument on length mismatch, nonpositive zero_tol, or
// an all-zero x_true (the relative errors are undefined there).
MetricsRecord compute_metrics(const Eigen::VectorXd& x_hat,
                              const Eigen::VectorXd& x_true, int k,
                              double zero_tol);

}  // namespace qcslp

#endif  // QCSLP_ANALYSIS_HPP_
