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

#include "qcslp/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcslp {

double mutual_coherence(const Eigen::MatrixXd& QA) {
  const Eigen::Index n = QA.cols();
  if (n < 2) {
    throw std::invalid_argument(
        "analysis: mutual coherence needs at least two columns");
  }
  double mu = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index h = j + 1; h < n; ++h) {
      mu = std::max(mu, std::abs(QA.col(j).dot(QA.col(h))));
    }
  }
  return mu;
}

double max_column_norm(const Eigen::MatrixXd& QA) {
  double rho = 0.0;
  for (Eigen::Index j = 0; j < QA.cols(); ++j) {
    rho = std::max(rho, QA.col(j).norm());
  }
  return rho;
}

std::optional<double> robustness_bound(double mu, double rho, double delta_A,
                                       double delta_y, int m, int k) {
  if (m < 1 || k < 1) return std::nullopt;
  const bool gap_ok = 2.0 * (delta_A + rho) * (delta_A + rho) <
                      2.0 - mu - rho * rho;
  if (!gap_ok) return std::nullopt;

  const double denom = (2.0 - rho * rho + mu) / (2.0 * k) -
                       (mu + delta_A * delta_A + 2.0 * delta_A * rho);
  if (denom <= 0.0) return std::nullopt;

  const double numer =
      2.0 * delta_y * (rho * std::sqrt(static_cast<double>(m)) +
                       delta_A * static_cast<double>(m));
  return numer / denom;
}

CoherenceReport analyze_instance(const ProblemInstance& p,
                                 std::optional<double> rho_override) {
  CoherenceReport rep;
  rep.mu = mutual_coherence(p.QA);
  rep.rho = rho_override.value_or(max_column_norm(p.QA));
  rep.hypothesis_gap_ok =
      2.0 * (p.delta_A_bound + rep.rho) * (p.delta_A_bound + rep.rho) <
      2.0 - rep.mu - rep.rho * rep.rho;

  if (rep.hypothesis_gap_ok) {
    const double coef = rep.mu + p.delta_A_bound * p.delta_A_bound +
                        2.0 * p.delta_A_bound * rep.rho;
    const double top = 2.0 - rep.rho * rep.rho + rep.mu;
    if (coef <= 0.0) {
      rep.k_max_for_T = std::numeric_limits<long>::max();
    } else {
      const double limit = top / (2.0 * coef);  // finite T iff k < limit
      const long k_max = static_cast<long>(std::ceil(limit)) - 1;
      if (k_max >= 1) rep.k_max_for_T = k_max;
    }
  }

  rep.T = robustness_bound(rep.mu, rep.rho, p.delta_A_bound, p.delta_y_bound,
                           p.m, p.k);
  return rep;
}

MetricsRecord compute_metrics(const Eigen::VectorXd& x_hat,
                              const Eigen::VectorXd& x_true, int k,
                              double zero_tol) {
  const Eigen::Index n = x_true.size();
  if (x_hat.size() != n) {
    throw std::invalid_argument("metrics: estimate and truth sizes disagree");
  }
  if (!(zero_tol > 0.0)) {
    throw std::invalid_argument("metrics: zero_tol must be positive");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("metrics: k must satisfy 1 <= k <= n");
  }
  const double true_l2_sq = x_true.squaredNorm();
  if (true_l2_sq == 0.0) {
    throw std::invalid_argument(
        "metrics: x_true is all-zero, relative errors undefined");
  }

  MetricsRecord rec;
  rec.zero_tol = zero_tol;
  rec.rel_l2_sq = (x_hat - x_true).squaredNorm() / true_l2_sq;
  rec.rel_l1 = (x_hat - x_true).lpNorm<1>() / x_true.lpNorm<1>();

  long nonzeros = 0;
  long false_pos = 0;
  long false_neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool hat_nonzero = std::abs(x_hat(i)) > zero_tol;
    const bool true_nonzero = x_true(i) != 0.0;
    if (hat_nonzero) ++nonzeros;
    if (hat_nonzero && !true_nonzero) ++false_pos;
    if (!hat_nonzero && true_nonzero) ++false_neg;
  }
  rec.sparsity = static_cast<double>(nonzeros) / static_cast<double>(n);
  rec.fpr = k == n ? 0.0
                   : static_cast<double>(false_pos) /
                         static_cast<double>(n - k);
  rec.fnr = static_cast<double>(false_neg) / static_cast<double>(k);
  return rec;
}

}  // namespace qcslp
