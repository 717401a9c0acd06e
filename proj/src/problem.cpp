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

#include "qcslp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qcslp/rng.hpp"

namespace qcslp {

namespace {

ProblemInstance generate_core(int n, int m, int k, double r,
                              const Quantizer* q_A, const Quantizer* q_y,
                              const double* column_norm, std::uint64_t seed) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("instance: dimensions must be positive");
  }
  if (k < 0 || k > n) {
    throw std::invalid_argument("instance: k must satisfy 0 <= k <= n");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("instance: r must be positive");
  }

  Rng rng(seed);
  ProblemInstance p;
  p.n = n;
  p.m = m;
  p.k = k;
  p.r = r;
  p.seed = seed;

  p.A.resize(m, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      p.A(i, j) = scale * rng.gaussian();
    }
  }
  if (column_norm != nullptr) {
    for (int j = 0; j < n; ++j) {
      const double norm = p.A.col(j).norm();
      if (norm > 0.0) p.A.col(j) *= (*column_norm / norm);
    }
  }

  // Uniform k-subset via partial Fisher-Yates.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  std::vector<int> support(idx.begin(), idx.begin() + k);
  std::sort(support.begin(), support.end());

  p.x_true = Eigen::VectorXd::Zero(n);
  for (const int j : support) {
    // 1 - U[0,1) lands in (0, r]: the support size stays exactly k.
    p.x_true(j) = r * (1.0 - rng.uniform01());
  }

  p.y = p.A * p.x_true;

  if (q_A != nullptr) {
    p.QA = quantize_matrix(*q_A, p.A);
    p.Qy = quantize_vector(*q_y, p.y);
    p.saturated_A = saturation_count(*q_A, p.A);
    p.saturated_y = saturation_count(*q_y, p.y);
    // A saturated entry can err by more than step/2; widen the recorded
    // bounds so they stay valid for the realized errors.
    const double err_A = (p.QA - p.A).cwiseAbs().maxCoeff();
    const double err_y = (p.Qy - p.y).cwiseAbs().maxCoeff();
    p.delta_A_bound = std::max(q_A->max_error, err_A);
    p.delta_y_bound = std::max(q_y->max_error, err_y);
  } else {
    p.QA = p.A;
    p.Qy = p.y;
    p.delta_A_bound = 0.0;
    p.delta_y_bound = 0.0;
  }
  return p;
}

}  // namespace

ProblemInstance generate_instance(int n, int m, int k, double r,
                                  const Quantizer& q, std::uint64_t seed) {
  return generate_core(n, m, k, r, &q, nullptr, seed);
}

ProblemInstance generate_instance_exact(int n, int m, int k, double r,
                                        std::uint64_t seed) {
  return generate_core(n, m, k, r, nullptr, nullptr, seed);
}

ProblemInstance generate_instance_scaled(int n, int m, int k, double r,
                                         double column_norm, const Quantizer& q,
                                         std::uint64_t seed) {
  if (!(column_norm > 0.0)) {
    throw std::invalid_argument("instance: column_norm must be positive");
  }
  return generate_core(n, m, k, r, &q, &column_norm, seed);
}

bool verify_instance(const ProblemInstance& p) {
  if (p.n < 1 || p.m < 1 || p.k < 0 || p.k > p.n) return false;
  if (!(p.r > 0.0)) return false;
  if (p.delta_A_bound < 0.0 || p.delta_y_bound < 0.0) return false;
  if (p.A.rows() != p.m || p.A.cols() != p.n) return false;
  if (p.QA.rows() != p.m || p.QA.cols() != p.n) return false;
  if (p.x_true.size() != p.n || p.y.size() != p.m || p.Qy.size() != p.m) {
    return false;
  }

  const double y_scale = std::max(1.0, p.y.cwiseAbs().maxCoeff());
  if ((p.A * p.x_true - p.y).cwiseAbs().maxCoeff() > 1e-10 * y_scale) {
    return false;
  }
  if ((p.QA - p.A).cwiseAbs().maxCoeff() > p.delta_A_bound) return false;
  if ((p.Qy - p.y).cwiseAbs().maxCoeff() > p.delta_y_bound) return false;

  int nonzeros = 0;
  for (int i = 0; i < p.n; ++i) {
    const double v = p.x_true(i);
    if (v == 0.0) continue;
    if (v < 0.0 || v > p.r) return false;
    ++nonzeros;
  }
  return nonzeros == p.k;
}

}  // namespace qcslp
