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

#include "qcslp/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcslp {

Quantizer make_uniform_quantizer(int levels, double range_lo, double range_hi) {
  if (levels < 2) {
    throw std::invalid_argument("quantizer: levels must be >= 2");
  }
  if (!(range_lo < range_hi)) {
    throw std::invalid_argument("quantizer: range_lo must be < range_hi");
  }
  Quantizer q;
  q.levels = levels;
  q.range_lo = range_lo;
  q.range_hi = range_hi;
  q.step = (range_hi - range_lo) / static_cast<double>(levels - 1);
  q.max_error = q.step / 2.0;
  return q;
}

double quantize_scalar(const Quantizer& q, double value) {
  const double v = std::clamp(value, q.range_lo, q.range_hi);
  // floor(x + 0.5) breaks midpoint ties toward the larger level.
  double idx = std::floor((v - q.range_lo) / q.step + 0.5);
  idx = std::clamp(idx, 0.0, static_cast<double>(q.levels - 1));
  return q.range_lo + idx * q.step;
}

Eigen::VectorXd quantize_vector(const Quantizer& q, const Eigen::VectorXd& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = quantize_scalar(q, v(i));
  }
  return out;
}

Eigen::MatrixXd quantize_matrix(const Quantizer& q, const Eigen::MatrixXd& M) {
  Eigen::MatrixXd out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      out(i, j) = quantize_scalar(q, M(i, j));
    }
  }
  return out;
}

long saturation_count(const Quantizer& q, const Eigen::MatrixXd& M) {
  long count = 0;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (M(i, j) < q.range_lo || M(i, j) > q.range_hi) ++count;
    }
  }
  return count;
}

long saturation_count(const Quantizer& q, const Eigen::VectorXd& v) {
  long count = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < q.range_lo || v(i) > q.range_hi) ++count;
  }
  return count;
}

}  // namespace qcslp
