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

#ifndef QCSLP_QUANTIZER_HPP_
#define QCSLP_QUANTIZER_HPP_

#include <Eigen/Core>

namespace qcslp {

// Uniform scalar quantizer over [range_lo, range_hi] with `levels`
// equidistant codebook points, both endpoints included. Immutable after
// construction; every operation on it is pure.
struct Quantizer {
  int levels = 2;
  double range_lo = -1.0;
  double range_hi = 1.0;
  double step = 2.0;       // (range_hi - range_lo) / (levels - 1)
  double max_error = 1.0;  // step / 2
};

// Throws std::invalid_argument for levels < 2 or an empty range.
Quantizer make_uniform_quantizer(int levels, double range_lo, double range_hi);

// Nearest codebook point. Midpoint ties round toward the larger level and
// out-of-range inputs saturate to the nearest endpoint, so the map is total.
double quantize_scalar(const Quantizer& q, double value);

Eigen::VectorXd quantize_vector(const Quantizer& q, const Eigen::VectorXd& v);
Eigen::MatrixXd quantize_matrix(const Quantizer& q, const Eigen::MatrixXd& M);

// Number of entries strictly outside [range_lo, range_hi], i.e. clamped.
long saturation_count(const Quantizer& q, const Eigen::MatrixXd& M);
long saturation_count(const Quantizer& q, const Eigen::VectorXd& v);

}  // namespace qcslp

#endif  // QCSLP_QUANTIZER_HPP_
