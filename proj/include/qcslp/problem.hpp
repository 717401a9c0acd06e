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

#ifndef QCSLP_PROBLEM_HPP_
#define QCSLP_PROBLEM_HPP_

#include <Eigen/Core>
#include <cstdint>

#include "qcslp/quantizer.hpp"

namespace qcslp {

// One sparse-regression instance: the exact data (A, x_true, y = A x_true),
// the quantized data handed to the solvers (QA, Qy), and bounds that are
// valid for the realized elementwise errors. Immutable once generated.
//
// Invariants kept by the generators and checked by verify_instance():
//   - y == A * x_true up to accumulation roundoff (1e-10 relative),
//   - max|QA - A| <= delta_A_bound and max|Qy - y| <= delta_y_bound,
//   - x_true has exactly k entries in (0, r], all others exactly zero.
struct ProblemInstance {
  int n = 0;  // signal dimension
  int m = 0;  // measurements
  int k = 0;  // sparsity of x_true
  double r = 0.0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd A;       // m x n, exact
  Eigen::VectorXd x_true;  // n, nonnegative, k-sparse
  Eigen::VectorXd y;       // m, = A * x_true
  Eigen::MatrixXd QA;      // m x n, quantized
  Eigen::VectorXd Qy;      // m, quantized
  double delta_A_bound = 0.0;
  double delta_y_bound = 0.0;
  long saturated_A = 0;  // entries of A clamped by the quantizer
  long saturated_y = 0;  // entries of y clamped by the quantizer
};

// A entries are i.i.d. N(0, 1/m), the support is a uniform k-subset, and the
// nonzero entries are i.i.d. uniform on (0, r]. Deterministic given the seed
// (draw order: A row-major, then support, then values on the sorted support).
// The recorded delta bounds are the quantizer's worst case, widened to the
// realized max error iff an entry saturated. k = 0 yields x_true = y = 0.
// Throws std::invalid_argument for k > n, k < 0, nonpositive dims or r.
ProblemInstance generate_instance(int n, int m, int k, double r,
                                  const Quantizer& q, std::uint64_t seed);

// Quantization disabled: QA = A, Qy = y, zero error bounds. Same RNG stream
// as generate_instance, so equal seeds produce the same underlying (A, x).
ProblemInstance generate_instance_exact(int n, int m, int k, double r,
                                        std::uint64_t seed);

// Columns of A rescaled to the given l2 norm before measuring. This is the
// small-coherence regime in which robustness_bound() returns a finite radius
// (Gaussian columns at paper scale have norm ~1, which never qualifies).
ProblemInstance generate_instance_scaled(int n, int m, int k, double r,
                                         double column_norm,
                                         const Quantizer& q,
                                         std::uint64_t seed);

// Same, with distinct quantizers for A and y. The finite radius only means
// what it claims when delta_A * k * r stays well below delta_y, which needs
// a finer codebook on A than on y.
ProblemInstance generate_instance_scaled(int n, int m, int k, double r,
                                         double column_norm,
                                         const Quantizer& q_A,
                                         const Quantizer& q_y,
                                         std::uint64_t seed);

// True iff every ProblemInstance invariant holds. Never throws.
bool verify_instance(const ProblemInstance& p);

}  // namespace qcslp

#endif  // QCSLP_PROBLEM_HPP_
