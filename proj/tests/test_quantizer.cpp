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

#include <stdexcept>

#include "qcslp/quantizer.hpp"
#include "qcslp/rng.hpp"

using namespace qcslp;

TEST_SUITE_BEGIN("quantizer");

TEST_CASE("three-level quantizer over [-1, 1]") {
  const Quantizer q = make_uniform_quantizer(3, -1.0, 1.0);
  CHECK(q.step == doctest::Approx(1.0));
  CHECK(q.max_error == doctest::Approx(0.5));
  CHECK(q.max_error == q.step / 2.0);  // exact by construction
  CHECK(quantize_scalar(q, -1.0) == -1.0);
  CHECK(quantize_scalar(q, 0.0) == 0.0);
  CHECK(quantize_scalar(q, 1.0) == 1.0);
}

TEST_CASE("two-point codebook") {
  const Quantizer q = make_uniform_quantizer(2, 0.0, 1.0);
  CHECK(q.max_error == doctest::Approx(0.5));
  CHECK(quantize_scalar(q, 0.2) == 0.0);
  CHECK(quantize_scalar(q, 0.8) == 1.0);
}

TEST_CASE("degenerate arguments are rejected") {
  CHECK_THROWS_AS(make_uniform_quantizer(1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_quantizer(3, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_quantizer(3, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("nearest level, ties, and saturation") {
  const Quantizer q = make_uniform_quantizer(3, -1.0, 1.0);
  CHECK(quantize_scalar(q, 0.4) == 0.0);
  CHECK(quantize_scalar(q, 1.0) == 1.0);
  CHECK(quantize_scalar(q, 0.5) == 1.0);    // midpoint goes to the larger level
  CHECK(quantize_scalar(q, -0.5) == 0.0);   // same rule on the negative side
  CHECK(quantize_scalar(q, 7.0) == 1.0);    // saturates high
  CHECK(quantize_scalar(q, -7.0) == -1.0);  // saturates low
}

TEST_CASE("matrix quantization is elementwise") {
  const Quantizer q = make_uniform_quantizer(3, -1.0, 1.0);

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK(quantize_matrix(q, id) == id);

  Eigen::MatrixXd row(1, 2);
  row << 0.4, -0.4;
  const Eigen::MatrixXd qrow = quantize_matrix(q, row);
  CHECK(qrow(0, 0) == 0.0);
  CHECK(qrow(0, 1) == 0.0);

  const Eigen::MatrixXd empty(0, 0);
  CHECK(quantize_matrix(q, empty).size() == 0);
}

TEST_CASE("error bound, idempotence, monotonicity over random samples") {
  Rng rng(20260810);
  for (int rep = 0; rep < 50; ++rep) {
    const int levels = 2 + static_cast<int>(rng.below(64));
    const double lo = rng.uniform(-5.0, 0.0);
    const double hi = lo + rng.uniform(0.5, 6.0);
    const Quantizer q = make_uniform_quantizer(levels, lo, hi);

    double prev_v = lo;
    double prev_q = quantize_scalar(q, lo);
    for (int s = 0; s < 200; ++s) {
      const double v = rng.uniform(lo, hi);
      const double qv = quantize_scalar(q, v);
      CHECK(std::abs(qv - v) <= q.max_error + 1e-12);
      CHECK(quantize_scalar(q, qv) == qv);
      if (v >= prev_v) {
        CHECK(qv >= prev_q);
      } else {
        CHECK(qv <= prev_q);
      }
      prev_v = v;
      prev_q = qv;
    }
  }
}

TEST_CASE("saturation counting") {
  const Quantizer q = make_uniform_quantizer(5, -1.0, 1.0);
  Eigen::VectorXd v(4);
  v << -3.0, -1.0, 0.2, 1.5;
  CHECK(saturation_count(q, v) == 2);
  Eigen::MatrixXd M(2, 2);
  M << 0.0, 0.9, -0.9, 0.1;
  CHECK(saturation_count(q, M) == 0);
}

TEST_SUITE_END();
