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

#include <cmath>
#include <stdexcept>

#include "qcslp/instance_io.hpp"
#include "qcslp/problem.hpp"

using namespace qcslp;

namespace {
const Quantizer kPaperQuantizer = make_uniform_quantizer(1000, -10.0, 10.0);
}

TEST_SUITE_BEGIN("problem");

TEST_CASE("paper-scale instance") {
  const ProblemInstance p =
      generate_instance(100, 40, 10, 10.0, kPaperQuantizer, 7);
  CHECK(p.n == 100);
  CHECK(p.m == 40);
  CHECK(p.A.rows() == 40);
  CHECK(p.A.cols() == 100);
  CHECK(verify_instance(p));
  CHECK((p.x_true.array() > 0.0).count() == 10);
  CHECK(p.delta_A_bound == doctest::Approx(kPaperQuantizer.max_error));
}

TEST_CASE("same seed gives bitwise-identical instances") {
  const ProblemInstance a =
      generate_instance(100, 40, 10, 10.0, kPaperQuantizer, 42);
  const ProblemInstance b =
      generate_instance(100, 40, 10, 10.0, kPaperQuantizer, 42);
  CHECK(a.A == b.A);
  CHECK(a.x_true == b.x_true);
  CHECK(a.y == b.y);
  CHECK(a.QA == b.QA);
  CHECK(a.Qy == b.Qy);

  const ProblemInstance c =
      generate_instance(100, 40, 10, 10.0, kPaperQuantizer, 43);
  CHECK(a.A != c.A);
}

TEST_CASE("empty support") {
  const ProblemInstance p =
      generate_instance(5, 3, 0, 10.0, kPaperQuantizer, 1);
  CHECK(p.x_true.isZero(0.0));
  CHECK(p.y.isZero(0.0));
  CHECK(verify_instance(p));
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(generate_instance(5, 3, 6, 10.0, kPaperQuantizer, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(0, 3, 0, 10.0, kPaperQuantizer, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(5, 0, 1, 10.0, kPaperQuantizer, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(5, 3, 1, 0.0, kPaperQuantizer, 1),
                  std::invalid_argument);
}

TEST_CASE("verify_instance flags broken invariants") {
  ProblemInstance p = generate_instance(20, 8, 3, 10.0, kPaperQuantizer, 5);
  CHECK(verify_instance(p));

  SUBCASE("perturbed measurement") {
    p.y(0) += 1.0;
    CHECK_FALSE(verify_instance(p));
  }
  SUBCASE("negative signal entry") {
    p.x_true(0) = -0.5;
    CHECK_FALSE(verify_instance(p));
  }
  SUBCASE("support size off") {
    int j = 0;
    while (p.x_true(j) != 0.0) ++j;
    p.x_true(j) = 1e-3;  // extra nonzero breaks y = A x as well; fix y up
    p.y = p.A * p.x_true;
    p.Qy = quantize_vector(kPaperQuantizer, p.y);
    CHECK_FALSE(verify_instance(p));
  }
  SUBCASE("understated error bound") {
    p.delta_y_bound = 0.0;
    CHECK_FALSE(verify_instance(p));
  }
}

TEST_CASE("entry statistics match N(0, 1/m) at paper scale") {
  const int instances = 100;
  const int m = 40;
  const int n = 100;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < instances; ++s) {
    const ProblemInstance p =
        generate_instance(n, m, 10, 10.0, kPaperQuantizer, 1000 + s);
    sum += p.A.sum();
    sum_sq += p.A.squaredNorm();
    CHECK((p.x_true.array() > 0.0).count() == 10);  // support exactly k
  }
  const double count = static_cast<double>(instances) * m * n;
  const double mean = sum / count;
  const double var = sum_sq / count - mean * mean;
  CHECK(std::abs(mean) <= 3.0 / (m * std::sqrt(static_cast<double>(n))));
  CHECK(var == doctest::Approx(1.0 / m).epsilon(0.20));
}

TEST_CASE("saturation widens the recorded bounds and is counted") {
  // r small enough that this seed pushes a measurement outside [-r, r].
  const Quantizer q = make_uniform_quantizer(64, -1.0, 1.0);
  const ProblemInstance p = generate_instance(30, 10, 5, 1.0, q, 8);
  CHECK(p.saturated_y > 0);
  CHECK(p.delta_y_bound > q.max_error);  // widened past the nominal bound
  CHECK((p.Qy - p.y).cwiseAbs().maxCoeff() <= p.delta_y_bound);
  CHECK(verify_instance(p));  // bounds stay valid under saturation
}

TEST_CASE("exact generator disables quantization") {
  const ProblemInstance p = generate_instance_exact(50, 20, 5, 10.0, 3);
  CHECK(p.QA == p.A);
  CHECK(p.Qy == p.y);
  CHECK(p.delta_A_bound == 0.0);
  CHECK(p.delta_y_bound == 0.0);
  CHECK(verify_instance(p));
}

TEST_CASE("scaled generator pins the column norms") {
  const ProblemInstance p =
      generate_instance_scaled(40, 20, 3, 10.0, 0.5, kPaperQuantizer, 9);
  for (int j = 0; j < p.n; ++j) {
    CHECK(p.A.col(j).norm() == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(verify_instance(p));
}

TEST_CASE("JSON round trip is exact") {
  const ProblemInstance p =
      generate_instance(25, 10, 4, 10.0, kPaperQuantizer, 77);
  const ProblemInstance q = instance_from_json(instance_to_json(p));
  CHECK(q.A == p.A);
  CHECK(q.x_true == p.x_true);
  CHECK(q.y == p.y);
  CHECK(q.QA == p.QA);
  CHECK(q.Qy == p.Qy);
  CHECK(q.seed == p.seed);
  CHECK(q.delta_A_bound == p.delta_A_bound);
  CHECK(verify_instance(q));
}

TEST_CASE("malformed JSON reports the offending field") {
  const ProblemInstance p =
      generate_instance(4, 2, 1, 10.0, kPaperQuantizer, 1);
  const std::string good = instance_to_json(p);

  CHECK_THROWS_WITH_AS(
      instance_from_json("{\"schema_version\": 1, \"n\": 4}"),
      doctest::Contains("missing field 'm'"), std::runtime_error);
  CHECK_THROWS_WITH_AS(instance_from_json("not json"),
                       doctest::Contains("invalid JSON"), std::runtime_error);

  std::string bad = good;
  const auto at = bad.find("\"n\":4");
  REQUIRE(at != std::string::npos);
  bad.replace(at, 5, "\"n\":9");  // dimension mismatch surfaces on 'A'
  CHECK_THROWS_WITH_AS(instance_from_json(bad), doctest::Contains("'A'"),
                       std::runtime_error);
}

TEST_SUITE_END();
