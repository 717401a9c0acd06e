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

#include "qcslp/lp_model.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace qcslp {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_lp_constraints(
    const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy, double delta_A,
    double delta_y) {
  const Eigen::Index m = QA.rows();
  const Eigen::Index n = QA.cols();
  if (Qy.size() != m) {
    throw std::invalid_argument("lp_model: QA rows and Qy length disagree");
  }
  if (delta_A < 0.0 || delta_y < 0.0) {
    throw std::invalid_argument("lp_model: error bounds must be nonnegative");
  }

  Eigen::MatrixXd C(2 * m, n);
  C.topRows(m) = QA.array() - delta_A;
  C.bottomRows(m) = -QA.array() - delta_A;

  Eigen::VectorXd c(2 * m);
  c.head(m) = Qy.array() + delta_y;
  c.tail(m) = -Qy.array() + delta_y;
  return {std::move(C), std::move(c)};
}

LpProblem build_qcs_lp(const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy,
                       double delta_A, double delta_y) {
  auto [C, c] = build_lp_constraints(QA, Qy, delta_A, delta_y);
  LpProblem p;
  p.num_vars = static_cast<int>(QA.cols());
  p.objective = Eigen::VectorXd::Ones(p.num_vars);
  p.G = std::move(C);
  p.h = std::move(c);
  p.nonneg = true;
  return p;
}

LpProblem build_bpdn_inf_lp(const Eigen::MatrixXd& QA,
                            const Eigen::VectorXd& Qy, double epsilon) {
  const Eigen::Index m = QA.rows();
  const Eigen::Index n = QA.cols();
  if (Qy.size() != m) {
    throw std::invalid_argument("lp_model: QA rows and Qy length disagree");
  }
  if (epsilon < 0.0) {
    throw std::invalid_argument("lp_model: epsilon must be nonnegative");
  }

  LpProblem p;
  p.num_vars = static_cast<int>(2 * n);
  p.objective = Eigen::VectorXd::Ones(p.num_vars);
  p.G.resize(2 * m, 2 * n);
  p.G.topLeftCorner(m, n) = QA;
  p.G.topRightCorner(m, n) = -QA;
  p.G.bottomLeftCorner(m, n) = -QA;
  p.G.bottomRightCorner(m, n) = QA;
  p.h.resize(2 * m);
  p.h.head(m) = Qy.array() + epsilon;
  p.h.tail(m) = -Qy.array() + epsilon;
  p.nonneg = true;
  return p;
}

double epsilon_setting1(double delta_y) { return delta_y; }

double epsilon_setting2(double delta_A, int k, double r, double delta_y) {
  return delta_A * static_cast<double>(k) * r + delta_y;
}

double epsilon_l2(double eps_inf, int m) {
  return std::sqrt(static_cast<double>(m)) * eps_inf;
}

std::string to_lp_text(const LpProblem& p) {
  std::string out = "# qcslp lp dump v1\n";
  out += "vars ";
  out += std::to_string(p.num_vars);
  out += "\nnonneg ";
  out += p.nonneg ? '1' : '0';
  out += "\nminimize\n";
  for (Eigen::Index j = 0; j < p.objective.size(); ++j) {
    if (j > 0) out += ' ';
    append_double(out, p.objective(j));
  }
  out += "\nsubject_to\n";
  for (Eigen::Index i = 0; i < p.G.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.G.cols(); ++j) {
      if (j > 0) out += ' ';
      append_double(out, p.G(i, j));
    }
    out += " <= ";
    append_double(out, p.h(i));
    out += '\n';
  }
  return out;
}

}  // namespace qcslp
