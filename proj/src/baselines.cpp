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

#include "qcslp/baselines.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qcslp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

SolveStatus from_lp_status(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return SolveStatus::kOk;
    case LpStatus::kInfeasible:
      return SolveStatus::kInfeasible;
    case LpStatus::kUnbounded:
      return SolveStatus::kUnbounded;
    case LpStatus::kIterationLimit:
      return SolveStatus::kIterationLimit;
  }
  return SolveStatus::kNonConverged;
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double t) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i)) - t;
    out(i) = a > 0.0 ? (v(i) > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

std::vector<int> support_of(const Eigen::VectorXd& v) {
  std::vector<int> s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0.0) s.push_back(static_cast<int>(i));
  }
  return s;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kQcsLp:
      return "qcs-lp";
    case Method::kBpdnInf:
      return "bpdn-inf";
    case Method::kBpdn2:
      return "bpdn-2";
    case Method::kNiht:
      return "niht";
  }
  return "unknown";
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOk:
      return "ok";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kIterationLimit:
      return "iteration-limit";
    case SolveStatus::kNonConverged:
      return "non-converged";
  }
  return "unknown";
}

RecoveryResult solve_qcs_lp(const ProblemInstance& p,
                            const LpSolveOptions& opts) {
  const auto start = Clock::now();
  const LpProblem lp = build_qcs_lp(p.QA, p.Qy, p.delta_A_bound,
                                    p.delta_y_bound);
  const LpSolution sol = solve_lp(lp, opts);

  RecoveryResult res;
  res.method = Method::kQcsLp;
  res.status = from_lp_status(sol.status);
  res.iterations = sol.iterations;
  res.x_hat = sol.status == LpStatus::kOptimal ? sol.z
                                               : Eigen::VectorXd::Zero(p.n);
  res.wall_time_ms = elapsed_ms(start);
  return res;
}

RecoveryResult solve_bpdn_inf(const Eigen::MatrixXd& QA,
                              const Eigen::VectorXd& Qy, double epsilon,
                              const LpSolveOptions& opts) {
  const auto start = Clock::now();
  const Eigen::Index n = QA.cols();
  const LpProblem lp = build_bpdn_inf_lp(QA, Qy, epsilon);
  const LpSolution sol = solve_lp(lp, opts);

  RecoveryResult res;
  res.method = Method::kBpdnInf;
  res.status = from_lp_status(sol.status);
  res.iterations = sol.iterations;
  res.x_hat = sol.status == LpStatus::kOptimal
                  ? Eigen::VectorXd(sol.z.head(n) - sol.z.tail(n))
                  : Eigen::VectorXd::Zero(n);
  res.wall_time_ms = elapsed_ms(start);
  return res;
}

RecoveryResult solve_bpdn_2(const Eigen::MatrixXd& QA,
                            const Eigen::VectorXd& Qy, double epsilon,
                            const Bpdn2Options& opts) {
  if (epsilon < 0.0) {
    throw std::invalid_argument("bpdn2: epsilon must be nonnegative");
  }
  if (Qy.size() != QA.rows()) {
    throw std::invalid_argument("bpdn2: QA rows and Qy length disagree");
  }
  const auto start = Clock::now();
  const Eigen::Index n = QA.cols();

  const double L = std::max(
      QA.jacobiSvd().singularValues()(0), 1e-12);
  const double tau = opts.step_scale / L;
  const double sigma = 1.0 / (opts.step_scale * L);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd p = Eigen::VectorXd::Zero(QA.rows());
  Eigen::VectorXd ax = Eigen::VectorXd::Zero(QA.rows());
  Eigen::VectorXd ax_prev = ax;
  Eigen::VectorXd atp = Eigen::VectorXd::Zero(n);

  RecoveryResult res;
  res.method = Method::kBpdn2;
  res.status = SolveStatus::kNonConverged;

  for (int t = 1; t <= opts.max_iters; ++t) {
    // Dual update: the scaled residual is projected onto the epsilon ball
    // around Qy (Moreau decomposition of the ball indicator).
    const Eigen::VectorXd v = p + sigma * (2.0 * ax - ax_prev);
    Eigen::VectorXd d = v / sigma - Qy;
    const double dn = d.norm();
    if (dn > epsilon) d *= epsilon / std::max(dn, 1e-300);
    const Eigen::VectorXd p_new = v - sigma * (Qy + d);

    const Eigen::VectorXd atp_new = QA.transpose() * p_new;
    const Eigen::VectorXd x_new = soft_threshold(x - tau * atp_new, tau);
    const Eigen::VectorXd ax_new = QA * x_new;

    const double primal_res =
        ((x - x_new) / tau - (atp - atp_new)).norm();
    const double dual_res = ((p - p_new) / sigma - (ax - ax_new)).norm();
    const double ball_gap = std::max(0.0, (ax_new - Qy).norm() - epsilon);

    ax_prev = ax;
    x = x_new;
    p = p_new;
    ax = ax_new;
    atp = atp_new;
    res.iterations = t;

    if (primal_res <= opts.tol * std::max(1.0, x.norm()) &&
        dual_res <= opts.tol * std::max(1.0, p.norm()) &&
        ball_gap <= 5.0 * opts.tol) {
      res.status = SolveStatus::kOk;
      break;
    }
  }

  res.x_hat = x;
  res.wall_time_ms = elapsed_ms(start);
  return res;
}

Eigen::VectorXd hard_threshold(const Eigen::VectorXd& v, int k) {
  if (k < 0) throw std::invalid_argument("hard_threshold: k must be >= 0");
  const int n = static_cast<int>(v.size());
  if (k >= n) return v;

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::partial_sort(idx.begin(), idx.begin() + k, idx.end(),
                    [&v](int a, int b) {
                      const double fa = std::abs(v(a));
                      const double fb = std::abs(v(b));
                      if (fa != fb) return fa > fb;
                      return a < b;
                    });
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < k; ++i) out(idx[i]) = v(idx[i]);
  return out;
}

RecoveryResult niht(const Eigen::MatrixXd& QA, const Eigen::VectorXd& Qy,
                    int k, const NihtOptions& opts) {
  const int n = static_cast<int>(QA.cols());
  if (k < 1 || k > n) {
    throw std::invalid_argument("niht: k must satisfy 1 <= k <= n");
  }
  if (Qy.size() != QA.rows()) {
    throw std::invalid_argument("niht: QA rows and Qy length disagree");
  }
  const auto start = Clock::now();
  // Stability margin for accepting steps that change the support.
  constexpr double kMargin = 0.99;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);

  RecoveryResult res;
  res.method = Method::kNiht;
  res.status = SolveStatus::kNonConverged;

  for (int t = 1; t <= opts.max_iters; ++t) {
    const Eigen::VectorXd g = QA.transpose() * (Qy - QA * x);
    res.iterations = t;

    std::vector<int> support = support_of(x);
    if (support.empty()) {
      const Eigen::VectorXd top = hard_threshold(g, k);
      support = support_of(top);
    }
    if (g.cwiseAbs().maxCoeff() < 1e-14) {
      res.status = SolveStatus::kOk;  // stationary point
      break;
    }

    Eigen::VectorXd g_masked = Eigen::VectorXd::Zero(n);
    for (const int j : support) g_masked(j) = g(j);
    const double num = g_masked.squaredNorm();
    const double den = (QA * g_masked).squaredNorm();
    double mu = (den > 1e-300 && num > 0.0) ? num / den : 1.0;

    Eigen::VectorXd x_cand = hard_threshold(x + mu * g, k);
    int guard = 0;
    while (support_of(x_cand) != support && guard++ < 60) {
      const Eigen::VectorXd dx = x_cand - x;
      const double change = (QA * dx).squaredNorm();
      if (change < 1e-300) break;
      const double mu_max = kMargin * dx.squaredNorm() / change;
      if (mu <= mu_max) break;  // stable despite the support change
      mu *= 0.5;
      x_cand = hard_threshold(x + mu * g, k);
    }

    const double step = (x_cand - x).norm();
    const double base = x.norm();
    x = x_cand;
    if (step <= opts.tol * base || (base == 0.0 && step == 0.0)) {
      res.status = SolveStatus::kOk;
      break;
    }
  }

  res.x_hat = x;
  res.wall_time_ms = elapsed_ms(start);
  return res;
}

}  // namespace qcslp
