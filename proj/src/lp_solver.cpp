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

#include "qcslp/lp_solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qcslp {

namespace {

void validate_problem(const LpProblem& p) {
  if (p.num_vars < 1) {
    throw std::invalid_argument("lp_solver: num_vars must be positive");
  }
  if (p.objective.size() != p.num_vars) {
    throw std::invalid_argument(
        "lp_solver: objective length must equal num_vars");
  }
  if (p.G.cols() != p.num_vars || p.G.rows() != p.h.size()) {
    throw std::invalid_argument("lp_solver: G and h dimensions disagree");
  }
  if (!p.nonneg) {
    throw std::invalid_argument(
        "lp_solver: solve_lp requires nonneg variables; split signed models "
        "first");
  }
}

// Dense tableau. Column layout: [structural | slacks | artificials | rhs];
// the last row holds the reduced costs of the running phase.
class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& p, const LpSolveOptions& opts)
      : n_(p.num_vars),
        rows_(static_cast<int>(p.G.rows())),
        opts_(opts),
        objective_(p.objective) {
    max_iters_ = opts_.max_iters > 0 ? opts_.max_iters : 50 * (n_ + rows_);

    std::vector<int> art_rows;
    for (int i = 0; i < rows_; ++i) {
      if (p.h(i) < 0.0) art_rows.push_back(i);
    }
    na_ = static_cast<int>(art_rows.size());
    cols_ = n_ + rows_ + na_;
    enter_limit_ = n_ + rows_;  // artificials never enter

    t_ = Eigen::MatrixXd::Zero(rows_ + 1, cols_ + 1);
    basis_.resize(rows_);
    int art = 0;
    for (int i = 0; i < rows_; ++i) {
      if (p.h(i) >= 0.0) {
        t_.row(i).head(n_) = p.G.row(i);
        t_(i, n_ + i) = 1.0;
        t_(i, cols_) = p.h(i);
        basis_[i] = n_ + i;
      } else {
        // Negated row keeps the starting rhs nonnegative; the slack flips
        // sign and an artificial variable becomes basic.
        t_.row(i).head(n_) = -p.G.row(i);
        t_(i, n_ + i) = -1.0;
        t_(i, n_ + rows_ + art) = 1.0;
        t_(i, cols_) = -p.h(i);
        basis_[i] = n_ + rows_ + art;
        ++art;
      }
    }
    h_scale_ = 1.0 + p.h.cwiseAbs().maxCoeff();
  }

  LpStatus run() {
    if (na_ > 0) {
      load_phase1_costs();
      const PhaseResult r = iterate();
      if (r == PhaseResult::kIterationLimit) return LpStatus::kIterationLimit;
      if (r == PhaseResult::kUnbounded) {
        throw std::logic_error("simplex: phase 1 reported unbounded");
      }
      const double infeasibility = -t_(rows_, cols_);
      if (infeasibility > 100.0 * opts_.feas_tol * h_scale_) {
        return LpStatus::kInfeasible;
      }
      purge_artificials();
    }
    load_phase2_costs();
    const PhaseResult r = iterate();
    if (r == PhaseResult::kIterationLimit) return LpStatus::kIterationLimit;
    if (r == PhaseResult::kUnbounded) return LpStatus::kUnbounded;
    return LpStatus::kOptimal;
  }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) z(basis_[i]) = t_(i, cols_);
    }
    return z;
  }

  int iterations() const { return iters_; }

 private:
  enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

  void load_phase1_costs() {
    t_.row(rows_).setZero();
    for (int j = n_ + rows_; j < cols_; ++j) t_(rows_, j) = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] >= n_ + rows_) t_.row(rows_) -= t_.row(i);
    }
  }

  void load_phase2_costs() {
    t_.row(rows_).setZero();
    t_.row(rows_).head(n_) = objective_;
    for (int i = 0; i < rows_; ++i) {
      const double cb = basis_[i] < n_ ? objective_(basis_[i]) : 0.0;
      if (cb != 0.0) t_.row(rows_) -= cb * t_.row(i);
    }
  }

  int pick_entering() const {
    if (opts_.pivot_rule == LpSolveOptions::PivotRule::kBland) {
      for (int j = 0; j < enter_limit_; ++j) {
        if (t_(rows_, j) < -opts_.pivot_tol) return j;
      }
      return -1;
    }
    int best = -1;
    double most_negative = -opts_.pivot_tol;
    for (int j = 0; j < enter_limit_; ++j) {
      if (t_(rows_, j) < most_negative) {
        most_negative = t_(rows_, j);
        best = j;
      }
    }
    return best;
  }

  // Smallest nonnegative ratio; degenerate ties go to the smallest row index.
  int pick_leaving(int col) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows_; ++i) {
      const double a = t_(i, col);
      if (a <= opts_.pivot_tol) continue;
      const double ratio = std::max(t_(i, cols_), 0.0) / a;
      if (best < 0 || ratio < best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    const double piv = t_(row, col);
    t_.row(row) /= piv;
    t_(row, col) = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) {
        t_.row(i) -= f * t_.row(row);
        t_(i, col) = 0.0;
      }
    }
    basis_[row] = col;
    ++iters_;
  }

  PhaseResult iterate() {
    for (;;) {
      if (iters_ >= max_iters_) return PhaseResult::kIterationLimit;
      const int col = pick_entering();
      if (col < 0) return PhaseResult::kOptimal;
      const int row = pick_leaving(col);
      if (row < 0) return PhaseResult::kUnbounded;
      pivot(row, col);
    }
  }

  // Basic artificials are at zero after a feasible phase 1. Pivot them onto
  // any usable original column; rows that admit none are redundant and are
  // dropped so phase 2 never lets an artificial grow back.
  void purge_artificials() {
    std::vector<int> keep;
    keep.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < n_ + rows_) {
        keep.push_back(i);
        continue;
      }
      int col = -1;
      for (int j = 0; j < enter_limit_; ++j) {
        if (std::abs(t_(i, j)) > opts_.pivot_tol) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        keep.push_back(i);
      }
      // else: dependent row, dropped below
    }
    if (static_cast<int>(keep.size()) != rows_) {
      Eigen::MatrixXd compact(static_cast<int>(keep.size()) + 1, cols_ + 1);
      std::vector<int> new_basis;
      new_basis.reserve(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) {
        compact.row(static_cast<int>(i)) = t_.row(keep[i]);
        new_basis.push_back(basis_[keep[i]]);
      }
      compact.row(static_cast<int>(keep.size())) = t_.row(rows_);
      t_ = std::move(compact);
      basis_ = std::move(new_basis);
      rows_ = static_cast<int>(keep.size());
    }
  }

  int n_;
  int rows_;
  int na_ = 0;
  int cols_ = 0;
  int enter_limit_ = 0;
  int max_iters_ = 0;
  int iters_ = 0;
  double h_scale_ = 1.0;
  LpSolveOptions opts_;
  Eigen::VectorXd objective_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p, const LpSolveOptions& opts) {
  validate_problem(p);

  LpSolution sol;
  if (p.G.rows() == 0) {
    // No rows: z = 0 is optimal iff no objective entry is negative.
    const bool unbounded = (p.objective.array() < 0.0).any();
    sol.status = unbounded ? LpStatus::kUnbounded : LpStatus::kOptimal;
    sol.z = Eigen::VectorXd::Zero(p.num_vars);
    sol.objective_value = 0.0;
    return sol;
  }

  SimplexTableau tableau(p, opts);
  sol.status = tableau.run();
  sol.iterations = tableau.iterations();
  if (sol.status != LpStatus::kOptimal) return sol;

  sol.z = tableau.solution();
  sol.objective_value = p.objective.dot(sol.z);

  // Post-solve assertion, not trust: the reported optimum must satisfy the
  // model it was asked to solve.
  const double resid = (p.G * sol.z - p.h).maxCoeff();
  if (resid > opts.feas_tol || sol.z.minCoeff() < -opts.feas_tol) {
    throw std::logic_error("simplex: optimal point violates constraints");
  }
  return sol;
}

namespace {

struct StackedSystem {
  Eigen::MatrixXd rows;  // all inequality rows, including facets and box
  Eigen::VectorXd rhs;
};

// Best feasible vertex of {G z <= h, z >= 0, 1'z <= box}. nullopt if the
// boxed polytope has no feasible vertex.
struct VertexScan {
  bool feasible = false;
  double objective = std::numeric_limits<double>::infinity();
  Eigen::VectorXd z;
  int inspected = 0;
};

VertexScan scan_vertices(const LpProblem& p, const StackedSystem& sys,
                         double /*box*/) {
  const int n = p.num_vars;
  const int total = static_cast<int>(sys.rows.rows());
  VertexScan best;

  std::vector<int> combo(n);
  for (int i = 0; i < n; ++i) combo[i] = i;

  const auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && combo[i] == total - n + i) --i;
    if (i < 0) return false;
    ++combo[i];
    for (int j = i + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
    return true;
  };

  do {
    Eigen::MatrixXd active(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
      active.row(i) = sys.rows.row(combo[i]);
      b(i) = sys.rhs(combo[i]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(active);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd z = lu.solve(b);
    ++best.inspected;
    if ((active * z - b).cwiseAbs().maxCoeff() >
        1e-7 * (1.0 + b.cwiseAbs().maxCoeff())) {
      continue;  // solve too inaccurate to trust
    }
    bool ok = true;
    for (int i = 0; i < total && ok; ++i) {
      const double slack = sys.rows.row(i).dot(z) - sys.rhs(i);
      if (slack > 1e-6 * (1.0 + std::abs(sys.rhs(i)))) ok = false;
    }
    if (!ok) continue;
    const double obj = p.objective.dot(z);
    if (!best.feasible || obj < best.objective) {
      best.feasible = true;
      best.objective = obj;
      best.z = z;
    }
  } while (advance());
  return best;
}

StackedSystem stack_system(const LpProblem& p, double box) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.G.rows());
  StackedSystem sys;
  sys.rows = Eigen::MatrixXd::Zero(m + n + 1, n);
  sys.rhs = Eigen::VectorXd::Zero(m + n + 1);
  sys.rows.topRows(m) = p.G;
  sys.rhs.head(m) = p.h;
  for (int i = 0; i < n; ++i) sys.rows(m + i, i) = -1.0;  // -z_i <= 0
  sys.rows.row(m + n).setOnes();                          // 1'z <= box
  sys.rhs(m + n) = box;
  return sys;
}

}  // namespace

LpSolution enumerate_vertices_oracle(const LpProblem& p) {
  validate_problem(p);
  const int m = static_cast<int>(p.G.rows());
  if (p.num_vars + m > 12) {
    throw std::invalid_argument(
        "lp_solver: vertex oracle limited to num_vars + rows <= 12");
  }

  const double box1 = 1e6;
  const VertexScan first = scan_vertices(p, stack_system(p, box1), box1);

  LpSolution sol;
  if (!first.feasible) {
    sol.status = LpStatus::kInfeasible;
    sol.iterations = first.inspected;
    return sol;
  }

  const double box2 = 1e7;
  const VertexScan second = scan_vertices(p, stack_system(p, box2), box2);
  sol.iterations = first.inspected + second.inspected;
  if (second.feasible &&
      second.objective < first.objective - 1e-6 * (1.0 + std::abs(first.objective))) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.z = first.z;
  sol.objective_value = first.objective;
  return sol;
}

}  // namespace qcslp
