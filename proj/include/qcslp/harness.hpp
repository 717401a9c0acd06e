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

#ifndef QCSLP_HARNESS_HPP_
#define QCSLP_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcslp/analysis.hpp"
#include "qcslp/baselines.hpp"

namespace qcslp {

enum class BpdnSetting { kSetting1 = 1, kSetting2 = 2 };

// Benchmark sweep over quantization levels: for every (levels, trial) pair a
// fresh instance is generated over the range [-r, r] and every configured
// method runs on it.
struct SweepConfig {
  int n = 100;
  int m = 40;
  int k = 10;
  double r = 10.0;
  std::vector<int> levels_list = {100, 250, 500, 1000, 2500, 5000};
  int trials = 20;
  std::uint64_t base_seed = 1;
  std::vector<Method> methods = {Method::kQcsLp, Method::kBpdnInf,
                                 Method::kBpdn2, Method::kNiht};
  enum class SettingChoice { kSetting1, kSetting2, kBoth } bpdn_setting =
      SettingChoice::kBoth;
  double zero_tol = 0.0;  // <= 0 means the default 1e-4 * r
  int threads = 1;        // 0 means hardware concurrency
};

struct SweepRow {
  int levels = 0;
  int trial = 0;
  Method method = Method::kQcsLp;
  std::optional<BpdnSetting> setting;  // set only for the BPDN methods
  MetricsRecord metrics;
  SolveStatus status = SolveStatus::kOk;
  int iterations = 0;
  double wall_time_ms = 0.0;  // not written to CSV; timings are not replayable
};

// Stream seed for one trial; pairwise distinct across any practical sweep.
std::uint64_t trial_seed(std::uint64_t base_seed, int levels, int trial_index);

double effective_zero_tol(const SweepConfig& cfg);

// Rows for a single (levels, trial) cell, in canonical method/setting order.
// Solver failures are reported as rows carrying the failure status.
std::vector<SweepRow> run_trial(const SweepConfig& cfg, int levels,
                                int trial_index);

// All levels x trials. Trials may execute concurrently (cfg.threads); the
// returned rows are sorted by (levels, trial, method, setting), so the output
// does not depend on the execution order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// RFC 4180 CSV (CRLF line ends, fixed headers, round-trip double formatting).
// Raw header:
//   levels,trial,method,setting,rel_l2_sq,rel_l1,sparsity,fpr,fnr,zero_tol,
//   status,iterations
// Aggregated header (means across trials per levels/method/setting group):
//   levels,method,setting,trials,mean_rel_l2_sq,mean_rel_l1,mean_sparsity,
//   mean_fpr,mean_fnr,mean_iterations
std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string aggregate_csv(const std::vector<SweepRow>& rows);

// Plain key-value config file ("key = value", '#' comments, lists separated
// by commas). Unknown keys and malformed values throw std::runtime_error.
// Recognized keys: n, m, k, r, levels, trials, seed, methods, setting,
// zero_tol, threads.
SweepConfig load_sweep_config(const std::string& path);
SweepConfig parse_sweep_config(const std::string& text);

std::optional<Method> method_from_name(const std::string& name);

}  // namespace qcslp

#endif  // QCSLP_HARNESS_HPP_
