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

// Command line front end. Subcommands: gen, solve, sweep, analyze.
// stdout carries exactly one JSON payload per invocation; everything meant
// for humans goes to stderr. Exit codes: 0 ok, 1 usage/input error, 2 solver
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qcslp/analysis.hpp"
#include "qcslp/baselines.hpp"
#include "qcslp/harness.hpp"
#include "qcslp/instance_io.hpp"
#include "qcslp/lp_model.hpp"
#include "qcslp/problem.hpp"

namespace {

using nlohmann::json;
using namespace qcslp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolverFailure = 2;

struct GenArgs {
  int n = 100;
  int m = 40;
  int k = 10;
  double r = 10.0;
  int levels = 1000;
  std::uint64_t seed = 1;
  std::string out;
  double column_norm = 0.0;  // > 0: rescale columns of A
  bool exact = false;        // skip quantization entirely
};

struct SolveArgs {
  std::string in;
  std::string method = "qcs-lp";
  int setting = 1;
  double zero_tol = 0.0;
};

struct AnalyzeArgs {
  std::string in;
  double rho_override = 0.0;  // > 0: use instead of the measured column norm
};

struct SweepArgs {
  std::string config_path;
  std::string out_dir;
  // Optional overrides; only values the user passed are applied.
  std::optional<int> n, m, k, trials, threads;
  std::optional<double> r, zero_tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> levels, methods, setting;
};

int run_gen(const GenArgs& args) {
  ProblemInstance inst;
  if (args.exact) {
    inst = generate_instance_exact(args.n, args.m, args.k, args.r, args.seed);
  } else {
    const Quantizer q = make_uniform_quantizer(args.levels, -args.r, args.r);
    inst = args.column_norm > 0.0
               ? generate_instance_scaled(args.n, args.m, args.k, args.r,
                                          args.column_norm, q, args.seed)
               : generate_instance(args.n, args.m, args.k, args.r, q,
                                   args.seed);
  }
  save_instance(inst, args.out);

  json j;
  j["out"] = args.out;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["r"] = inst.r;
  j["seed"] = inst.seed;
  j["delta_A_bound"] = inst.delta_A_bound;
  j["delta_y_bound"] = inst.delta_y_bound;
  j["saturated_A"] = inst.saturated_A;
  j["saturated_y"] = inst.saturated_y;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_solve(const SolveArgs& args) {
  const ProblemInstance inst = load_instance(args.in);
  const auto method = method_from_name(args.method);
  if (!method) {
    std::cerr << "solve: unknown method '" << args.method
              << "' (expected qcs-lp, bpdn-inf, bpdn-2, or niht)\n";
    return kExitUsage;
  }
  const BpdnSetting setting = args.setting == 2 ? BpdnSetting::kSetting2
                                                : BpdnSetting::kSetting1;
  const double eps_inf =
      setting == BpdnSetting::kSetting1
          ? epsilon_setting1(inst.delta_y_bound)
          : epsilon_setting2(inst.delta_A_bound, inst.k, inst.r,
                             inst.delta_y_bound);

  RecoveryResult res;
  bool setting_used = false;
  switch (*method) {
    case Method::kQcsLp:
      res = solve_qcs_lp(inst);
      break;
    case Method::kBpdnInf:
      res = solve_bpdn_inf(inst.QA, inst.Qy, eps_inf);
      setting_used = true;
      break;
    case Method::kBpdn2:
      res = solve_bpdn_2(inst.QA, inst.Qy, epsilon_l2(eps_inf, inst.m));
      setting_used = true;
      break;
    case Method::kNiht:
      res = niht(inst.QA, inst.Qy, inst.k);
      break;
  }

  const double zero_tol =
      args.zero_tol > 0.0 ? args.zero_tol : 1e-4 * inst.r;
  const MetricsRecord metrics =
      compute_metrics(res.x_hat, inst.x_true, inst.k, zero_tol);

  json j;
  j["method"] = method_name(res.method);
  if (setting_used) j["setting"] = static_cast<int>(setting);
  j["status"] = status_name(res.status);
  j["iterations"] = res.iterations;
  j["wall_time_ms"] = res.wall_time_ms;
  j["rel_l2_sq"] = metrics.rel_l2_sq;
  j["rel_l1"] = metrics.rel_l1;
  j["sparsity"] = metrics.sparsity;
  j["fpr"] = metrics.fpr;
  j["fnr"] = metrics.fnr;
  j["zero_tol"] = metrics.zero_tol;
  std::cout << j.dump() << '\n';
  return res.status == SolveStatus::kOk ? kExitOk : kExitSolverFailure;
}

int run_analyze(const AnalyzeArgs& args) {
  const ProblemInstance inst = load_instance(args.in);
  std::optional<double> rho_override;
  if (args.rho_override > 0.0) rho_override = args.rho_override;
  const CoherenceReport rep = analyze_instance(inst, rho_override);

  json j;
  j["mu"] = rep.mu;
  j["rho"] = rep.rho;
  j["hypothesis_gap_ok"] = rep.hypothesis_gap_ok;
  j["k_max_for_T"] = rep.k_max_for_T ? json(*rep.k_max_for_T) : json(nullptr);
  j["T"] = rep.T ? json(*rep.T) : json(nullptr);
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["delta_A_bound"] = inst.delta_A_bound;
  j["delta_y_bound"] = inst.delta_y_bound;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_sweep(const SweepArgs& args) {
  SweepConfig cfg;
  if (!args.config_path.empty()) cfg = load_sweep_config(args.config_path);

  if (args.n) cfg.n = *args.n;
  if (args.m) cfg.m = *args.m;
  if (args.k) cfg.k = *args.k;
  if (args.r) cfg.r = *args.r;
  if (args.trials) cfg.trials = *args.trials;
  if (args.seed) cfg.base_seed = *args.seed;
  if (args.zero_tol) cfg.zero_tol = *args.zero_tol;
  if (args.threads) cfg.threads = *args.threads;
  if (args.levels || args.methods || args.setting) {
    // Reuse the config parser so list syntax stays identical.
    std::string text;
    if (args.levels) text += "levels = " + *args.levels + "\n";
    if (args.methods) text += "methods = " + *args.methods + "\n";
    if (args.setting) text += "setting = " + *args.setting + "\n";
    const SweepConfig parsed = parse_sweep_config(text);
    if (args.levels) cfg.levels_list = parsed.levels_list;
    if (args.methods) cfg.methods = parsed.methods;
    if (args.setting) cfg.bpdn_setting = parsed.bpdn_setting;
  }

  const std::vector<SweepRow> rows = run_sweep(cfg);

  std::filesystem::create_directories(args.out_dir);
  const std::string raw_path = args.out_dir + "/sweep_raw.csv";
  const std::string agg_path = args.out_dir + "/sweep_agg.csv";
  {
    std::ofstream raw(raw_path, std::ios::binary);
    raw << rows_to_csv(rows);
    std::ofstream agg(agg_path, std::ios::binary);
    agg << aggregate_csv(rows);
    if (!raw || !agg) {
      std::cerr << "sweep: failed to write CSV output under '" << args.out_dir
                << "'\n";
      return kExitUsage;
    }
  }

  long failures = 0;
  for (const SweepRow& r : rows) {
    if (r.status != SolveStatus::kOk) ++failures;
  }

  json j;
  j["rows"] = rows.size();
  j["failures"] = failures;
  j["raw_csv"] = raw_path;
  j["agg_csv"] = agg_path;
  std::cout << j.dump() << '\n';
  return failures == 0 ? kExitOk : kExitSolverFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse linear regression from quantized data"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a problem instance");
  gen->add_option("--n", gen_args.n, "signal dimension");
  gen->add_option("--m", gen_args.m, "number of measurements");
  gen->add_option("--k", gen_args.k, "sparsity of the true signal");
  gen->add_option("--r", gen_args.r, "amplitude bound of nonzero entries");
  gen->add_option("--levels", gen_args.levels, "quantization levels");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--out", gen_args.out, "output instance file")->required();
  gen->add_option("--column-norm", gen_args.column_norm,
                  "rescale columns of A to this l2 norm");
  gen->add_flag("--exact", gen_args.exact, "disable quantization");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "run one recovery method");
  solve->add_option("--in", solve_args.in, "instance file")->required();
  solve->add_option("--method", solve_args.method,
                    "qcs-lp | bpdn-inf | bpdn-2 | niht");
  solve->add_option("--setting", solve_args.setting,
                    "BPDN residual bound setting (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  solve->add_option("--zero-tol", solve_args.zero_tol,
                    "support threshold for the metrics");

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "coherence report for an instance");
  analyze->add_option("--in", analyze_args.in, "instance file")->required();
  analyze->add_option("--rho", analyze_args.rho_override,
                      "override the measured column-norm bound");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "run a benchmark sweep");
  sweep->add_option("--config", sweep_args.config_path,
                    "key = value config file");
  sweep->add_option("--out-dir", sweep_args.out_dir, "output directory")
      ->required();
  sweep->add_option("--n", sweep_args.n, "override: signal dimension");
  sweep->add_option("--m", sweep_args.m, "override: measurements");
  sweep->add_option("--k", sweep_args.k, "override: sparsity");
  sweep->add_option("--r", sweep_args.r, "override: amplitude bound");
  sweep->add_option("--trials", sweep_args.trials, "override: trials");
  sweep->add_option("--seed", sweep_args.seed, "override: base seed");
  sweep->add_option("--levels", sweep_args.levels,
                    "override: comma-separated levels list");
  sweep->add_option("--methods", sweep_args.methods,
                    "override: comma-separated method list");
  sweep->add_option("--setting", sweep_args.setting,
                    "override: BPDN setting (1, 2, both)");
  sweep->add_option("--zero-tol", sweep_args.zero_tol,
                    "override: support threshold");
  sweep->add_option("--threads", sweep_args.threads,
                    "override: worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}
