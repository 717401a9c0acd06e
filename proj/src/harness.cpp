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

#include "qcslp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qcslp/lp_model.hpp"
#include "qcslp/rng.hpp"

namespace qcslp {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

int setting_order(const std::optional<BpdnSetting>& s) {
  if (!s) return 0;
  return static_cast<int>(*s);
}

bool row_less(const SweepRow& a, const SweepRow& b) {
  return std::make_tuple(a.levels, a.trial, static_cast<int>(a.method),
                         setting_order(a.setting)) <
         std::make_tuple(b.levels, b.trial, static_cast<int>(b.method),
                         setting_order(b.setting));
}

std::vector<BpdnSetting> settings_of(const SweepConfig& cfg) {
  switch (cfg.bpdn_setting) {
    case SweepConfig::SettingChoice::kSetting1:
      return {BpdnSetting::kSetting1};
    case SweepConfig::SettingChoice::kSetting2:
      return {BpdnSetting::kSetting2};
    case SweepConfig::SettingChoice::kBoth:
      return {BpdnSetting::kSetting1, BpdnSetting::kSetting2};
  }
  return {};
}

double setting_eps_inf(const ProblemInstance& inst, BpdnSetting s) {
  if (s == BpdnSetting::kSetting1) {
    return epsilon_setting1(inst.delta_y_bound);
  }
  return epsilon_setting2(inst.delta_A_bound, inst.k, inst.r,
                          inst.delta_y_bound);
}

SweepRow make_row(const SweepConfig& cfg, int levels, int trial,
                  const RecoveryResult& res,
                  std::optional<BpdnSetting> setting,
                  const ProblemInstance& inst) {
  SweepRow row;
  row.levels = levels;
  row.trial = trial;
  row.method = res.method;
  row.setting = setting;
  row.status = res.status;
  row.iterations = res.iterations;
  row.wall_time_ms = res.wall_time_ms;
  row.metrics = compute_metrics(res.x_hat, inst.x_true, inst.k,
                                effective_zero_tol(cfg));
  return row;
}

void validate_config(const SweepConfig& cfg) {
  if (cfg.levels_list.empty()) {
    throw std::invalid_argument("sweep: levels list is empty");
  }
  for (const int levels : cfg.levels_list) {
    if (levels < 2) {
      throw std::invalid_argument("sweep: every levels entry must be >= 2");
    }
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("sweep: trials must be >= 1");
  }
  if (cfg.k < 1) {
    throw std::invalid_argument("sweep: k must be >= 1");
  }
  if (cfg.methods.empty()) {
    throw std::invalid_argument("sweep: no methods configured");
  }
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, int levels,
                         int trial_index) {
  return mix_seed(base_seed, static_cast<std::uint64_t>(levels),
                  static_cast<std::uint64_t>(trial_index));
}

double effective_zero_tol(const SweepConfig& cfg) {
  return cfg.zero_tol > 0.0 ? cfg.zero_tol : 1e-4 * cfg.r;
}

std::vector<SweepRow> run_trial(const SweepConfig& cfg, int levels,
                                int trial_index) {
  validate_config(cfg);
  const Quantizer q = make_uniform_quantizer(levels, -cfg.r, cfg.r);
  const ProblemInstance inst =
      generate_instance(cfg.n, cfg.m, cfg.k, cfg.r, q,
                        trial_seed(cfg.base_seed, levels, trial_index));

  std::vector<SweepRow> rows;
  for (const Method method : cfg.methods) {
    switch (method) {
      case Method::kQcsLp: {
        rows.push_back(make_row(cfg, levels, trial_index, solve_qcs_lp(inst),
                                std::nullopt, inst));
        break;
      }
      case Method::kBpdnInf: {
        for (const BpdnSetting s : settings_of(cfg)) {
          const double eps = setting_eps_inf(inst, s);
          rows.push_back(make_row(cfg, levels, trial_index,
                                  solve_bpdn_inf(inst.QA, inst.Qy, eps), s,
                                  inst));
        }
        break;
      }
      case Method::kBpdn2: {
        for (const BpdnSetting s : settings_of(cfg)) {
          const double eps = epsilon_l2(setting_eps_inf(inst, s), inst.m);
          rows.push_back(make_row(cfg, levels, trial_index,
                                  solve_bpdn_2(inst.QA, inst.Qy, eps), s,
                                  inst));
        }
        break;
      }
      case Method::kNiht: {
        rows.push_back(make_row(cfg, levels, trial_index,
                                niht(inst.QA, inst.Qy, inst.k), std::nullopt,
                                inst));
        break;
      }
    }
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);

  struct Cell {
    int levels;
    int trial;
  };
  std::vector<Cell> cells;
  for (const int levels : cfg.levels_list) {
    for (int t = 0; t < cfg.trials; ++t) cells.push_back({levels, t});
  }

  unsigned threads = cfg.threads > 0
                         ? static_cast<unsigned>(cfg.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, cells.size());

  std::vector<SweepRow> rows;
  if (threads <= 1) {
    for (const Cell& cell : cells) {
      auto cell_rows = run_trial(cfg, cell.levels, cell.trial);
      rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
    }
  } else {
    // Results stay tied to their cell index, so the gather order does not
    // depend on which worker ran what.
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<SweepRow>> results(cells.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          results[i] = run_trial(cfg, cells[i].levels, cells[i].trial);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& cell_rows : results) {
      rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
    }
  }

  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "levels,trial,method,setting,rel_l2_sq,rel_l1,sparsity,fpr,fnr,"
      "zero_tol,status,iterations\r\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.levels);
    out += ',';
    out += std::to_string(r.trial);
    out += ',';
    out += method_name(r.method);
    out += ',';
    if (r.setting) out += std::to_string(static_cast<int>(*r.setting));
    out += ',';
    out += fmt_double(r.metrics.rel_l2_sq);
    out += ',';
    out += fmt_double(r.metrics.rel_l1);
    out += ',';
    out += fmt_double(r.metrics.sparsity);
    out += ',';
    out += fmt_double(r.metrics.fpr);
    out += ',';
    out += fmt_double(r.metrics.fnr);
    out += ',';
    out += fmt_double(r.metrics.zero_tol);
    out += ',';
    out += status_name(r.status);
    out += ',';
    out += std::to_string(r.iterations);
    out += "\r\n";
  }
  return out;
}

std::string aggregate_csv(const std::vector<SweepRow>& rows) {
  struct Key {
    int levels;
    int method;
    int setting;
    bool operator<(const Key& o) const {
      return std::tie(levels, method, setting) <
             std::tie(o.levels, o.method, o.setting);
    }
  };
  struct Acc {
    long count = 0;
    double rel_l2_sq = 0.0;
    double rel_l1 = 0.0;
    double sparsity = 0.0;
    double fpr = 0.0;
    double fnr = 0.0;
    double iterations = 0.0;
  };
  std::map<Key, Acc> groups;
  for (const SweepRow& r : rows) {
    Acc& acc = groups[{r.levels, static_cast<int>(r.method),
                       setting_order(r.setting)}];
    ++acc.count;
    acc.rel_l2_sq += r.metrics.rel_l2_sq;
    acc.rel_l1 += r.metrics.rel_l1;
    acc.sparsity += r.metrics.sparsity;
    acc.fpr += r.metrics.fpr;
    acc.fnr += r.metrics.fnr;
    acc.iterations += r.iterations;
  }

  std::string out =
      "levels,method,setting,trials,mean_rel_l2_sq,mean_rel_l1,"
      "mean_sparsity,mean_fpr,mean_fnr,mean_iterations\r\n";
  for (const auto& [key, acc] : groups) {
    const double c = static_cast<double>(acc.count);
    out += std::to_string(key.levels);
    out += ',';
    out += method_name(static_cast<Method>(key.method));
    out += ',';
    if (key.setting != 0) out += std::to_string(key.setting);
    out += ',';
    out += std::to_string(acc.count);
    out += ',';
    out += fmt_double(acc.rel_l2_sq / c);
    out += ',';
    out += fmt_double(acc.rel_l1 / c);
    out += ',';
    out += fmt_double(acc.sparsity / c);
    out += ',';
    out += fmt_double(acc.fpr / c);
    out += ',';
    out += fmt_double(acc.fnr / c);
    out += ',';
    out += fmt_double(acc.iterations / c);
    out += "\r\n";
  }
  return out;
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "qcs-lp") return Method::kQcsLp;
  if (name == "bpdn-inf") return Method::kBpdnInf;
  if (name == "bpdn-2") return Method::kBpdn2;
  if (name == "niht") return Method::kNiht;
  return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: key '" + key +
                             "' has a malformed integer value '" + value +
                             "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: key '" + key +
                             "' has a malformed numeric value '" + value +
                             "'");
  }
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is not of the form key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "n") {
      cfg.n = static_cast<int>(parse_long(key, value));
    } else if (key == "m") {
      cfg.m = static_cast<int>(parse_long(key, value));
    } else if (key == "k") {
      cfg.k = static_cast<int>(parse_long(key, value));
    } else if (key == "r") {
      cfg.r = parse_double(key, value);
    } else if (key == "levels") {
      cfg.levels_list.clear();
      for (const std::string& item : split_list(value)) {
        cfg.levels_list.push_back(static_cast<int>(parse_long(key, item)));
      }
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_long(key, value));
    } else if (key == "seed") {
      cfg.base_seed = static_cast<std::uint64_t>(parse_long(key, value));
    } else if (key == "methods") {
      cfg.methods.clear();
      for (const std::string& item : split_list(value)) {
        const auto method = method_from_name(item);
        if (!method) {
          throw std::runtime_error("config: unknown method '" + item + "'");
        }
        cfg.methods.push_back(*method);
      }
    } else if (key == "setting") {
      if (value == "1") {
        cfg.bpdn_setting = SweepConfig::SettingChoice::kSetting1;
      } else if (value == "2") {
        cfg.bpdn_setting = SweepConfig::SettingChoice::kSetting2;
      } else if (value == "both") {
        cfg.bpdn_setting = SweepConfig::SettingChoice::kBoth;
      } else {
        throw std::runtime_error(
            "config: key 'setting' must be one of 1, 2, both");
      }
    } else if (key == "zero_tol") {
      cfg.zero_tol = parse_double(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_long(key, value));
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

}  // namespace qcslp
