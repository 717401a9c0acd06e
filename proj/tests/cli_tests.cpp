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

// End-to-end checks of the qcs binary: every invocation goes through the
// shell, stdout must parse as one JSON object, diagnostics live on stderr.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "qcslp_cli_tests";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const auto out_path = temp_dir() / "stdout.txt";
  const auto err_path = temp_dir() / "stderr.txt";
  const std::string cmd = std::string(QCS_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int raw = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

std::string instance_path() {
  static const std::string path = [] {
    const auto p = temp_dir() / "instance.json";
    const RunResult res = run_cli(
        "gen --n 40 --m 16 --k 4 --r 10 --levels 500 --seed 7 --out " +
        p.string());
    REQUIRE(res.exit_code == 0);
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("gen writes an instance and a json summary") {
  const auto out = temp_dir() / "gen.json";
  const RunResult res = run_cli(
      "gen --n 100 --m 40 --k 10 --r 10 --levels 1000 --seed 7 --out " +
      out.string());
  REQUIRE(res.exit_code == 0);
  const json summary = json::parse(res.out);
  CHECK(summary.at("n") == 100);
  CHECK(summary.at("seed") == 7);
  CHECK(std::filesystem::exists(out));

  const json inst = json::parse(slurp(out));
  CHECK(inst.at("schema_version") == 1);
  CHECK(inst.at("A").size() == 4000);
}

TEST_CASE("solve emits metrics json and exit 0") {
  for (const std::string method : {"qcs-lp", "bpdn-inf", "bpdn-2", "niht"}) {
    const RunResult res =
        run_cli("solve --in " + instance_path() + " --method " + method);
    INFO(method << ": " << res.err);
    REQUIRE(res.exit_code == 0);
    const json metrics = json::parse(res.out);
    CHECK(metrics.at("method") == method);
    CHECK(metrics.at("status") == "ok");
    CHECK(metrics.at("rel_l2_sq").is_number());
    CHECK(metrics.at("fnr").is_number());
  }
}

TEST_CASE("solve respects the setting flag") {
  const RunResult s2 = run_cli("solve --in " + instance_path() +
                               " --method bpdn-inf --setting 2");
  REQUIRE(s2.exit_code == 0);
  CHECK(json::parse(s2.out).at("setting") == 2);
}

TEST_CASE("bogus method is a usage error") {
  const RunResult res =
      run_cli("solve --in " + instance_path() + " --method bogus");
  CHECK(res.exit_code == 1);
  CHECK(res.out.empty());  // diagnostics stay on stderr
  CHECK(res.err.find("bogus") != std::string::npos);
}

TEST_CASE("missing and malformed instance files") {
  const RunResult missing = run_cli("solve --in /nonexistent.json");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const auto bad = temp_dir() / "bad.json";
  std::ofstream(bad) << "{\"schema_version\": 1, \"n\": 4}";
  const RunResult malformed = run_cli("solve --in " + bad.string());
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.err.find("'m'") != std::string::npos);  // names the field
}

TEST_CASE("analyze reports a finite radius in the scaled regime") {
  const auto inst = temp_dir() / "scaled.json";
  const RunResult gen = run_cli(
      "gen --n 60 --m 30 --k 2 --r 10 --levels 4000 --column-norm 0.5 "
      "--seed 3 --out " +
      inst.string());
  REQUIRE(gen.exit_code == 0);

  const RunResult res = run_cli("analyze --in " + inst.string());
  REQUIRE(res.exit_code == 0);
  const json rep = json::parse(res.out);
  CHECK(rep.at("hypothesis_gap_ok") == true);
  REQUIRE(rep.at("T").is_number());
  CHECK(rep.at("T").get<double>() > 0.0);

  // Paper-scale gaussian columns do not meet the hypotheses: T is null.
  const RunResult coarse = run_cli("analyze --in " + instance_path());
  REQUIRE(coarse.exit_code == 0);
  CHECK(json::parse(coarse.out).at("T").is_null());
}

TEST_CASE("sweep writes deterministic csv files") {
  const auto dir1 = temp_dir() / "sweep1";
  const auto dir2 = temp_dir() / "sweep2";
  const std::string flags =
      " --n 24 --m 10 --k 3 --levels 100,500 --trials 2 --seed 11"
      " --methods qcs-lp,niht --out-dir ";

  const RunResult a = run_cli("sweep" + flags + dir1.string());
  INFO(a.err);
  REQUIRE(a.exit_code == 0);
  const json summary = json::parse(a.out);
  CHECK(summary.at("rows") == 8);
  CHECK(summary.at("failures") == 0);

  const RunResult b =
      run_cli("sweep" + flags + dir2.string() + " --threads 2");
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(dir1 / "sweep_raw.csv") == slurp(dir2 / "sweep_raw.csv"));
  CHECK(slurp(dir1 / "sweep_agg.csv") == slurp(dir2 / "sweep_agg.csv"));
  CHECK(!slurp(dir1 / "sweep_raw.csv").empty());
}

TEST_CASE("sweep config file plus cli override") {
  const auto cfg = temp_dir() / "sweep.cfg";
  std::ofstream(cfg) << "n = 24\nm = 10\nk = 3\nlevels = 100\n"
                     << "trials = 2\nmethods = qcs-lp\nseed = 4\n";
  const auto dir = temp_dir() / "sweep3";
  const RunResult res = run_cli("sweep --config " + cfg.string() +
                                " --trials 3 --out-dir " + dir.string());
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.out).at("rows") == 3);  // override wins over file
}

TEST_CASE("missing subcommand is a usage error") {
  const RunResult res = run_cli("");
  CHECK(res.exit_code == 1);
  CHECK(res.out.empty());
}
