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

#include "qcslp/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace qcslp {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::runtime_error(std::string("instance: missing field '") + key +
                             "'");
  }
  return *it;
}

long require_integer(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer()) {
    throw std::runtime_error(std::string("instance: field '") + key +
                             "' must be an integer");
  }
  return v.get<long>();
}

double require_number(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number()) {
    throw std::runtime_error(std::string("instance: field '") + key +
                             "' must be a number");
  }
  return v.get<double>();
}

std::vector<double> require_array(const json& j, const char* key,
                                  std::size_t expected) {
  const json& v = require_field(j, key);
  if (!v.is_array() || v.size() != expected) {
    std::ostringstream msg;
    msg << "instance: field '" << key << "' must be an array of " << expected
        << " numbers";
    throw std::runtime_error(msg.str());
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& e : v) {
    if (!e.is_number()) {
      throw std::runtime_error(std::string("instance: field '") + key +
                               "' must contain only numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<double> matrix_rowmajor(const Eigen::MatrixXd& M) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(M.size()));
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      out.push_back(M(i, j));
    }
  }
  return out;
}

Eigen::MatrixXd matrix_from_rowmajor(const std::vector<double>& v, int rows,
                                     int cols) {
  Eigen::MatrixXd M(rows, cols);
  std::size_t at = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      M(i, j) = v[at++];
    }
  }
  return M;
}

}  // namespace

std::string instance_to_json(const ProblemInstance& p) {
  json j;
  j["schema_version"] = 1;
  j["n"] = p.n;
  j["m"] = p.m;
  j["k"] = p.k;
  j["r"] = p.r;
  j["seed"] = p.seed;
  j["A"] = matrix_rowmajor(p.A);
  j["x_true"] = std::vector<double>(p.x_true.data(),
                                    p.x_true.data() + p.x_true.size());
  j["y"] = std::vector<double>(p.y.data(), p.y.data() + p.y.size());
  j["QA"] = matrix_rowmajor(p.QA);
  j["Qy"] = std::vector<double>(p.Qy.data(), p.Qy.data() + p.Qy.size());
  j["delta_A_bound"] = p.delta_A_bound;
  j["delta_y_bound"] = p.delta_y_bound;
  j["saturated_A"] = p.saturated_A;
  j["saturated_y"] = p.saturated_y;
  return j.dump();
}

ProblemInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance: invalid JSON: ") +
                             e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("instance: top-level JSON value must be an object");
  }
  const long version = require_integer(j, "schema_version");
  if (version != 1) {
    throw std::runtime_error(
        "instance: field 'schema_version' has unsupported value");
  }

  ProblemInstance p;
  p.n = static_cast<int>(require_integer(j, "n"));
  p.m = static_cast<int>(require_integer(j, "m"));
  p.k = static_cast<int>(require_integer(j, "k"));
  if (p.n < 1 || p.m < 1) {
    throw std::runtime_error("instance: fields 'n'/'m' must be positive");
  }
  if (p.k < 0 || p.k > p.n) {
    throw std::runtime_error("instance: field 'k' must satisfy 0 <= k <= n");
  }
  p.r = require_number(j, "r");
  {
    const json& v = require_field(j, "seed");
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw std::runtime_error("instance: field 'seed' must be an integer");
    }
    p.seed = v.get<std::uint64_t>();
  }

  const std::size_t mn = static_cast<std::size_t>(p.m) * p.n;
  p.A = matrix_from_rowmajor(require_array(j, "A", mn), p.m, p.n);
  p.QA = matrix_from_rowmajor(require_array(j, "QA", mn), p.m, p.n);
  {
    const auto x = require_array(j, "x_true", static_cast<std::size_t>(p.n));
    p.x_true = Eigen::Map<const Eigen::VectorXd>(x.data(), p.n);
  }
  {
    const auto y = require_array(j, "y", static_cast<std::size_t>(p.m));
    p.y = Eigen::Map<const Eigen::VectorXd>(y.data(), p.m);
  }
  {
    const auto qy = require_array(j, "Qy", static_cast<std::size_t>(p.m));
    p.Qy = Eigen::Map<const Eigen::VectorXd>(qy.data(), p.m);
  }
  p.delta_A_bound = require_number(j, "delta_A_bound");
  p.delta_y_bound = require_number(j, "delta_y_bound");
  if (p.delta_A_bound < 0.0 || p.delta_y_bound < 0.0) {
    throw std::runtime_error(
        "instance: fields 'delta_A_bound'/'delta_y_bound' must be >= 0");
  }
  p.saturated_A = require_integer(j, "saturated_A");
  p.saturated_y = require_integer(j, "saturated_y");
  return p;
}

void save_instance(const ProblemInstance& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("instance: cannot open '" + path +
                             "' for writing");
  }
  out << instance_to_json(p) << '\n';
  if (!out) {
    throw std::runtime_error("instance: write to '" + path + "' failed");
  }
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("instance: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

}  // namespace qcslp
