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

#ifndef QCSLP_INSTANCE_IO_HPP_
#define QCSLP_INSTANCE_IO_HPP_

#include <string>

#include "qcslp/problem.hpp"

namespace qcslp {

// JSON schema (schema_version 1): dims (n, m, k), r, seed, dense row-major
// arrays A, x_true, y, QA, Qy, the two delta bounds, and saturation counts.
// Doubles are emitted with round-trip precision, so save/load is exact.
std::string instance_to_json(const ProblemInstance& p);

// Throws std::runtime_error naming the offending field on malformed input.
ProblemInstance instance_from_json(const std::string& text);

void save_instance(const ProblemInstance& p, const std::string& path);
ProblemInstance load_instance(const std::string& path);

}  // namespace qcslp

#endif  // QCSLP_INSTANCE_IO_HPP_
