/*
 * Copyright 2026 The dihull authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>

#include "dihull/io.hpp"

namespace dihull {

inline constexpr const char* kVersion = "dihull 1.0.0";

// One CLI run: which operation, on which instance, with which knobs. The
// original JSON is echoed into the report so runs are self-describing.
struct ExperimentConfig {
  std::string command;
  std::string sub;  // ops scalar|oplus|wlift, check takahashi|pair, search counterexample
  std::string instance_path;
  json params = json::object();
  std::uint64_t seed = 0;
  std::string mode = "exact";  // exact | float
  double tol = 1e-9;
  std::string output;
  std::string csv_output;
  // Wall time is volatile; it is only included on request so that equal
  // configs produce byte-identical reports.
  bool timing = false;

  json echo() const;

  static ExperimentConfig from_json(const json& j);
};

struct RunResult {
  json report;
  bool all_pass = true;
  std::string csv;  // distance tables, when the command produces one
};

// Dispatches to the module operations; deterministic given (config, seed).
RunResult run(const ExperimentConfig& cfg);

// Executes `run`, writes report/CSV files when paths are configured, and maps
// the outcome to the process exit code: 0 all verdicts pass, 1 any invariant
// failure, 2 input error.
int run_to_exit_code(ExperimentConfig cfg, std::string* rendered = nullptr);

}  // namespace dihull
