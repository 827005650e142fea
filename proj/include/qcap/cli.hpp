// Copyright 2026 The qcap Authors
//
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcap::cli {

enum ExitCode : int {
  kOk = 0,
  kBadSpec = 1,
  kBoundViolation = 2,
  kNotConverged = 3,
};

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  std::string channel_path;
  double tol = 1e-6;
  int max_iter = 5000;
  int restarts = 5;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::json;
  long long conditioner_dim = 2;
  long long ensemble_size = 0;  // 0 = dim_in²
  bool parallel = false;
  std::string demo;
};

/// Rounds to 12 significant digits; all numbers in reports pass through this.
double round_sig12(double x);

/// Entry point behind the `qcap` executable. `args` excludes the program
/// name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcap::cli
