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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qcap/channels.hpp"

namespace qcap {

/// Malformed channel-spec document (as opposed to a well-formed spec whose
/// Kraus set is not trace preserving, which raises ChannelError).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Channel spec JSON, one of
//
//   {"kind": "depolarizing", "dim": 2, "params": {"p": 0.5}}
//   {"dim_in": 2, "dim_out": 2, "kraus": [[[1,0],[0,0],[0,0],[1,0]]]}
//
// Kraus matrices are flat row-major arrays of [re, im] pairs. Parameter keys:
// "p" (depolarizing, dephasing, erasure), "gamma" (amplitude_damping),
// optional "state" (constant; flat row-major [re, im] array). "dim" defaults to 2.

QuantumChannel parse_channel_spec(const nlohmann::json& spec);

/// Reads and parses a spec file. Throws SpecError on I/O or parse failure.
QuantumChannel load_channel_spec(const std::filesystem::path& path);

/// Explicit-Kraus spec for `ch`; parse_channel_spec reproduces the Kraus set.
nlohmann::json channel_to_spec(const QuantumChannel& ch);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& flat, Index rows, Index cols);

}  // namespace qcap
