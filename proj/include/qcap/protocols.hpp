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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcap/channels.hpp"
#include "qcap/core.hpp"

namespace qcap {

// Exact density-matrix simulations; every measurement branch is enumerated,
// nothing is sampled.

struct ProtocolReport {
  std::string protocol;
  int trials = 0;
  double success_rate = 0.0;
  double fidelity_min = 0.0;
  int qubits_used = 0;
  int cbits_used = 0;
  int ebits_used = 0;
};

/// Sender's encoding unitary for a two-bit message: {I, X, Z, XZ}[message].
Matrix dense_coding_encoder(int message);

/// (U_m ⊗ I)|Φ+⟩, the four orthonormal Bell states indexed by message.
Vector bell_state(int message);

struct DenseCodingResult {
  int decoded = 0;
  /// Probability of each Bell-basis outcome at the receiver.
  std::array<double, 4> outcome_probs{};
};

/// Encodes `message` (0..3) on Alice's half of a shared |Φ+⟩, sends that half
/// through `forward` (noiseless by default), and measures both halves in the
/// Bell basis. The decoded value is the most likely outcome.
DenseCodingResult dense_coding(int message);
DenseCodingResult dense_coding(int message, const QuantumChannel& forward);

struct TeleportationBranch {
  int outcome = 0;  // Bell-measurement result, same labelling as bell_state
  double probability = 0.0;
  DensityMatrix output;
};

/// Teleports the last qubit factor of `state` through a shared |Φ+⟩. Each
/// branch holds the corrected state with the receiver's qubit in place of the
/// teleported one (dims unchanged).
std::vector<TeleportationBranch> teleport_last_qubit(const DensityMatrix& state);

/// Single-qubit teleportation; four branches.
std::vector<TeleportationBranch> teleportation(const DensityMatrix& qubit);

/// All four messages over a noiseless qubit. trials = 4; fidelity_min is the
/// smallest probability assigned to the correct Bell outcome.
ProtocolReport dense_coding_demo();

/// Teleports `n_states` Hilbert-Schmidt random qubits (seeded); trials counts
/// measurement branches, fidelity_min is over all of them.
ProtocolReport teleportation_demo(std::uint64_t seed, int n_states);

struct FeedbackEquivalenceReport {
  /// Quantum feedback used once to distribute an ebit, then teleportation
  /// backward with two feedback cbits.
  ProtocolReport quantum_feedback;
  /// Prior ebit plus two feedback cbits.
  ProtocolReport classical_feedback;
  /// max entry-wise difference between the two scenarios' final states.
  double final_state_difference = 0.0;
  /// Classical bits carried per forward qubit by dense coding over the shared
  /// ebit, per scenario.
  double forward_bits_per_qubit_quantum = 0.0;
  double forward_bits_per_qubit_classical = 0.0;
};

/// Shows that one noiseless quantum feedback use and (1 ebit + classical
/// feedback) deliver the same resources and the same final state.
FeedbackEquivalenceReport feedback_equivalence_demo();

}  // namespace qcap
