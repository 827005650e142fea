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

#include "qcap/protocols.hpp"

#include <numbers>

#include "qcap/sampling.hpp"

namespace qcap {

namespace {

constexpr double kExactTol = 1e-10;

DensityMatrix bell_pair() { return DensityMatrix::pure(gates::bell_phi_plus(), Dims{2, 2}); }

DenseCodingResult dense_coding_with_pair(int message, const DensityMatrix& pair,
                                         const QuantumChannel& forward) {
  if (message < 0 || message > 3) throw std::invalid_argument("dense coding message must be 0..3");
  if (forward.dim_in() != 2 || forward.dim_out() != 2)
    throw DimensionError("dense coding needs a qubit forward channel");
  const Matrix encode = tensor(dense_coding_encoder(message), gates::identity(2));
  const DensityMatrix encoded(encode * pair.matrix() * encode.adjoint(), Dims{2, 2});
  const DensityMatrix received = apply_extended(forward, encoded, 0);

  DenseCodingResult result;
  for (int k = 0; k < 4; ++k) {
    const Vector beta = bell_state(k);
    result.outcome_probs[k] = (beta.adjoint() * received.matrix() * beta)(0).real();
  }
  result.decoded = static_cast<int>(
      std::max_element(result.outcome_probs.begin(), result.outcome_probs.end()) -
      result.outcome_probs.begin());
  return result;
}

// Teleports the last factor of `state` using `pair` (sender half first).
std::vector<TeleportationBranch> teleport_with_pair(const DensityMatrix& state,
                                                    const DensityMatrix& pair) {
  const Dims& dims = state.dims();
  if (dims.back() != 2) throw DimensionError("teleportation: last factor must be a qubit");
  if (pair.dim() != 4) throw DimensionError("teleportation: resource must be a two-qubit state");
  const Index rest = state.dim() / 2;

  // Factor order [rest, C, A, B]; Bell measurement on (C, A).
  const Matrix joint = tensor(state.matrix(), pair.matrix());
  std::vector<TeleportationBranch> branches;
  for (int k = 0; k < 4; ++k) {
    const Matrix bra = tensor(tensor(gates::identity(rest), Matrix(bell_state(k).adjoint())),
                              gates::identity(2));
    Matrix conditional = bra * joint * bra.adjoint();
    const double prob = conditional.trace().real();
    conditional /= prob;
    const Matrix fix = tensor(gates::identity(rest), dense_coding_encoder(k));
    branches.push_back(
        {k, prob, DensityMatrix(fix * conditional * fix.adjoint(), dims)});
  }
  return branches;
}

// I(M:K) for uniform messages, in bits.
double message_information(const std::array<std::array<double, 4>, 4>& joint_given) {
  std::array<double, 4> marginal{};
  double h_cond = 0.0;
  for (const auto& row : joint_given)
    for (int k = 0; k < 4; ++k) {
      marginal[k] += row[k] / 4.0;
      if (row[k] > 0.0) h_cond -= row[k] * std::log2(row[k]) / 4.0;
    }
  double h = 0.0;
  for (double p : marginal)
    if (p > 0.0) h -= p * std::log2(p);
  return h - h_cond;
}

double forward_bits_per_qubit(const DensityMatrix& pair) {
  const QuantumChannel noiseless = make_channel(ChannelKind::identity);
  std::array<std::array<double, 4>, 4> table{};
  for (int m = 0; m < 4; ++m) table[m] = dense_coding_with_pair(m, pair, noiseless).outcome_probs;
  return message_information(table);
}

ProtocolReport teleport_report(std::string name, const DensityMatrix& input,
                               const DensityMatrix& pair, std::vector<DensityMatrix>* outputs) {
  ProtocolReport report{.protocol = std::move(name), .fidelity_min = 1.0};
  int successes = 0;
  for (const auto& branch : teleport_with_pair(input, pair)) {
    const double f = fidelity(input, branch.output);
    report.fidelity_min = std::min(report.fidelity_min, f);
    if (f >= 1.0 - kExactTol && std::abs(branch.probability - 0.25) <= kExactTol) ++successes;
    ++report.trials;
    if (outputs) outputs->push_back(branch.output);
  }
  report.success_rate = static_cast<double>(successes) / report.trials;
  return report;
}

}  // namespace

Matrix dense_coding_encoder(int message) {
  switch (message) {
    case 0: return gates::identity(2);
    case 1: return gates::pauli_x();
    case 2: return gates::pauli_z();
    case 3: return gates::pauli_x() * gates::pauli_z();
    default: throw std::invalid_argument("dense coding message must be 0..3");
  }
}

Vector bell_state(int message) {
  return tensor(dense_coding_encoder(message), gates::identity(2)) * gates::bell_phi_plus();
}

DenseCodingResult dense_coding(int message) {
  return dense_coding(message, make_channel(ChannelKind::identity));
}

DenseCodingResult dense_coding(int message, const QuantumChannel& forward) {
  return dense_coding_with_pair(message, bell_pair(), forward);
}

std::vector<TeleportationBranch> teleport_last_qubit(const DensityMatrix& state) {
  return teleport_with_pair(state, bell_pair());
}

std::vector<TeleportationBranch> teleportation(const DensityMatrix& qubit) {
  if (qubit.dim() != 2) throw DimensionError("teleportation: input must be a single qubit");
  return teleport_with_pair(qubit.with_dims({2}), bell_pair());
}

ProtocolReport dense_coding_demo() {
  ProtocolReport report{.protocol = "dense-coding", .fidelity_min = 1.0};
  int successes = 0;
  for (int m = 0; m < 4; ++m) {
    const DenseCodingResult r = dense_coding(m);
    const double p = r.outcome_probs[m];
    report.fidelity_min = std::min(report.fidelity_min, p);
    if (r.decoded == m && p >= 1.0 - kExactTol) ++successes;
    ++report.trials;
    report.qubits_used += 1;
    report.cbits_used += 2;
    report.ebits_used += 1;
  }
  report.success_rate = static_cast<double>(successes) / report.trials;
  return report;
}

ProtocolReport teleportation_demo(std::uint64_t seed, int n_states) {
  if (n_states < 1) throw std::invalid_argument("teleportation_demo: n_states must be >= 1");
  SeededRng rng(seed, "teleportation");
  ProtocolReport total{.protocol = "teleportation", .fidelity_min = 1.0};
  double successes = 0.0;
  for (int s = 0; s < n_states; ++s) {
    const ProtocolReport one = teleport_report("teleportation", random_density(rng, 2),
                                               bell_pair(), nullptr);
    total.trials += one.trials;
    successes += one.success_rate * one.trials;
    total.fidelity_min = std::min(total.fidelity_min, one.fidelity_min);
    total.cbits_used += 2;
    total.ebits_used += 1;
  }
  total.success_rate = successes / total.trials;
  return total;
}

FeedbackEquivalenceReport feedback_equivalence_demo() {
  const QuantumChannel noiseless = make_channel(ChannelKind::identity);

  // State the receiver returns to the sender.
  Vector psi(2);
  psi << std::cos(std::numbers::pi / 8), std::polar(std::sin(std::numbers::pi / 8), 0.6);
  const DensityMatrix payload(0.8 * DensityMatrix::pure(psi).matrix() +
                              0.2 * DensityMatrix::maximally_mixed(2).matrix());

  // A: the receiver prepares |Φ+⟩ and ships one half over the feedback qubit.
  const DensityMatrix distributed = apply_extended(noiseless, bell_pair(), 0);
  std::vector<DensityMatrix> out_a, out_b;
  ProtocolReport a = teleport_report("quantum-feedback", payload, distributed, &out_a);
  a.qubits_used = 1;
  a.ebits_used = 1;
  a.cbits_used = 2;

  // B: the ebit was shared in advance.
  ProtocolReport b = teleport_report("classical-feedback+ebit", payload, bell_pair(), &out_b);
  b.qubits_used = 0;
  b.ebits_used = 1;
  b.cbits_used = 2;

  FeedbackEquivalenceReport report{.quantum_feedback = a, .classical_feedback = b};
  for (std::size_t k = 0; k < out_a.size(); ++k)
    report.final_state_difference =
        std::max(report.final_state_difference,
                 (out_a[k].matrix() - out_b[k].matrix()).cwiseAbs().maxCoeff());
  report.forward_bits_per_qubit_quantum = forward_bits_per_qubit(distributed);
  report.forward_bits_per_qubit_classical = forward_bits_per_qubit(bell_pair());
  return report;
}

}  // namespace qcap
