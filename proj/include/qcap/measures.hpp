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

#include <vector>

#include "qcap/channels.hpp"
#include "qcap/core.hpp"

namespace qcap {

/// Probability-weighted list of states on a common space. Stands in for the
/// separable (classical-quantum) inputs of the unassisted capacity.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  std::size_t size() const { return probs_.size(); }
  Index dim() const { return states_.front().dim(); }

  /// Σ pᵢ ρᵢ
  Matrix average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

/// S(A:B) = S(ρ_A) + S(ρ_B) − S(ρ_AB) for a state with exactly two factors.
double mutual_information(const DensityMatrix& rho);

/// S(R:ΛQ) evaluated on the canonical purification of `rho_q`:
/// S(ρ) + S(Λρ) − S((I ⊗ Λ)|ψ_ρ⟩⟨ψ_ρ|).
double channel_mutual_information(const QuantumChannel& ch, const DensityMatrix& rho_q);

/// S(R:ΛQ|R′) for a state with factors [R, Q, R′], from the four entropies
/// S(ρ_RR′) + S((Λ ⊗ I)ρ_QR′) − S(ρ_R′) − S((I ⊗ Λ ⊗ I)ρ_RQR′).
double conditional_mutual_information(const DensityMatrix& rho, const QuantumChannel& ch);

/// χ = S(Λρ̄) − Σ pᵢ S(Λρᵢ).
double holevo_chi(const Ensemble& ens, const QuantumChannel& ch);

/// Σ pᵢ |i⟩⟨i| ⊗ Λ(ρᵢ), dims [size, dim_out].
DensityMatrix classical_quantum_state(const Ensemble& ens, const QuantumChannel& ch);

}  // namespace qcap
