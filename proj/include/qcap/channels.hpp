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

#include <optional>
#include <string>
#include <vector>

#include "qcap/core.hpp"

namespace qcap {

inline constexpr double kCompletenessTol = 1e-8;

/// Raised when a Kraus set fails Σ K†K = I. Carries the Frobenius residual.
class ChannelError : public std::invalid_argument {
 public:
  ChannelError(const std::string& what, double residual)
      : std::invalid_argument(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class QuantumChannel;

QuantumChannel validate(std::vector<Matrix> kraus, Index dim_in, Index dim_out,
                        std::string name = "custom");

/// A completely positive trace-preserving map in Kraus form,
/// Λ(ρ) = Σᵢ Kᵢ ρ Kᵢ†, each Kᵢ of shape dim_out × dim_in.
///
/// Instances only come out of validate(); the Kraus list is kept as given
/// unless it exceeds dim_in·dim_out operators, in which case it is replaced by
/// the minimal set read off the Choi matrix.
class QuantumChannel {
 public:
  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const std::string& name() const { return name_; }

  friend QuantumChannel validate(std::vector<Matrix> kraus, Index dim_in, Index dim_out,
                                 std::string name);

 private:
  QuantumChannel() = default;
  Index dim_in_ = 0;
  Index dim_out_ = 0;
  std::vector<Matrix> kraus_;
  std::string name_;
};

/// Frobenius norm of Σ K†K − I.
double completeness_residual(const std::vector<Matrix>& kraus, Index dim_in);

/// Isometry V : in → out ⊗ env with V = Σᵢ Kᵢ ⊗ |i⟩_E. Rows are indexed
/// out·dim_env + env.
struct Isometry {
  Matrix matrix;
  Index dim_env = 1;

  Index dim_in() const { return matrix.cols(); }
  Index dim_out() const { return matrix.rows() / dim_env; }
};

/// Λ(ρ) as a raw matrix; no validation of the result.
Matrix apply(const QuantumChannel& ch, const Matrix& rho);
DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho);

/// Adjoint map Λ†(X) = Σ K† X K.
Matrix apply_adjoint(const QuantumChannel& ch, const Matrix& x);

/// Applies `ch` to factor `acted` of `rho`, identity on the other factors.
DensityMatrix apply_extended(const QuantumChannel& ch, const DensityMatrix& rho, int acted);

Isometry stinespring(const QuantumChannel& ch);

/// Channel to the environment of the Stinespring dilation, Tr_out VρV†.
/// Output dimension equals the number of Kraus operators of `ch`.
QuantumChannel complementary(const QuantumChannel& ch);

/// Kraus products Kᵢ ⊗ Lⱼ; input factor order (a, b).
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

/// ρ ↦ Λ(UρU†).
QuantumChannel precompose(const QuantumChannel& ch, const Matrix& unitary);

/// Normalized Choi state (I ⊗ Λ)|Ω⟩⟨Ω| with |Ω⟩ = Σᵢ |ii⟩/√d; reference first.
Matrix choi_state(const QuantumChannel& ch);

/// Peres–Horodecki test on the Choi state of a qubit channel. Exact for
/// qubit → qubit maps only; other shapes raise DimensionError.
bool is_entanglement_breaking(const QuantumChannel& ch);

enum class ChannelKind { identity, depolarizing, dephasing, amplitude_damping, erasure, constant };

std::string to_string(ChannelKind kind);
std::optional<ChannelKind> channel_kind_from_string(const std::string& name);

struct ChannelParams {
  Index dim = 2;
  /// Noise strength: p for depolarizing/dephasing/erasure, γ for amplitude
  /// damping. Ignored by identity and constant.
  double strength = 0.0;
  /// Output state of the constant channel; |0⟩⟨0| when absent.
  std::optional<Matrix> state;
};

/// Standard channel families.
///
///   depolarizing  ρ ↦ (1−p)ρ + p I/d (Paulis for d = 2, Weyl operators otherwise)
///   dephasing     ρ ↦ (1−p)ρ + p diag(ρ)
///   amplitude_damping  qubit only, |1⟩ decays to |0⟩ with probability γ
///   erasure       ρ ↦ (1−p)ρ ⊕ p|e⟩⟨e|, flag |e⟩ is the last basis vector of d+1
///   constant      ρ ↦ σ
QuantumChannel make_channel(ChannelKind kind, const ChannelParams& params = {});

struct NamedChannel {
  std::string label;
  QuantumChannel channel;
};

/// Built-in fixtures: identity, dephasing 0.3/1.0, depolarizing 0.5/0.9,
/// amplitude damping 0.5, constant |0⟩⟨0|, erasure 0.5. All qubit input.
std::vector<NamedChannel> zoo();

}  // namespace qcap
