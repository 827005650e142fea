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
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qcap/channels.hpp"
#include "qcap/measures.hpp"

namespace qcap {

struct CapacityOptions {
  /// Convergence: |Δf| < tol·max(1, |f|) for 5 consecutive iterations.
  double tol = 1e-6;
  int max_iter = 5000;
  int restarts = 5;
  std::uint64_t seed = 0;
  /// Run restarts concurrently. Results are identical to serial execution.
  bool parallel = false;
};

struct HolevoOptions : CapacityOptions {
  /// Number of pure states in the ensemble; dim_in² when unset.
  std::optional<Index> ensemble_size;
};

struct TracePoint {
  int restart = 0;
  int iteration = 0;
  double value = 0.0;
};

struct OptimizerReport {
  double value = 0.0;  // bits
  std::variant<DensityMatrix, Ensemble> argmax;
  int iterations = 0;  // of the winning restart
  std::vector<TracePoint> trace;
  bool converged = false;
  int restarts_used = 0;
  int best_restart = 0;
  std::uint64_t seed = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, OptimizerReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const OptimizerReport& report() const { return report_; }

 private:
  OptimizerReport report_;
};

/// S(ρ) + S(Λρ) − S(Λ_c ρ) on a raw input matrix. Equal to
/// channel_mutual_information, computed through the complementary channel
/// instead of the purification.
double ce_objective(const QuantumChannel& ch, const Matrix& rho);

/// Gradient of ce_objective in bits:
///   −log₂ρ − Λ†(log₂Λρ) + Λ_c†(log₂Λ_cρ) − I/ln 2,
/// with eigenvalues floored at 1e-12 inside the logarithms.
Matrix ce_gradient(const QuantumChannel& ch, const Matrix& rho);

/// Entanglement-assisted classical capacity max_ρ S(R:ΛQ) by entropic mirror
/// ascent ρ ← exp(log ρ + η G)/Z with halving backtracking from η = 1. Best
/// of `restarts` Hilbert-Schmidt random starts. The objective is concave, so
/// the result is the global maximum up to tolerance.
OptimizerReport compute_ce(const QuantumChannel& ch, const CapacityOptions& opts = {});

/// Single-letter Holevo quantity maximized over ensembles of pure states.
/// Alternates a Blahut-Arimoto reweighting of the probabilities with a
/// backtracked gradient step on the states (renormalized onto the sphere).
/// The landscape is not concave: the value is a lower-bound witness, not a
/// certified maximum.
OptimizerReport compute_holevo(const QuantumChannel& ch, const HolevoOptions& opts = {});

struct BoundCheckReport {
  std::size_t samples = 0;
  double max_conditional_qmi = 0.0;
  double ce_reference = 0.0;
  std::size_t violations = 0;
  /// max over samples of (conditional QMI − ce_reference); negative means slack.
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  Index conditioner_dim = 0;
  std::size_t mixture_terms = 0;
};

inline constexpr double kBoundViolationMargin = 1e-6;

/// Samples states separable across R : QR′ (d_R = d_Q = dim_in) and compares
/// S(R:ΛQ|R′) with compute_ce. Throws ConvergenceError when the capacity
/// reference did not converge.
BoundCheckReport check_cqfb_bound(const QuantumChannel& ch, std::size_t n_samples,
                                  Index conditioner_dim = 2, std::uint64_t seed = 0,
                                  const CapacityOptions& opts = {}, std::size_t mixture_terms = 8);

struct AdditivityReport {
  double ce_single = 0.0;
  double ce_double = 0.0;
  double gap = 0.0;  // |ce_double − 2 ce_single|
  bool converged = false;
};

/// Compares C_E(Λ ⊗ Λ) with 2 C_E(Λ). dim_in must be at most 3.
AdditivityReport check_additivity(const QuantumChannel& ch, const CapacityOptions& opts = {});

}  // namespace qcap
