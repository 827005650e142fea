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
#include <random>
#include <string_view>

#include "qcap/channels.hpp"
#include "qcap/core.hpp"

namespace qcap {

/// Reproducible random source keyed by (seed, stream).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Its 64-bit seed is splitmix64(seed ⊕ splitmix64(stream + 1)), so
/// distinct streams of one seed are decorrelated. Uniform doubles take the top
/// 53 bits of each draw; normals use Box-Muller. Standard-library
/// distributions are deliberately not used because their algorithms are
/// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);
  SeededRng(std::uint64_t seed, std::string_view stream_label);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Independent generator for a sub-stream of this one.
  SeededRng derive(std::uint64_t substream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// Real and imaginary parts each N(0, 1/2).
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// 64-bit FNV-1a; also used for stream labels and spec hashes.
std::uint64_t fnv1a64(std::string_view bytes);

Matrix random_ginibre(SeededRng& rng, Index rows, Index cols);

/// Hilbert-Schmidt distributed: G G† / Tr(G G†).
DensityMatrix random_density(SeededRng& rng, Index dim);

/// Haar-random unit vector.
Vector random_pure_state(SeededRng& rng, Index dim);

/// Haar-random isometry (rows ≥ cols) from QR of a Gaussian matrix with the
/// phases of R's diagonal absorbed.
Matrix random_isometry(SeededRng& rng, Index rows, Index cols);

Matrix random_unitary(SeededRng& rng, Index dim);

/// Flat Dirichlet draw of length n.
std::vector<double> random_simplex(SeededRng& rng, std::size_t n);

/// Channel whose Stinespring isometry (dim_out·env_dim × dim_in) is Haar
/// random. Requires dim_out·env_dim ≥ dim_in.
QuantumChannel random_channel(SeededRng& rng, Index dim_in, Index dim_out, Index env_dim);

/// Σᵢ pᵢ σᵢ^R ⊗ τᵢ^{QR′}, p flat Dirichlet, σ and τ Hilbert-Schmidt. Dims are
/// [d_r, d_q, d_r2]; separable across R : QR′ by construction.
DensityMatrix random_separable_tripartite(SeededRng& rng, Index d_r, Index d_q, Index d_r2,
                                          std::size_t terms);

}  // namespace qcap
