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

#include "qcap/sampling.hpp"

#include <numbers>

namespace qcap {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream + 1))) {}

SeededRng::SeededRng(std::uint64_t seed, std::string_view stream_label)
    : SeededRng(seed, fnv1a64(stream_label)) {}

SeededRng SeededRng::derive(std::uint64_t substream) const {
  return SeededRng(seed_, splitmix64(stream_) ^ splitmix64(substream + 0x51ed27ULL));
}

double SeededRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeededRng::normal() {
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Matrix random_ginibre(SeededRng& rng, Index rows, Index cols) {
  Matrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) g(r, c) = rng.complex_normal();
  return g;
}

DensityMatrix random_density(SeededRng& rng, Index dim) {
  if (dim < 1) throw DimensionError("random_density: dimension must be positive");
  const Matrix g = random_ginibre(rng, dim, dim);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

Vector random_pure_state(SeededRng& rng, Index dim) {
  if (dim < 1) throw DimensionError("random_pure_state: dimension must be positive");
  Vector v = random_ginibre(rng, dim, 1);
  return v / v.norm();
}

Matrix random_isometry(SeededRng& rng, Index rows, Index cols) {
  if (rows < cols || cols < 1) throw DimensionError("random_isometry: need rows >= cols >= 1");
  const Matrix g = random_ginibre(rng, rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  Matrix out = q;
  for (Index c = 0; c < cols; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) out.col(c) *= diag / mag;
  }
  return out;
}

Matrix random_unitary(SeededRng& rng, Index dim) { return random_isometry(rng, dim, dim); }

std::vector<double> random_simplex(SeededRng& rng, std::size_t n) {
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

QuantumChannel random_channel(SeededRng& rng, Index dim_in, Index dim_out, Index env_dim) {
  if (env_dim < 1) throw DimensionError("random_channel: environment dimension must be positive");
  if (dim_out * env_dim < dim_in)
    throw DimensionError("random_channel: dim_out * env_dim must be at least dim_in");
  const Matrix v = random_isometry(rng, dim_out * env_dim, dim_in);
  std::vector<Matrix> kraus;
  for (Index e = 0; e < env_dim; ++e) {
    Matrix k(dim_out, dim_in);
    for (Index o = 0; o < dim_out; ++o) k.row(o) = v.row(o * env_dim + e);
    kraus.push_back(std::move(k));
  }
  return validate(std::move(kraus), dim_in, dim_out, "random");
}

DensityMatrix random_separable_tripartite(SeededRng& rng, Index d_r, Index d_q, Index d_r2,
                                          std::size_t terms) {
  if (terms < 1) throw std::invalid_argument("random_separable_tripartite: terms must be >= 1");
  const std::vector<double> p = random_simplex(rng, terms);
  const Index n = d_r * d_q * d_r2;
  Matrix rho = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < terms; ++i) {
    const DensityMatrix sigma = random_density(rng, d_r);
    const DensityMatrix tau = random_density(rng, d_q * d_r2);
    rho += p[i] * tensor(sigma.matrix(), tau.matrix());
  }
  return DensityMatrix(rho, Dims{d_r, d_q, d_r2});
}

}  // namespace qcap
