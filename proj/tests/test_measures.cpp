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


#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qcap/measures.hpp"
#include "qcap/sampling.hpp"

using namespace qcap;
using Catch::Matchers::WithinAbs;

namespace {

QuantumChannel kind(ChannelKind k, double strength = 0.0) {
  ChannelParams p;
  p.strength = strength;
  return make_channel(k, p);
}

DensityMatrix bell() { return DensityMatrix::pure(gates::bell_phi_plus(), {2, 2}); }

}  // namespace

TEST_CASE("mutual information") {
  CHECK_THAT(mutual_information(bell()), WithinAbs(2.0, 1e-12));
  SeededRng rng(21);
  CHECK_THAT(mutual_information(tensor(random_density(rng, 2), random_density(rng, 3))),
             WithinAbs(0.0, 1e-10));
  Matrix classical = Matrix::Zero(4, 4);
  classical(0, 0) = classical(3, 3) = 0.5;
  CHECK_THAT(mutual_information(DensityMatrix(classical, {2, 2})), WithinAbs(1.0, 1e-12));
  CHECK_THROWS_AS(mutual_information(DensityMatrix::maximally_mixed(4)), DimensionError);
}

TEST_CASE("channel mutual information") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK_THAT(channel_mutual_information(kind(ChannelKind::identity), mixed), WithinAbs(2.0, 1e-12));
  CHECK_THAT(channel_mutual_information(kind(ChannelKind::constant), mixed), WithinAbs(0.0, 1e-12));

  SECTION("amplitude damping closed form on diagonal inputs") {
    for (double gamma : {0.1, 0.5, 0.8})
      for (double q : {0.2, 0.5, 0.7}) {
        Matrix diag = Matrix::Zero(2, 2);
        diag(0, 0) = q;
        diag(1, 1) = 1.0 - q;
        ChannelParams p;
        p.strength = gamma;
        const double got = channel_mutual_information(
            make_channel(ChannelKind::amplitude_damping, p), DensityMatrix(diag));
        CHECK_THAT(got, WithinAbs(oracle::amplitude_damping_diag_information(gamma, q), 1e-10));
      }
    // γ = 1/2, q = 1/2: 1 + h(3/4) − h(1/4) = 1.
    CHECK_THAT(channel_mutual_information(kind(ChannelKind::amplitude_damping, 0.5), mixed),
               WithinAbs(1.0, 1e-10));
  }
  SECTION("agrees with a brute-force purification") {
    SeededRng rng(22);
    for (int i = 0; i < 10; ++i) {
      const QuantumChannel ch = random_channel(rng, 2, 3, 2);
      const DensityMatrix rho = random_density(rng, 2);
      // Purification built by hand: Σ √λ |i⟩|v_i⟩ from a general eigensolver.
      Eigen::ComplexEigenSolver<Matrix> es(rho.matrix());
      Vector psi = Vector::Zero(4);
      for (Index k = 0; k < 2; ++k) {
        const double lam = std::max(es.eigenvalues()(k).real(), 0.0);
        const Vector v = es.eigenvectors().col(k).normalized();
        for (Index q = 0; q < 2; ++q) psi(k * 2 + q) = std::sqrt(lam) * v(q);
      }
      const Matrix joint = psi * psi.adjoint();
      std::vector<Matrix> lifted;
      for (const Matrix& k : ch.kraus()) lifted.push_back(tensor(gates::identity(2), k));
      Matrix out = Matrix::Zero(6, 6);
      for (const Matrix& k : lifted) out += k * joint * k.adjoint();
      Matrix out_b = Matrix::Zero(3, 3);
      for (const Matrix& k : ch.kraus()) out_b += k * rho.matrix() * k.adjoint();
      const double expected =
          oracle::entropy(rho.matrix()) + oracle::entropy(out_b) - oracle::entropy(out);
      CHECK_THAT(channel_mutual_information(ch, rho), WithinAbs(expected, 1e-9));
    }
  }
  CHECK_THROWS_AS(channel_mutual_information(kind(ChannelKind::identity),
                                             DensityMatrix::maximally_mixed(3)),
                  DimensionError);
}

namespace {

double oracle_cmi(const DensityMatrix& rho, const QuantumChannel& ch, int dr, int dq, int dr2) {
  std::vector<Matrix> kraus = ch.kraus();
  const int dout = static_cast<int>(ch.dim_out());
  const Matrix out = oracle::apply_middle(kraus, rho.matrix(), dr, dq, dr2);
  // S(R R') + S(B R') − S(R') − S(R B R')
  return oracle::entropy(oracle::marginal3(out, dr, dout, dr2, 4 | 1)) +
         oracle::entropy(oracle::marginal3(out, dr, dout, dr2, 2 | 1)) -
         oracle::entropy(oracle::marginal3(out, dr, dout, dr2, 1)) - oracle::entropy(out);
}

}  // namespace

TEST_CASE("conditional mutual information") {
  SeededRng rng(23);
  SECTION("one-dimensional conditioner reduces to mutual information") {
    const DensityMatrix rq = random_density(rng, 4).with_dims({2, 2});
    const DensityMatrix rho = rq.with_dims({2, 2, 1});
    const QuantumChannel ch = kind(ChannelKind::depolarizing, 0.3);
    CHECK_THAT(conditional_mutual_information(rho, ch),
               WithinAbs(mutual_information(apply_extended(ch, rq, 1)), 1e-10));
  }
  SECTION("product conditioner") {
    const DensityMatrix rq = random_density(rng, 4).with_dims({2, 2});
    const DensityMatrix cond = random_density(rng, 3);
    const QuantumChannel ch = kind(ChannelKind::amplitude_damping, 0.4);
    CHECK_THAT(conditional_mutual_information(tensor(rq, cond), ch),
               WithinAbs(mutual_information(apply_extended(ch, rq, 1)), 1e-10));
  }
  SECTION("random separable states agree with the index-loop oracle") {
    for (int i = 0; i < 20; ++i) {
      const QuantumChannel ch = random_channel(rng, 2, 2, 2);
      const DensityMatrix rho = random_separable_tripartite(rng, 2, 2, 2, 4);
      CHECK_THAT(conditional_mutual_information(rho, ch), WithinAbs(oracle_cmi(rho, ch, 2, 2, 2), 1e-9));
    }
  }
  SECTION("strong subadditivity") {
    for (int i = 0; i < 50; ++i) {
      const QuantumChannel ch = random_channel(rng, 2, 2, 1 + i % 3);
      const DensityMatrix rho = random_density(rng, 8).with_dims({2, 2, 2});
      CHECK(conditional_mutual_information(rho, ch) >= -1e-7);
    }
  }
  CHECK_THROWS_AS(conditional_mutual_information(DensityMatrix::maximally_mixed(4).with_dims({2, 2}),
                                                 kind(ChannelKind::identity)),
                  DimensionError);
}

TEST_CASE("Holevo quantity") {
  const QuantumChannel id = kind(ChannelKind::identity);
  const Ensemble basis({0.5, 0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)});
  CHECK_THAT(holevo_chi(basis, id), WithinAbs(1.0, 1e-12));
  CHECK_THAT(holevo_chi(basis, kind(ChannelKind::constant)), WithinAbs(0.0, 1e-12));
  CHECK_THAT(holevo_chi(Ensemble({1.0}, {DensityMatrix::basis(2, 0)}), id), WithinAbs(0.0, 1e-12));
  // Full dephasing keeps the computational basis intact.
  CHECK_THAT(holevo_chi(basis, kind(ChannelKind::dephasing, 1.0)), WithinAbs(1.0, 1e-12));

  SECTION("equals the cq-state mutual information") {
    SeededRng rng(24);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 2 + i % 4;
      std::vector<DensityMatrix> states;
      for (std::size_t k = 0; k < n; ++k) states.push_back(random_density(rng, 2));
      const Ensemble ens(random_simplex(rng, n), states);
      const QuantumChannel ch = random_channel(rng, 2, 2, 2);
      CHECK_THAT(holevo_chi(ens, ch),
                 WithinAbs(mutual_information(classical_quantum_state(ens, ch)), 1e-9));
    }
  }
  SECTION("data processing and concavity") {
    SeededRng rng(25);
    for (int i = 0; i < 20; ++i) {
      const QuantumChannel a = random_channel(rng, 2, 2, 2);
      const QuantumChannel b = random_channel(rng, 2, 2, 2);
      std::vector<Matrix> composed;
      for (const Matrix& kb : b.kraus())
        for (const Matrix& ka : a.kraus()) composed.push_back(kb * ka);
      const QuantumChannel ba = validate(composed, 2, 2);
      const Ensemble ens(random_simplex(rng, 3),
                         {random_density(rng, 2), random_density(rng, 2), random_density(rng, 2)});
      CHECK(holevo_chi(ens, ba) <= holevo_chi(ens, a) + 1e-9);

      const DensityMatrix r1 = random_density(rng, 2), r2 = random_density(rng, 2);
      const double lam = rng.uniform();
      const DensityMatrix mix(lam * r1.matrix() + (1 - lam) * r2.matrix());
      CHECK(von_neumann_entropy(qcap::apply(a, mix.matrix())) >=
            lam * von_neumann_entropy(qcap::apply(a, r1.matrix())) +
                (1 - lam) * von_neumann_entropy(qcap::apply(a, r2.matrix())) - 1e-9);
    }
  }
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(Ensemble({0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}),
                  DimensionError);
  CHECK_THROWS_AS(Ensemble({0.7, 0.7}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Ensemble({0.5, 0.5}, {DensityMatrix::basis(2, 0), DensityMatrix::basis(3, 1)}),
                  DimensionError);
}
