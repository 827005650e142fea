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

TEST_CASE("seeded streams are reproducible") {
  SeededRng a(42), b(42), c(43), d(42, 1);
  std::vector<std::uint64_t> xa, xb, xc, xd;
  for (int i = 0; i < 16; ++i) {
    xa.push_back(a.next_u64());
    xb.push_back(b.next_u64());
    xc.push_back(c.next_u64());
    xd.push_back(d.next_u64());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  CHECK(xa != xd);

  CHECK(SeededRng(7, "alpha").next_u64() == SeededRng(7, fnv1a64("alpha")).next_u64());
  CHECK(SeededRng(7).derive(3).next_u64() == SeededRng(7).derive(3).next_u64());
  CHECK(SeededRng(7).derive(3).next_u64() != SeededRng(7).derive(4).next_u64());

  SeededRng r1(5), r2(5);
  CHECK((random_density(r1, 3).matrix() - random_density(r2, 3).matrix()).norm() == 0.0);
}

TEST_CASE("hash and mixer reference values") {
  // FNV-1a 64 of "" and "a" are published constants.
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  // First output of splitmix64 seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("uniform and normal draws") {
  SeededRng rng(11);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  CHECK_THAT(sum / n, WithinAbs(0.0, 0.05));
  CHECK_THAT(sum_sq / n, WithinAbs(1.0, 0.05));
}

TEST_CASE("random states are valid") {
  SeededRng rng(12);
  for (Index d : {1, 2, 3, 5, 8}) {
    for (int i = 0; i < 10; ++i) {
      const DensityMatrix rho = random_density(rng, d);
      CHECK_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-12));
      CHECK(oracle::min_eigenvalue(rho.matrix()) >= -1e-12);
      CHECK_THAT(random_pure_state(rng, d).norm(), WithinAbs(1.0, 1e-12));
    }
  }
  CHECK(random_density(rng, 1).matrix()(0, 0) == Complex(1.0));
  CHECK_THROWS_AS(random_density(rng, 0), DimensionError);
}

TEST_CASE("random isometries and unitaries") {
  SeededRng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Matrix v = random_isometry(rng, 6, 3);
    CHECK((v.adjoint() * v - Matrix::Identity(3, 3)).norm() < 1e-12);
    const Matrix u = random_unitary(rng, 4);
    CHECK((u * u.adjoint() - Matrix::Identity(4, 4)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(random_isometry(rng, 2, 3), DimensionError);
}

TEST_CASE("random simplex") {
  SeededRng rng(14);
  for (std::size_t n : {1u, 2u, 7u}) {
    const auto p = random_simplex(rng, n);
    REQUIRE(p.size() == n);
    double total = 0.0;
    for (double x : p) {
      CHECK(x >= 0.0);
      total += x;
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("random channels are trace preserving") {
  SeededRng rng(15);
  for (int i = 0; i < 30; ++i) {
    const Index din = 1 + i % 3, dout = 1 + (i / 3) % 3, env = 1 + i % 4;
    if (dout * env < din) {
      CHECK_THROWS_AS(random_channel(rng, din, dout, env), DimensionError);
      continue;
    }
    const QuantumChannel ch = random_channel(rng, din, dout, env);
    CHECK(completeness_residual(ch.kraus(), din) < 1e-10);
    CHECK(ch.dim_in() == din);
    CHECK(ch.dim_out() == dout);
  }
}

TEST_CASE("random separable tripartite states") {
  SeededRng rng(16);
  SECTION("a single term is a product across R : QR'") {
    const DensityMatrix rho = random_separable_tripartite(rng, 2, 2, 3, 1);
    CHECK(rho.dims() == Dims{2, 2, 3});
    const DensityMatrix r = partial_trace(rho, {0});
    const DensityMatrix rest = partial_trace(rho, {1, 2});
    CHECK((rho.matrix() - tensor(r.matrix(), rest.matrix())).norm() < 1e-12);
  }
  SECTION("mutual information across R : QR' is bounded by log d_R") {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = random_separable_tripartite(rng, 2, 2, 2, 8);
      const double mi = mutual_information(rho.with_dims({2, 4}));
      CHECK(mi >= -1e-10);
      CHECK(mi <= 1.0 + 1e-10);
    }
  }
  CHECK_THROWS_AS(random_separable_tripartite(rng, 2, 2, 2, 0), std::invalid_argument);
}
