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

#include "qcap/core.hpp"

#include <numeric>

namespace qcap {

namespace {

Index product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix& m) : DensityMatrix(m, Dims{m.rows()}) {}

DensityMatrix::DensityMatrix(const Matrix& m, Dims dims) : dims_(std::move(dims)) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError("density matrix must be square and non-empty");
  if (product(dims_) != m.rows())
    throw DimensionError("subsystem dims do not multiply to the matrix dimension");
  const double herm = hermiticity_residual(m);
  if (!(herm <= kHermitianTol))
    throw InvalidStateError("density matrix is not Hermitian (residual " + std::to_string(herm) +
                            ")");
  const double tr_err = std::abs(m.trace() - Complex(1.0));
  if (!(tr_err <= kTraceTol))
    throw InvalidStateError("density matrix trace differs from 1 by " + std::to_string(tr_err));
  matrix_ = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  if (min_eig < -kNegativeEigenvalueTol)
    throw InvalidStateError("density matrix has eigenvalue " + std::to_string(min_eig));
}

DensityMatrix DensityMatrix::pure(const Vector& psi, Dims dims) {
  if (dims.empty()) dims = {psi.size()};
  const double norm = psi.norm();
  if (norm == 0.0) throw InvalidStateError("cannot build a pure state from the zero vector");
  const Vector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint(), std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::basis(Index d, Index i) { return pure(ket(d, i)); }

DensityMatrix DensityMatrix::with_dims(Dims dims) const {
  if (product(dims) != dim()) throw DimensionError("with_dims: dimension product mismatch");
  DensityMatrix out = *this;
  out.dims_ = std::move(dims);
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(tensor(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Matrix reduced = partial_trace(rho.matrix(), rho.dims(), sorted);
  Dims dims;
  for (int k : sorted) dims.push_back(rho.dims()[k]);
  if (dims.empty()) dims = {1};
  return DensityMatrix(reduced, std::move(dims));
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

Vector purification_vector(const DensityMatrix& rho) {
  const Index d = rho.dim();
  const auto eig = eigh(rho.matrix());
  Vector psi = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) {
    const double weight = std::sqrt(std::max(eig.values(i), 0.0));
    if (weight == 0.0) continue;
    psi.segment(i * d, d) = weight * eig.vectors.col(i);
  }
  return psi;
}

DensityMatrix purify(const DensityMatrix& rho) {
  const Index d = rho.dim();
  return DensityMatrix::pure(purification_vector(rho), Dims{d, d});
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
  const Matrix sqrt_rho = hermitian_function(rho.matrix(), [](double x) {
    return std::sqrt(std::max(x, 0.0));
  });
  const Matrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Matrix> solver((inner + inner.adjoint()) / 2.0,
                                               Eigen::EigenvaluesOnly);
  double root_sum = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i)
    root_sum += std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
  return std::min(root_sum * root_sum, 1.0);
}

Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem) {
  const int n = static_cast<int>(dims.size());
  if (subsystem < 0 || subsystem >= n)
    throw DimensionError("partial_transpose: subsystem index out of range");
  if (product(dims) != m.rows() || m.rows() != m.cols())
    throw DimensionError("partial_transpose: dims do not match matrix");
  Index inner = 1;
  for (int s = subsystem + 1; s < n; ++s) inner *= dims[s];
  const Index d = dims[subsystem];
  auto digit = [&](Index idx) { return (idx / inner) % d; };
  Matrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      const Index dr = digit(r), dc = digit(c);
      const Index r2 = r + (dc - dr) * inner;
      const Index c2 = c + (dr - dc) * inner;
      out(r, c) = m(r2, c2);
    }
  return out;
}

Vector ket(Index d, Index i) {
  if (i < 0 || i >= d) throw DimensionError("ket: basis index out of range");
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

namespace gates {

Matrix identity(Index d) { return Matrix::Identity(d, d); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::sqrt(2.0);
}

Vector bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace gates

}  // namespace qcap
