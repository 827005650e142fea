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

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcap {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions, leftmost tensor factor first.
using Dims = std::vector<Index>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kNegativeEigenvalueTol = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kronecker product; `a` is the left (more significant) factor.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "tensor factors must share a scalar type");
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

template <typename Derived>
typename Derived::RealScalar hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<typename Derived::RealScalar>::infinity();
  if (m.size() == 0) return 0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Real>
struct EigenDecomposition {
  Eigen::Matrix<Real, Eigen::Dynamic, 1> values;  // descending
  ComplexMatrix<Real> vectors;                    // columns, matching `values`
};

/// Spectral decomposition of a Hermitian matrix, eigenvalues sorted in
/// descending order.
template <typename Derived>
EigenDecomposition<typename Derived::RealScalar> eigh(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  if (h.rows() != h.cols()) throw DimensionError("eigh: matrix is not square");
  const Real residual = hermiticity_residual(h);
  if (!(residual <= Real(kHermitianTol)))
    throw NotHermitianError("eigh: matrix is not Hermitian (residual " +
                            std::to_string(static_cast<double>(residual)) + ")");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(h.derived().template cast<std::complex<Real>>());
  EigenDecomposition<Real> out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// f(H) = V f(Λ) V† for Hermitian H. Skips the Hermiticity check; callers pass
/// matrices that are Hermitian by construction.
template <typename Derived, typename Fn>
ComplexMatrix<typename Derived::RealScalar> hermitian_function(const Eigen::MatrixBase<Derived>& h,
                                                               Fn&& fn) {
  using Real = typename Derived::RealScalar;
  const ComplexMatrix<Real> sym = (h + h.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(sym);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> mapped = solver.eigenvalues();
  for (Index i = 0; i < mapped.size(); ++i) mapped(i) = fn(mapped(i));
  return solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
}

/// Shannon entropy (bits) of a spectrum. Entries in [-1e-9, 0) are treated as
/// zero; anything more negative is an invalid state.
template <typename Derived>
typename Derived::Scalar spectrum_entropy(const Eigen::MatrixBase<Derived>& eigenvalues) {
  using Real = typename Derived::Scalar;
  Real s = 0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const Real lambda = eigenvalues(i);
    if (lambda < -Real(kNegativeEigenvalueTol))
      throw InvalidStateError("entropy: eigenvalue " + std::to_string(static_cast<double>(lambda)) +
                              " is below -1e-9");
    const Real p = std::clamp(lambda, Real(0), Real(1));
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

/// Von Neumann entropy -Tr ρ log₂ ρ of a Hermitian positive semidefinite
/// matrix. Trace normalization is the caller's responsibility.
template <typename Derived>
typename Derived::RealScalar von_neumann_entropy(const Eigen::MatrixBase<Derived>& rho) {
  using Real = typename Derived::RealScalar;
  if (rho.rows() != rho.cols()) throw DimensionError("entropy: matrix is not square");
  const ComplexMatrix<Real> sym = (rho + rho.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(sym, Eigen::EigenvaluesOnly);
  return spectrum_entropy(solver.eigenvalues());
}

/// Partial trace of a matrix on the tensor product space described by `dims`,
/// keeping the subsystems listed in `keep`. Kept factors appear in ascending
/// index order in the result.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                          const Dims& dims, std::vector<int> keep) {
  using Real = typename Derived::RealScalar;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int n = static_cast<int>(dims.size());
  Index total = 1;
  for (Index d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("partial_trace: matrix dimension does not match subsystem dims");
  for (int k : keep)
    if (k < 0 || k >= n)
      throw DimensionError("partial_trace: subsystem index " + std::to_string(k) + " out of range");

  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  std::vector<Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  Index kept_dim = 1, traced_dim = 1;
  for (int s = 0; s < n; ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];

  // Full-space offset of each kept / traced multi-index, enumerated in
  // row-major order over the respective factors.
  auto offsets = [&](bool want_kept, Index count) {
    std::vector<Index> out(count, 0);
    for (Index idx = 0; idx < count; ++idx) {
      Index rem = idx, off = 0;
      for (int s = n - 1; s >= 0; --s) {
        if (kept[s] != want_kept) continue;
        off += (rem % dims[s]) * stride[s];
        rem /= dims[s];
      }
      out[idx] = off;
    }
    return out;
  };
  const std::vector<Index> kept_off = offsets(true, kept_dim);
  const std::vector<Index> traced_off = offsets(false, traced_dim);

  ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(kept_dim, kept_dim);
  for (Index r = 0; r < kept_dim; ++r)
    for (Index c = 0; c < kept_dim; ++c) {
      std::complex<Real> acc(0);
      for (Index t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

/// Trace-one, positive semidefinite, Hermitian operator tagged with the
/// dimensions of its tensor factors. Construction validates; the stored matrix
/// is exactly Hermitian.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);
  DensityMatrix(const Matrix& m, Dims dims);

  static DensityMatrix pure(const Vector& psi, Dims dims = {});
  static DensityMatrix maximally_mixed(Index d);
  static DensityMatrix basis(Index d, Index i);

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return matrix_.rows(); }

  /// Same matrix, new factorization. The product of `dims` must not change.
  DensityMatrix with_dims(Dims dims) const;

 private:
  Matrix matrix_;
  Dims dims_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

double von_neumann_entropy(const DensityMatrix& rho);

/// Canonical purification Σᵢ √λᵢ |i⟩_R |vᵢ⟩ with the reference first; dims
/// are [d, d].
DensityMatrix purify(const DensityMatrix& rho);

/// State vector of the canonical purification, index = r·d + q.
Vector purification_vector(const DensityMatrix& rho);

/// Uhlmann fidelity (Tr √(√ρ σ √ρ))².
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Partial transpose on one tensor factor.
Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem);

Vector ket(Index d, Index i);

namespace gates {
Matrix identity(Index d);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
/// (|00⟩ + |11⟩)/√2
Vector bell_phi_plus();
}  // namespace gates

}  // namespace qcap
