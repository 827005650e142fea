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

#include "qcap/channels.hpp"

#include <numbers>
#include <sstream>

namespace qcap {

namespace {

// Kraus operators read off the eigenvectors of the unnormalized Choi matrix.
std::vector<Matrix> minimal_kraus(const std::vector<Matrix>& kraus, Index dim_in, Index dim_out) {
  const Index n = dim_in * dim_out;
  Matrix choi = Matrix::Zero(n, n);
  for (const Matrix& k : kraus) {
    Vector v(n);
    for (Index i = 0; i < dim_in; ++i) v.segment(i * dim_out, dim_out) = k.col(i);
    choi += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver((choi + choi.adjoint()) / 2.0);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Matrix> out;
  for (Index e = n - 1; e >= 0; --e) {
    const double lambda = solver.eigenvalues()(e);
    if (lambda <= 1e-14 * scale) continue;
    Matrix k(dim_out, dim_in);
    for (Index i = 0; i < dim_in; ++i)
      k.col(i) = std::sqrt(lambda) * solver.eigenvectors().col(e).segment(i * dim_out, dim_out);
    out.push_back(std::move(k));
  }
  return out;
}

std::string format_param(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + format_param(x));
}

}  // namespace

double completeness_residual(const std::vector<Matrix>& kraus, Index dim_in) {
  Matrix sum = Matrix::Zero(dim_in, dim_in);
  for (const Matrix& k : kraus) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(dim_in, dim_in)).norm();
}

QuantumChannel validate(std::vector<Matrix> kraus, Index dim_in, Index dim_out, std::string name) {
  if (dim_in < 1 || dim_out < 1) throw DimensionError("validate: dimensions must be positive");
  if (kraus.empty()) throw DimensionError("validate: at least one Kraus operator is required");
  for (std::size_t i = 0; i < kraus.size(); ++i)
    if (kraus[i].rows() != dim_out || kraus[i].cols() != dim_in)
      throw DimensionError("validate: Kraus operator " + std::to_string(i) + " has shape " +
                           std::to_string(kraus[i].rows()) + "x" + std::to_string(kraus[i].cols()) +
                           ", expected " + std::to_string(dim_out) + "x" + std::to_string(dim_in));
  const double residual = completeness_residual(kraus, dim_in);
  if (!(residual <= kCompletenessTol))
    throw ChannelError("validate: completeness violated, ||sum K^dag K - I||_F = " +
                           std::to_string(residual),
                       residual);
  if (static_cast<Index>(kraus.size()) > dim_in * dim_out)
    kraus = minimal_kraus(kraus, dim_in, dim_out);

  QuantumChannel ch;
  ch.dim_in_ = dim_in;
  ch.dim_out_ = dim_out;
  ch.kraus_ = std::move(kraus);
  ch.name_ = std::move(name);
  return ch;
}

Matrix apply(const QuantumChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in())
    throw DimensionError("apply: input dimension " + std::to_string(rho.rows()) +
                         " does not match channel input " + std::to_string(ch.dim_in()));
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const Matrix& k : ch.kraus()) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(qcap::apply(ch, rho.matrix()));
}

Matrix apply_adjoint(const QuantumChannel& ch, const Matrix& x) {
  if (x.rows() != ch.dim_out() || x.cols() != ch.dim_out())
    throw DimensionError("apply_adjoint: operator dimension does not match channel output");
  Matrix out = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const Matrix& k : ch.kraus()) out.noalias() += k.adjoint() * x * k;
  return out;
}

DensityMatrix apply_extended(const QuantumChannel& ch, const DensityMatrix& rho, int acted) {
  const Dims& dims = rho.dims();
  if (acted < 0 || acted >= static_cast<int>(dims.size()))
    throw DimensionError("apply_extended: subsystem index out of range");
  if (dims[acted] != ch.dim_in())
    throw DimensionError("apply_extended: factor dimension " + std::to_string(dims[acted]) +
                         " does not match channel input " + std::to_string(ch.dim_in()));
  Index left = 1, right = 1;
  for (int s = 0; s < acted; ++s) left *= dims[s];
  for (int s = acted + 1; s < static_cast<int>(dims.size()); ++s) right *= dims[s];
  const Matrix id_left = Matrix::Identity(left, left);
  const Matrix id_right = Matrix::Identity(right, right);

  const Index out_dim = left * ch.dim_out() * right;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (const Matrix& k : ch.kraus()) {
    const Matrix lifted = tensor(tensor(id_left, k), id_right);
    out.noalias() += lifted * rho.matrix() * lifted.adjoint();
  }
  Dims out_dims = dims;
  out_dims[acted] = ch.dim_out();
  return DensityMatrix(out, std::move(out_dims));
}

Isometry stinespring(const QuantumChannel& ch) {
  const Index env = static_cast<Index>(ch.kraus().size());
  Isometry v;
  v.dim_env = env;
  v.matrix = Matrix::Zero(ch.dim_out() * env, ch.dim_in());
  for (Index e = 0; e < env; ++e)
    for (Index o = 0; o < ch.dim_out(); ++o) v.matrix.row(o * env + e) = ch.kraus()[e].row(o);
  return v;
}

QuantumChannel complementary(const QuantumChannel& ch) {
  const Index env = static_cast<Index>(ch.kraus().size());
  std::vector<Matrix> kraus;
  kraus.reserve(ch.dim_out());
  for (Index o = 0; o < ch.dim_out(); ++o) {
    Matrix e(env, ch.dim_in());
    for (Index k = 0; k < env; ++k) e.row(k) = ch.kraus()[k].row(o);
    kraus.push_back(std::move(e));
  }
  return validate(std::move(kraus), ch.dim_in(), env, "complementary(" + ch.name() + ")");
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<Matrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const Matrix& ka : a.kraus())
    for (const Matrix& kb : b.kraus()) kraus.push_back(tensor(ka, kb));
  return validate(std::move(kraus), a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(),
                  a.name() + " x " + b.name());
}

QuantumChannel precompose(const QuantumChannel& ch, const Matrix& unitary) {
  if (unitary.rows() != ch.dim_in() || unitary.cols() != ch.dim_in())
    throw DimensionError("precompose: unitary dimension does not match channel input");
  std::vector<Matrix> kraus;
  for (const Matrix& k : ch.kraus()) kraus.push_back(k * unitary);
  return validate(std::move(kraus), ch.dim_in(), ch.dim_out(), ch.name() + " o U");
}

Matrix choi_state(const QuantumChannel& ch) {
  const Index d = ch.dim_in();
  Vector omega = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const DensityMatrix max_ent = DensityMatrix::pure(omega, Dims{d, d});
  return apply_extended(ch, max_ent, 1).matrix();
}

bool is_entanglement_breaking(const QuantumChannel& ch) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2)
    throw DimensionError(
        "is_entanglement_breaking: the partial-transpose criterion is only exact for qubit "
        "channels");
  const Matrix pt = partial_transpose(choi_state(ch), Dims{2, 2}, 1);
  Eigen::SelfAdjointEigenSolver<Matrix> solver((pt + pt.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0) >= -1e-9;
}

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::identity: return "identity";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::dephasing: return "dephasing";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::erasure: return "erasure";
    case ChannelKind::constant: return "constant";
  }
  return "unknown";
}

std::optional<ChannelKind> channel_kind_from_string(const std::string& name) {
  for (ChannelKind k : {ChannelKind::identity, ChannelKind::depolarizing, ChannelKind::dephasing,
                        ChannelKind::amplitude_damping, ChannelKind::erasure,
                        ChannelKind::constant})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

QuantumChannel make_channel(ChannelKind kind, const ChannelParams& params) {
  const Index d = params.dim;
  if (d < 2) throw DimensionError("make_channel: dimension must be at least 2");
  const double p = params.strength;
  const Matrix id = Matrix::Identity(d, d);
  std::vector<Matrix> kraus;
  std::string name = to_string(kind);
  Index dim_out = d;

  switch (kind) {
    case ChannelKind::identity:
      kraus.push_back(id);
      break;

    case ChannelKind::depolarizing: {
      check_unit_interval(p, "depolarizing p");
      name += "(p=" + format_param(p) + ")";
      if (d == 2) {
        kraus.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * id);
        kraus.push_back(std::sqrt(p / 4.0) * gates::pauli_x());
        kraus.push_back(std::sqrt(p / 4.0) * gates::pauli_y());
        kraus.push_back(std::sqrt(p / 4.0) * gates::pauli_z());
        break;
      }
      // Weyl operators X^a Z^b form a unitary 1-design.
      const double dd = static_cast<double>(d * d);
      Matrix shift = Matrix::Zero(d, d), clock = Matrix::Zero(d, d);
      for (Index j = 0; j < d; ++j) {
        shift((j + 1) % d, j) = 1.0;
        clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                          static_cast<double>(d));
      }
      Matrix xa = id;
      for (Index a = 0; a < d; ++a) {
        Matrix zb = id;
        for (Index b = 0; b < d; ++b) {
          const double w = (a == 0 && b == 0) ? 1.0 - p + p / dd : p / dd;
          kraus.push_back(std::sqrt(w) * xa * zb);
          zb = zb * clock;
        }
        xa = xa * shift;
      }
      break;
    }

    case ChannelKind::dephasing:
      check_unit_interval(p, "dephasing p");
      name += "(p=" + format_param(p) + ")";
      if (d == 2) {
        kraus.push_back(std::sqrt(1.0 - p / 2.0) * id);
        kraus.push_back(std::sqrt(p / 2.0) * gates::pauli_z());
      } else {
        kraus.push_back(std::sqrt(1.0 - p) * id);
        for (Index k = 0; k < d; ++k) {
          Matrix proj = Matrix::Zero(d, d);
          proj(k, k) = std::sqrt(p);
          kraus.push_back(std::move(proj));
        }
      }
      break;

    case ChannelKind::amplitude_damping: {
      check_unit_interval(p, "amplitude_damping gamma");
      if (d != 2) throw DimensionError("amplitude_damping is defined for qubits only");
      name += "(gamma=" + format_param(p) + ")";
      Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
      k0(0, 0) = 1.0;
      k0(1, 1) = std::sqrt(1.0 - p);
      k1(0, 1) = std::sqrt(p);
      kraus = {k0, k1};
      break;
    }

    case ChannelKind::erasure: {
      check_unit_interval(p, "erasure p");
      name += "(p=" + format_param(p) + ")";
      dim_out = d + 1;
      Matrix embed = Matrix::Zero(d + 1, d);
      embed.topRows(d) = id;
      kraus.push_back(std::sqrt(1.0 - p) * embed);
      for (Index j = 0; j < d; ++j) {
        Matrix flag = Matrix::Zero(d + 1, d);
        flag(d, j) = std::sqrt(p);
        kraus.push_back(std::move(flag));
      }
      break;
    }

    case ChannelKind::constant: {
      const Matrix sigma_m =
          params.state ? *params.state : Matrix(DensityMatrix::basis(d, 0).matrix());
      const DensityMatrix sigma(sigma_m);
      dim_out = sigma.dim();
      const auto eig = eigh(sigma.matrix());
      for (Index s = 0; s < dim_out; ++s) {
        const double w = eig.values(s);
        if (w <= 1e-15) continue;
        for (Index j = 0; j < d; ++j) {
          Matrix k = Matrix::Zero(dim_out, d);
          k.col(j) = std::sqrt(w) * eig.vectors.col(s);
          kraus.push_back(std::move(k));
        }
      }
      break;
    }
  }
  return validate(std::move(kraus), d, dim_out, std::move(name));
}

std::vector<NamedChannel> zoo() {
  auto mk = [](ChannelKind kind, double strength) {
    ChannelParams params;
    params.strength = strength;
    return make_channel(kind, params);
  };
  return {
      {"identity", mk(ChannelKind::identity, 0.0)},
      {"dephasing_0.3", mk(ChannelKind::dephasing, 0.3)},
      {"dephasing_1.0", mk(ChannelKind::dephasing, 1.0)},
      {"depolarizing_0.5", mk(ChannelKind::depolarizing, 0.5)},
      {"depolarizing_0.9", mk(ChannelKind::depolarizing, 0.9)},
      {"amplitude_damping_0.5", mk(ChannelKind::amplitude_damping, 0.5)},
      {"constant", mk(ChannelKind::constant, 0.0)},
      {"erasure_0.5", mk(ChannelKind::erasure, 0.5)},
  };
}

}  // namespace qcap
