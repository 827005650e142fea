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

#include "qcap/measures.hpp"

#include <numeric>

namespace qcap {

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size())
    throw DimensionError("ensemble needs equally many (>= 1) probabilities and states");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("ensemble probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("ensemble probabilities must sum to 1");
  for (const DensityMatrix& s : states_)
    if (s.dim() != states_.front().dim())
      throw DimensionError("ensemble states must share a dimension");
}

Matrix Ensemble::average() const {
  Matrix avg = Matrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < size(); ++i) avg += probs_[i] * states_[i].matrix();
  return avg;
}

double mutual_information(const DensityMatrix& rho) {
  if (rho.dims().size() != 2)
    throw DimensionError("mutual_information: state must have exactly two subsystems");
  const double s_a = von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), {0}));
  const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), {1}));
  return s_a + s_b - von_neumann_entropy(rho.matrix());
}

double channel_mutual_information(const QuantumChannel& ch, const DensityMatrix& rho_q) {
  if (rho_q.dim() != ch.dim_in())
    throw DimensionError("channel_mutual_information: state dimension does not match channel");
  const DensityMatrix joint = apply_extended(ch, purify(rho_q), 1);
  return von_neumann_entropy(rho_q) + von_neumann_entropy(qcap::apply(ch, rho_q.matrix())) -
         von_neumann_entropy(joint);
}

double conditional_mutual_information(const DensityMatrix& rho, const QuantumChannel& ch) {
  const Dims& dims = rho.dims();
  if (dims.size() != 3)
    throw DimensionError("conditional_mutual_information: state must have factors [R, Q, R']");
  if (dims[1] != ch.dim_in())
    throw DimensionError("conditional_mutual_information: Q dimension does not match channel");

  const DensityMatrix rho_rr = partial_trace(rho, {0, 2});
  const DensityMatrix rho_r2 = partial_trace(rho, {2});
  const DensityMatrix rho_qr2 = partial_trace(rho, {1, 2});
  const DensityMatrix out_qr2 = apply_extended(ch, rho_qr2, 0);
  const DensityMatrix out_all = apply_extended(ch, rho, 1);

  return von_neumann_entropy(rho_rr) + von_neumann_entropy(out_qr2) - von_neumann_entropy(rho_r2) -
         von_neumann_entropy(out_all);
}

double holevo_chi(const Ensemble& ens, const QuantumChannel& ch) {
  if (ens.dim() != ch.dim_in())
    throw DimensionError("holevo_chi: ensemble dimension does not match channel input");
  double chi = von_neumann_entropy(qcap::apply(ch, ens.average()));
  for (std::size_t i = 0; i < ens.size(); ++i)
    if (ens.probs()[i] > 0.0)
      chi -= ens.probs()[i] * von_neumann_entropy(qcap::apply(ch, ens.states()[i].matrix()));
  return chi;
}

DensityMatrix classical_quantum_state(const Ensemble& ens, const QuantumChannel& ch) {
  if (ens.dim() != ch.dim_in())
    throw DimensionError("classical_quantum_state: ensemble dimension does not match channel");
  const Index n = static_cast<Index>(ens.size());
  const Index d = ch.dim_out();
  Matrix cq = Matrix::Zero(n * d, n * d);
  for (Index i = 0; i < n; ++i)
    cq.block(i * d, i * d, d, d) = ens.probs()[i] * qcap::apply(ch, ens.states()[i].matrix());
  return DensityMatrix(cq, Dims{n, d});
}

}  // namespace qcap
