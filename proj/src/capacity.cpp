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

#include "qcap/capacity.hpp"

#include <future>
#include <numbers>

#include "qcap/sampling.hpp"

namespace qcap {

namespace {

constexpr double kLogFloor = 1e-12;
constexpr int kStableIterations = 5;
constexpr int kMaxBacktracks = 60;

Matrix log2_regularized(const Matrix& m) {
  return hermitian_function(m, [](double x) { return std::log2(std::max(x, kLogFloor)); });
}

// exp(Y) / Tr exp(Y), shifted by the top eigenvalue against overflow.
Matrix normalized_exp(const Matrix& y) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((y + y.adjoint()) / 2.0);
  const RealVector& lambda = solver.eigenvalues();
  const double top = lambda.maxCoeff();
  RealVector w = (lambda.array() - top).exp().matrix();
  w /= w.sum();
  const Matrix rho = solver.eigenvectors() * w.asDiagonal() * solver.eigenvectors().adjoint();
  return (rho + rho.adjoint()) / 2.0;
}

bool is_stable(double before, double after, double tol) {
  return std::abs(after - before) < tol * std::max(1.0, std::abs(after));
}

// Channel paired with its complement so each objective call reuses both.
struct CeProblem {
  explicit CeProblem(const QuantumChannel& c) : ch(c), comp(complementary(c)) {}

  double value(const Matrix& rho) const {
    return von_neumann_entropy(rho) + von_neumann_entropy(qcap::apply(ch, rho)) -
           von_neumann_entropy(qcap::apply(comp, rho));
  }

  Matrix gradient(const Matrix& rho) const {
    const Index d = ch.dim_in();
    Matrix g = -log2_regularized(rho) - apply_adjoint(ch, log2_regularized(qcap::apply(ch, rho))) +
               apply_adjoint(comp, log2_regularized(qcap::apply(comp, rho)));
    g -= Matrix::Identity(d, d) / std::numbers::ln2;
    return (g + g.adjoint()) / 2.0;
  }

  const QuantumChannel& ch;
  QuantumChannel comp;
};

struct RestartResult {
  double value = 0.0;
  Matrix argmax;
  std::optional<Ensemble> ensemble;
  int iterations = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
};

RestartResult ce_restart(const CeProblem& problem, const CapacityOptions& opts, int restart) {
  SeededRng rng(opts.seed, static_cast<std::uint64_t>(restart));
  const Index d = problem.ch.dim_in();
  Matrix rho = random_density(rng, d).matrix();
  // Log-domain iterate: ρ = exp(Y)/Tr exp(Y).
  Matrix y = hermitian_function(rho, [](double x) { return std::log(std::max(x, kLogFloor)); });
  rho = normalized_exp(y);
  double f = problem.value(rho);

  RestartResult res;
  res.trace.push_back({restart, 0, f});
  int stable = 0;
  int it = 1;
  for (; it <= opts.max_iter; ++it) {
    // Natural-log units, so η = 1 is the Blahut-Arimoto fixed-point map.
    const Matrix step = problem.gradient(rho) * std::numbers::ln2;
    double eta = 1.0;
    double f_next = f;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, eta *= 0.5) {
      const Matrix y_try = y + eta * step;
      const Matrix rho_try = normalized_exp(y_try);
      const double f_try = problem.value(rho_try);
      if (f_try >= f) {
        y = y_try;
        rho = rho_try;
        f_next = f_try;
        break;
      }
    }
    stable = is_stable(f, f_next, opts.tol) ? stable + 1 : 0;
    f = f_next;
    res.trace.push_back({restart, it, f});
    if (stable >= kStableIterations) {
      res.converged = true;
      break;
    }
  }
  res.iterations = std::min(it, opts.max_iter);
  res.value = f;
  res.argmax = rho;
  return res;
}

template <typename Fn>
std::vector<RestartResult> run_restarts(const CapacityOptions& opts, Fn&& fn) {
  const int n = std::max(opts.restarts, 1);
  std::vector<RestartResult> results(n);
  if (opts.parallel) {
    std::vector<std::future<RestartResult>> futures;
    for (int r = 0; r < n; ++r) futures.push_back(std::async(std::launch::async, fn, r));
    for (int r = 0; r < n; ++r) results[r] = futures[r].get();
  } else {
    for (int r = 0; r < n; ++r) results[r] = fn(r);
  }
  return results;
}

int best_index(const std::vector<RestartResult>& results) {
  int best = 0;
  for (int r = 1; r < static_cast<int>(results.size()); ++r)
    if (results[r].value > results[best].value) best = r;
  return best;
}

void validate_options(const CapacityOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (opts.max_iter < 1 || opts.restarts < 1)
    throw std::invalid_argument("max_iter and restarts must be at least 1");
}

// ---- Holevo ensemble ascent ----

struct EnsembleState {
  std::vector<double> probs;
  std::vector<Vector> states;
};

struct HolevoProblem {
  const QuantumChannel& ch;

  std::vector<Matrix> outputs(const EnsembleState& e) const {
    std::vector<Matrix> out;
    out.reserve(e.states.size());
    for (const Vector& psi : e.states) out.push_back(qcap::apply(ch, Matrix(psi * psi.adjoint())));
    return out;
  }

  static Matrix average(const EnsembleState& e, const std::vector<Matrix>& outs) {
    Matrix avg = Matrix::Zero(outs.front().rows(), outs.front().cols());
    for (std::size_t i = 0; i < outs.size(); ++i) avg += e.probs[i] * outs[i];
    return avg;
  }

  double value(const EnsembleState& e) const {
    const auto outs = outputs(e);
    double chi = von_neumann_entropy(average(e, outs));
    for (std::size_t i = 0; i < outs.size(); ++i)
      if (e.probs[i] > 0.0) chi -= e.probs[i] * von_neumann_entropy(outs[i]);
    return chi;
  }

  // p_i ← p_i exp(D(Λψ_i ‖ Λρ̄)) / Z, relative entropy in nats.
  EnsembleState reweight(const EnsembleState& e) const {
    const auto outs = outputs(e);
    const Matrix log_avg = log2_regularized(average(e, outs));
    std::vector<double> log_w(e.probs.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (e.probs[i] <= 0.0) {
        log_w[i] = -std::numeric_limits<double>::infinity();
        continue;
      }
      const double rel_bits =
          -von_neumann_entropy(outs[i]) - (outs[i] * log_avg).trace().real();
      log_w[i] = std::log(e.probs[i]) + rel_bits * std::numbers::ln2;
      top = std::max(top, log_w[i]);
    }
    EnsembleState next = e;
    double total = 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      next.probs[i] = std::isfinite(log_w[i]) ? std::exp(log_w[i] - top) : 0.0;
      total += next.probs[i];
    }
    for (double& p : next.probs) p /= total;
    return next;
  }

  // Per-state ascent directions A_i ψ_i with A_i = Λ†(log₂Λψ_i − log₂Λρ̄),
  // projected onto the tangent space of the sphere.
  std::vector<Vector> directions(const EnsembleState& e) const {
    const auto outs = outputs(e);
    const Matrix log_avg = log2_regularized(average(e, outs));
    std::vector<Vector> dirs;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const Matrix a = apply_adjoint(ch, log2_regularized(outs[i]) - log_avg);
      const Vector& psi = e.states[i];
      Vector v = a * psi;
      v -= psi * (psi.adjoint() * v)(0);
      dirs.push_back(std::move(v));
    }
    return dirs;
  }
};

RestartResult holevo_restart(const HolevoProblem& problem, const HolevoOptions& opts, Index size,
                             int restart) {
  SeededRng rng(opts.seed, static_cast<std::uint64_t>(restart));
  const Index d = problem.ch.dim_in();
  EnsembleState e;
  e.probs.assign(size, 1.0 / static_cast<double>(size));
  for (Index i = 0; i < size; ++i) e.states.push_back(random_pure_state(rng, d));
  double f = problem.value(e);

  RestartResult res;
  res.trace.push_back({restart, 0, f});
  int stable = 0;
  int it = 1;
  for (; it <= opts.max_iter; ++it) {
    const double f_start = f;

    EnsembleState reweighted = problem.reweight(e);
    const double f_rw = problem.value(reweighted);
    if (f_rw >= f) {
      e = std::move(reweighted);
      f = f_rw;
    }

    const auto dirs = problem.directions(e);
    double eta = 1.0;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, eta *= 0.5) {
      EnsembleState trial = e;
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        trial.states[i] += eta * dirs[i];
        trial.states[i].normalize();
      }
      const double f_try = problem.value(trial);
      if (f_try >= f) {
        e = std::move(trial);
        f = f_try;
        break;
      }
    }

    stable = is_stable(f_start, f, opts.tol) ? stable + 1 : 0;
    res.trace.push_back({restart, it, f});
    if (stable >= kStableIterations) {
      res.converged = true;
      break;
    }
  }
  res.iterations = std::min(it, opts.max_iter);
  res.value = f;
  std::vector<DensityMatrix> states;
  for (const Vector& psi : e.states) states.push_back(DensityMatrix::pure(psi));
  res.ensemble.emplace(e.probs, std::move(states));
  return res;
}

OptimizerReport assemble(std::vector<RestartResult> results, const CapacityOptions& opts,
                         bool ensemble) {
  const int best = best_index(results);
  RestartResult& winner = results[best];
  std::vector<TracePoint> trace;
  for (const RestartResult& r : results) trace.insert(trace.end(), r.trace.begin(), r.trace.end());
  auto argmax = ensemble ? std::variant<DensityMatrix, Ensemble>(*winner.ensemble)
                         : std::variant<DensityMatrix, Ensemble>(DensityMatrix(winner.argmax));
  return OptimizerReport{.value = winner.value,
                         .argmax = std::move(argmax),
                         .iterations = winner.iterations,
                         .trace = std::move(trace),
                         .converged = winner.converged,
                         .restarts_used = static_cast<int>(results.size()),
                         .best_restart = best,
                         .seed = opts.seed};
}

}  // namespace

double ce_objective(const QuantumChannel& ch, const Matrix& rho) { return CeProblem(ch).value(rho); }

Matrix ce_gradient(const QuantumChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in())
    throw DimensionError("ce_gradient: state dimension does not match channel input");
  return CeProblem(ch).gradient(rho);
}

OptimizerReport compute_ce(const QuantumChannel& ch, const CapacityOptions& opts) {
  validate_options(opts);
  const CeProblem problem(ch);
  auto results =
      run_restarts(opts, [&](int restart) { return ce_restart(problem, opts, restart); });
  return assemble(std::move(results), opts, false);
}

OptimizerReport compute_holevo(const QuantumChannel& ch, const HolevoOptions& opts) {
  validate_options(opts);
  const Index size = opts.ensemble_size.value_or(ch.dim_in() * ch.dim_in());
  if (size < 1) throw std::invalid_argument("ensemble_size must be at least 1");
  const HolevoProblem problem{ch};
  auto results = run_restarts(
      opts, [&](int restart) { return holevo_restart(problem, opts, size, restart); });
  return assemble(std::move(results), opts, true);
}

BoundCheckReport check_cqfb_bound(const QuantumChannel& ch, std::size_t n_samples,
                                  Index conditioner_dim, std::uint64_t seed,
                                  const CapacityOptions& opts, std::size_t mixture_terms) {
  if (n_samples < 1) throw std::invalid_argument("check_cqfb_bound: n_samples must be >= 1");
  if (conditioner_dim < 1)
    throw std::invalid_argument("check_cqfb_bound: conditioner_dim must be >= 1");
  CapacityOptions ce_opts = opts;
  ce_opts.seed = seed;
  OptimizerReport ce = compute_ce(ch, ce_opts);
  if (!ce.converged)
    throw ConvergenceError("check_cqfb_bound: capacity reference did not converge", std::move(ce));

  BoundCheckReport report;
  report.samples = n_samples;
  report.ce_reference = ce.value;
  report.seed = seed;
  report.conditioner_dim = conditioner_dim;
  report.mixture_terms = mixture_terms;
  report.max_conditional_qmi = -std::numeric_limits<double>::infinity();
  report.worst_margin = -std::numeric_limits<double>::infinity();

  const SeededRng base(seed, "cqfb-bound");
  const Index d = ch.dim_in();
  for (std::size_t s = 0; s < n_samples; ++s) {
    SeededRng rng = base.derive(s);
    const DensityMatrix rho = random_separable_tripartite(rng, d, d, conditioner_dim, mixture_terms);
    const double cmi = conditional_mutual_information(rho, ch);
    report.max_conditional_qmi = std::max(report.max_conditional_qmi, cmi);
    report.worst_margin = std::max(report.worst_margin, cmi - ce.value);
    if (cmi > ce.value + kBoundViolationMargin) ++report.violations;
  }
  return report;
}

AdditivityReport check_additivity(const QuantumChannel& ch, const CapacityOptions& opts) {
  if (ch.dim_in() > 3)
    throw DimensionError("check_additivity: dim_in must be at most 3 (two copies act on " +
                         std::to_string(ch.dim_in() * ch.dim_in()) + " dimensions)");
  const OptimizerReport single = compute_ce(ch, opts);
  const OptimizerReport twice = compute_ce(tensor(ch, ch), opts);
  return AdditivityReport{.ce_single = single.value,
                          .ce_double = twice.value,
                          .gap = std::abs(twice.value - 2.0 * single.value),
                          .converged = single.converged && twice.converged};
}

}  // namespace qcap
