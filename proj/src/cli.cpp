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

#include "qcap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcap/capacity.hpp"
#include "qcap/channel_spec.hpp"
#include "qcap/protocols.hpp"
#include "qcap/sampling.hpp"

namespace qcap::cli {

using Json = nlohmann::ordered_json;

double round_sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

Json num(double x) { return round_sig12(x); }

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      out.push_back(Json::array({num(m(r, c).real()), num(m(r, c).imag())}));
  return out;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct LoadedSpec {
  QuantumChannel channel;
  std::string hash;
};

LoadedSpec load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open channel spec " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("cannot parse " + path + ": " + e.what());
  }
  return {parse_channel_spec(spec), "fnv1a64:" + hex64(fnv1a64(bytes))};
}

Json channel_json(const QuantumChannel& ch) {
  return Json{{"name", ch.name()},
              {"dim_in", ch.dim_in()},
              {"dim_out", ch.dim_out()},
              {"kraus_count", ch.kraus().size()}};
}

Json header(const RunConfig& cfg, const LoadedSpec& spec) {
  return Json{{"command", cfg.command},
              {"spec", cfg.channel_path},
              {"spec_hash", spec.hash},
              {"seed", cfg.seed},
              {"tol", num(cfg.tol)},
              {"max_iter", cfg.max_iter},
              {"restarts", cfg.restarts},
              {"channel", channel_json(spec.channel)}};
}

CapacityOptions capacity_options(const RunConfig& cfg) {
  CapacityOptions opts;
  opts.tol = cfg.tol;
  opts.max_iter = cfg.max_iter;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  opts.parallel = cfg.parallel;
  return opts;
}

Json trace_json(const std::vector<TracePoint>& trace) {
  Json out = Json::array();
  for (const TracePoint& t : trace)
    out.push_back(Json{{"restart", t.restart}, {"iteration", t.iteration}, {"value", num(t.value)}});
  return out;
}

void write_trace_csv(const std::vector<TracePoint>& trace, std::ostream& out) {
  out << "restart,iteration,value\n";
  char buf[32];
  for (const TracePoint& t : trace) {
    std::snprintf(buf, sizeof buf, "%.12g", t.value);
    out << t.restart << ',' << t.iteration << ',' << buf << '\n';
  }
}

Json optimizer_json(const OptimizerReport& r) {
  Json j{{"value", num(r.value)},
         {"converged", r.converged},
         {"iterations", r.iterations},
         {"restarts_used", r.restarts_used},
         {"best_restart", r.best_restart}};
  if (const auto* rho = std::get_if<DensityMatrix>(&r.argmax)) {
    j["argmax"] = matrix_json(rho->matrix());
  } else {
    const Ensemble& ens = std::get<Ensemble>(r.argmax);
    Json probs = Json::array(), states = Json::array();
    for (std::size_t i = 0; i < ens.size(); ++i) {
      probs.push_back(num(ens.probs()[i]));
      states.push_back(matrix_json(ens.states()[i].matrix()));
    }
    j["argmax"] = Json{{"probs", probs}, {"states", states}};
  }
  j["trace"] = trace_json(r.trace);
  return j;
}

void emit(const Json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

int finish_optimizer(const RunConfig& cfg, const LoadedSpec& spec, const OptimizerReport& r,
                     std::ostream& out) {
  if (cfg.output_format == OutputFormat::csv) {
    write_trace_csv(r.trace, out);
  } else {
    Json doc = header(cfg, spec);
    doc.update(optimizer_json(r));
    emit(doc, out);
  }
  return r.converged ? kOk : kNotConverged;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const LoadedSpec spec = load(cfg.channel_path);
  const QuantumChannel& ch = spec.channel;
  Json doc{{"command", "validate"},
           {"spec", cfg.channel_path},
           {"spec_hash", spec.hash},
           {"valid", true},
           {"channel", channel_json(ch)},
           {"completeness_residual", num(completeness_residual(ch.kraus(), ch.dim_in()))}};
  if (ch.dim_in() == 2 && ch.dim_out() == 2)
    doc["entanglement_breaking"] = is_entanglement_breaking(ch);
  emit(doc, out);
  return kOk;
}

int cmd_ce(const RunConfig& cfg, std::ostream& out) {
  const LoadedSpec spec = load(cfg.channel_path);
  return finish_optimizer(cfg, spec, compute_ce(spec.channel, capacity_options(cfg)), out);
}

int cmd_holevo(const RunConfig& cfg, std::ostream& out) {
  const LoadedSpec spec = load(cfg.channel_path);
  HolevoOptions opts;
  static_cast<CapacityOptions&>(opts) = capacity_options(cfg);
  if (cfg.ensemble_size > 0) opts.ensemble_size = cfg.ensemble_size;
  return finish_optimizer(cfg, spec, compute_holevo(spec.channel, opts), out);
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const LoadedSpec spec = load(cfg.channel_path);
  Json doc = header(cfg, spec);
  doc["samples"] = cfg.samples;
  doc["conditioner_dim"] = cfg.conditioner_dim;
  try {
    const BoundCheckReport r = check_cqfb_bound(spec.channel, cfg.samples, cfg.conditioner_dim,
                                                cfg.seed, capacity_options(cfg));
    doc["mixture_terms"] = r.mixture_terms;
    doc["ce_reference"] = num(r.ce_reference);
    doc["max_conditional_qmi"] = num(r.max_conditional_qmi);
    doc["worst_margin"] = num(r.worst_margin);
    doc["margin"] = num(kBoundViolationMargin);
    doc["violations"] = r.violations;
    emit(doc, out);
    return r.violations == 0 ? kOk : kBoundViolation;
  } catch (const ConvergenceError& e) {
    doc["error"] = e.what();
    doc["ce"] = optimizer_json(e.report());
    emit(doc, out);
    return kNotConverged;
  }
}

int cmd_additivity(const RunConfig& cfg, std::ostream& out) {
  const LoadedSpec spec = load(cfg.channel_path);
  const AdditivityReport r = check_additivity(spec.channel, capacity_options(cfg));
  Json doc = header(cfg, spec);
  doc["ce_single"] = num(r.ce_single);
  doc["ce_double"] = num(r.ce_double);
  doc["gap"] = num(r.gap);
  doc["converged"] = r.converged;
  emit(doc, out);
  return r.converged ? kOk : kNotConverged;
}

Json protocol_json(const ProtocolReport& r) {
  return Json{{"protocol", r.protocol},       {"trials", r.trials},
              {"success_rate", num(r.success_rate)}, {"fidelity_min", num(r.fidelity_min)},
              {"qubits_used", r.qubits_used}, {"cbits_used", r.cbits_used},
              {"ebits_used", r.ebits_used}};
}

int cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Json doc{{"command", "demo"}, {"demo", cfg.demo}};
  if (cfg.demo == "dense-coding") {
    Json messages = Json::array();
    for (int m = 0; m < 4; ++m) {
      const DenseCodingResult r = dense_coding(m);
      Json probs = Json::array();
      for (double p : r.outcome_probs) probs.push_back(num(p));
      messages.push_back(Json{{"message", m}, {"decoded", r.decoded}, {"outcome_probs", probs}});
    }
    doc["messages"] = messages;
    doc["report"] = protocol_json(dense_coding_demo());
  } else if (cfg.demo == "teleportation") {
    doc["seed"] = cfg.seed;
    doc["report"] = protocol_json(teleportation_demo(cfg.seed, 20));
  } else if (cfg.demo == "feedback-equivalence") {
    const FeedbackEquivalenceReport r = feedback_equivalence_demo();
    doc["quantum_feedback"] = protocol_json(r.quantum_feedback);
    doc["classical_feedback"] = protocol_json(r.classical_feedback);
    doc["final_state_difference"] = num(r.final_state_difference);
    doc["forward_bits_per_qubit"] = Json{{"quantum_feedback", num(r.forward_bits_per_qubit_quantum)},
                                         {"classical_feedback",
                                          num(r.forward_bits_per_qubit_classical)}};
  } else {
    err << "unknown demo \"" << cfg.demo
        << "\" (expected dense-coding, teleportation or feedback-equivalence)\n";
    return kBadSpec;
  }
  emit(doc, out);
  return kOk;
}

int cmd_zoo(std::ostream& out) {
  Json list = Json::array();
  for (const NamedChannel& entry : zoo()) {
    Json item{{"label", entry.label}};
    item.update(channel_json(entry.channel));
    if (entry.channel.dim_in() == 2 && entry.channel.dim_out() == 2)
      item["entanglement_breaking"] = is_entanglement_breaking(entry.channel);
    list.push_back(item);
  }
  emit(Json{{"command", "zoo"}, {"channels", list}}, out);
  return kOk;
}

void add_optimizer_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "Relative convergence tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", cfg.max_iter, "Iteration cap per restart")
      ->check(CLI::PositiveNumber);
  sub->add_option("--restarts", cfg.restarts, "Number of random restarts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "RNG seed");
  sub->add_flag("--parallel", cfg.parallel, "Run restarts concurrently");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "json";

  CLI::App app{"qcap: quantum channel capacities, feedback bounds and protocol demos"};
  app.require_subcommand(1);

  auto spec_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", cfg.channel_path, "Channel spec JSON file")->required();
    return sub;
  };

  spec_command("validate", "Check a channel spec and report its completeness residual");

  CLI::App* ce = spec_command("ce", "Entanglement-assisted classical capacity");
  add_optimizer_flags(ce, cfg);
  ce->add_option("--output", format, "json or csv (iteration trace)")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* holevo = spec_command("holevo", "Single-letter Holevo capacity (lower-bound witness)");
  add_optimizer_flags(holevo, cfg);
  holevo->add_option("--output", format, "json or csv (iteration trace)")
      ->check(CLI::IsMember({"json", "csv"}));
  holevo->add_option("--ensemble-size", cfg.ensemble_size, "Pure states in the ensemble")
      ->check(CLI::PositiveNumber);

  CLI::App* bound = spec_command("bound", "Sample the conditional-QMI feedback bound");
  add_optimizer_flags(bound, cfg);
  bound->add_option("--samples", cfg.samples, "Separable states to sample")
      ->check(CLI::PositiveNumber);
  bound->add_option("--conditioner-dim", cfg.conditioner_dim, "Dimension of R'")
      ->check(CLI::PositiveNumber);

  CLI::App* additivity = spec_command("additivity", "Compare C_E of two copies with twice C_E");
  add_optimizer_flags(additivity, cfg);

  CLI::App* demo = app.add_subcommand("demo", "Run a protocol demonstration");
  demo->add_option("name", cfg.demo, "dense-coding | teleportation | feedback-equivalence")
      ->required();
  demo->add_option("--seed", cfg.seed, "RNG seed");

  app.add_subcommand("zoo", "List built-in channels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadSpec;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  try {
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "ce") return cmd_ce(cfg, out);
    if (cfg.command == "holevo") return cmd_holevo(cfg, out);
    if (cfg.command == "bound") return cmd_bound(cfg, out);
    if (cfg.command == "additivity") return cmd_additivity(cfg, out);
    if (cfg.command == "demo") return cmd_demo(cfg, out, err);
    if (cfg.command == "zoo") return cmd_zoo(out);
  } catch (const ChannelError& e) {
    emit(Json{{"command", cfg.command},
              {"spec", cfg.channel_path},
              {"valid", false},
              {"error", e.what()},
              {"completeness_residual", num(e.residual())}},
         out);
    err << e.what() << '\n';
    return kBadSpec;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    emit(Json{{"command", cfg.command}, {"spec", cfg.channel_path}, {"valid", false},
              {"error", e.what()}},
         out);
    return kBadSpec;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    emit(Json{{"command", cfg.command}, {"spec", cfg.channel_path}, {"valid", false},
              {"error", e.what()}},
         out);
    return kBadSpec;
  }
  return kBadSpec;
}

}  // namespace qcap::cli
