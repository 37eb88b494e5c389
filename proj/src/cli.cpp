// Copyright 2026 The dynstrength Authors
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

#include "dynstrength/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynstrength/report.hpp"

namespace dynstrength {

namespace {

struct Options {
  std::string gate;
  std::string partition;
  std::string measure;
  std::string metric = "hs";
  std::string channel;
  std::string out;
  std::string grid;
  std::string fn;
  std::string table;
  std::string ancilla;
  std::string qft;
  std::string bound_kind;
  std::uint64_t seed = 0;
  int restarts = 16;
  int threads = 0;
  int fig = 0;
  int samples = 0;
  int enlarge = 2;
  double ku = -1.0, kmax = -1.0, feps = 0.0;
  bool probe_start = false;
  bool numeric = false;
};

std::uint64_t seed_from_env() {
  const char* s = std::getenv("DYNSTRENGTH_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("DYNSTRENGTH_SEED is not an unsigned integer: ") + s);
  }
}

OptimizerConfig optimizer(const Options& o) {
  OptimizerConfig c;
  c.restarts = o.restarts;
  c.seed = o.seed;
  c.threads = o.threads;
  c.validate();
  return c;
}

ComplexMatrix load_gate(const Options& o, Partition& part) {
  if (o.gate.empty()) throw ValidationError("--gate is required");
  const GateSpec spec = GateSpec::parse(o.gate);
  ComplexMatrix u = gate(spec);
  if (!o.partition.empty()) {
    part = parse_partition(o.partition);
  } else if (auto p = default_partition(spec, static_cast<int>(u.rows()))) {
    part = *p;
  } else {
    throw ValidationError("gate '" + o.gate + "' has no natural cut; pass --partition dA:dB");
  }
  if (part.dim() != u.rows()) {
    throw ValidationError("partition " + to_string(part) + " does not match gate dimension " +
                          std::to_string(u.rows()));
  }
  return u;
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  try {
    const Partition p = parse_partition(text);
    return {p.dA, p.dB};
  } catch (const ValidationError&) {
    throw ValidationError(std::string(what) + " must look like a:b, got '" + text + "'");
  }
}

KrausChannel load_channel(const Options& o) {
  if (o.channel.empty()) {
    Partition part;
    const ComplexMatrix u = load_gate(o, part);
    return unitary_channel(u, part);
  }
  if (!o.gate.empty()) throw ValidationError("give either --gate or --channel, not both");
  const Partition part = o.partition.empty() ? Partition{2, 2} : parse_partition(o.partition);
  const auto colon = o.channel.find(':');
  const std::string name = o.channel.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : o.channel.substr(colon + 1);
  if (name == "depolarizing") return completely_depolarizing(part);
  if (name == "random") {
    int k = 2;
    std::uint64_t s = o.seed;
    std::istringstream in(rest);
    std::string tok;
    if (std::getline(in, tok, ',') && !tok.empty()) k = std::stoi(tok);
    if (std::getline(in, tok, ',') && !tok.empty()) s = std::stoull(tok);
    if (k < 1) throw ValidationError("random channel needs at least one Kraus element");
    return random_channel(part, k, s);
  }
  if (name == "kraus") {
    std::ifstream f(rest);
    if (!f) throw ValidationError("cannot open Kraus file '" + rest + "'");
    KrausChannel ch;
    try {
      const nlohmann::json j = nlohmann::json::parse(f);
      ch.in_partition = parse_partition(j.at("partition").get<std::string>());
      for (const auto& m : j.at("elements")) ch.elements.push_back(matrix_from_json(m.dump()));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("Kraus file: ") + e.what());
    }
    ch.validate();
    return ch;
  }
  throw ValidationError("unknown channel '" + o.channel + "' (depolarizing, random:k[,seed], kraus:PATH)");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> v;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ':')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("--grid must look like a:b:step, got '" + text + "'");
    }
  }
  if (v.size() != 3) throw ValidationError("--grid must look like a:b:step, got '" + text + "'");
  return make_grid(v[0], v[1], v[2]);
}

std::string cmd_strength(const Options& o, const ReportMeta& meta) {
  Partition part;
  const ComplexMatrix u = load_gate(o, part);
  const OptimizerConfig cfg = optimizer(o);
  const std::string m = o.measure.empty() ? "k_sch" : o.measure;
  auto exact = [&](const char* name, double v) {
    StrengthReport r;
    r.measure = name;
    r.value = v;
    r.restarts_used = 0;
    return strength_report(r, meta);
  };
  if (m == "k_har") return exact("k_har", k_har(u, part));
  if (m == "k_sch") return exact("k_sch", k_sch(u, part));
  if (m == "k_e") {
    KeOptions opts;
    opts.probe_warm_start = o.probe_start;
    if (!o.ancilla.empty()) opts.ancilla_dims = parse_pair(o.ancilla, "--ancilla");
    return strength_report(k_e(u, part, cfg, opts), meta);
  }
  if (m == "k_delta_e") {
    const auto anc = o.ancilla.empty() ? std::pair{part.dA, part.dB} : parse_pair(o.ancilla, "--ancilla");
    return strength_report(k_delta_e(u, part, anc, cfg), meta);
  }
  if (m == "k_hs" || m == "k_d") {
    const MetricKind kind = m == "k_hs" ? MetricKind::hilbert_schmidt : parse_metric(o.metric);
    if (kind == MetricKind::hilbert_schmidt && part == Partition{2, 2}) return hs_report(k_hs_two_qubit(u), meta);
    return strength_report(k_d_numeric(u, part, kind, cfg), meta);
  }
  throw ValidationError("unknown measure '" + m + "' (k_har, k_sch, k_e, k_delta_e, k_hs, k_d)");
}

std::string cmd_channel(const Options& o, const ReportMeta& meta) {
  const KrausChannel ch = load_channel(o);
  const OptimizerConfig cfg = optimizer(o);
  std::vector<StrengthReport> reps;
  const bool all = o.measure.empty();
  if (all || o.measure == "k_e") reps.push_back(k_e_channel(ch, cfg));
  if (all || o.measure == "k_sch") reps.push_back(k_sch_channel(ch, o.enlarge, cfg));
  if (reps.empty()) throw ValidationError("channel measures are k_e and k_sch");
  return channel_report(reps, meta);
}

std::string cmd_bound(const Options& o, const ReportMeta& meta) {
  BoundReport r;
  if (o.bound_kind == "log-rank") {
    if (o.fn.empty() == o.table.empty()) throw ValidationError("log-rank needs exactly one of --fn or --table");
    const BooleanFunction f = o.fn.empty() ? load_function_csv(o.table) : parse_function_spec(o.fn);
    const LogRankResult lr = log_rank_bound(f);
    r.bound_name = "log_rank";
    r.value = lr.bound;
    r.inputs = {{"rank", lr.rank}, {"schmidt_number", lr.schmidt_number}};
  } else if (o.bound_kind == "gates" || o.bound_kind == "approx-gates") {
    if (o.ku < 0.0 || o.kmax <= 0.0) throw ValidationError("gate bounds need --ku >= 0 and --kmax > 0");
    const bool approx = o.bound_kind == "approx-gates";
    r.bound_name = approx ? "approx_gate_count" : "gate_count";
    r.value = approx ? approx_gate_count_bound(o.ku, o.kmax, o.feps) : gate_count_bound(o.ku, o.kmax);
    r.inputs = {{"ku", o.ku}, {"kmax", o.kmax}};
    if (approx) r.inputs.emplace_back("f_eps", o.feps);
  } else if (o.bound_kind == "qft") {
    const auto [m, n] = parse_pair(o.qft.empty() ? "1:1" : o.qft, "--qft");
    const QftBound q = qft_comm_bound(m, n, o.numeric);
    r.bound_name = "qft_communication";
    r.value = q.bound;
    r.inputs = {{"m", m}, {"n", n}, {"k_har_qft", q.k_har_qft}, {"k_har_swap", q.k_har_swap},
                {"swap_ratio", q.swap_ratio}, {"numeric", q.numeric ? 1.0 : 0.0}};
  } else {
    throw ValidationError("bound kind must be log-rank, gates, approx-gates or qft");
  }
  return bound_report(r, meta);
}

std::string cmd_sweep(const Options& o) {
  const OptimizerConfig cfg = optimizer(o);
  switch (o.fig) {
    case 1: {
      if (!o.grid.empty()) throw ValidationError("--fig 1 takes --samples, not --grid");
      return to_csv(sweep_chaining(search_chaining_violation(o.samples > 0 ? o.samples : 200, cfg)));
    }
    case 2:
      return to_csv(sweep_up(parse_grid(o.grid.empty() ? "0.02:0.98:0.04" : o.grid), cfg));
    case 4:
      return to_csv(sweep_superadditivity(parse_grid(o.grid.empty() ? "0:1:0.01" : o.grid)));
    default:
      throw ValidationError("--fig must be 1, 2 or 4");
  }
}

std::string cmd_axioms(const Options& o, const ReportMeta& meta, bool& contradiction) {
  SuiteConfig sc;
  sc.samples = o.samples > 0 ? o.samples : 20;
  sc.seed = o.seed;
  sc.optimizer.seed = o.seed;
  sc.optimizer.threads = o.threads;
  if (o.restarts != 16) sc.optimizer.restarts = o.restarts;
  std::vector<std::string> measures;
  if (o.measure.empty() || o.measure == "all") measures = kMeasures;
  else measures = {o.measure};
  std::vector<PropertyCase> all;
  for (const auto& m : measures) {
    auto cases = run_axiom_suite(m, sc);
    all.insert(all.end(), cases.begin(), cases.end());
  }
  for (const auto& c : all) contradiction = contradiction || c.contradicts();
  return property_report(all, meta);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic strength measures of bipartite quantum operations", "dynstrength"};
  app.require_subcommand(1);
  Options o;
  try {
    o.seed = seed_from_env();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed (default $DYNSTRENGTH_SEED or 0)");
    sub->add_option("--restarts", o.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto gate_opts = [&](CLI::App* sub) {
    sub->add_option("--gate", o.gate, "gate spec: cnot, swap, toffoli[:t], up:p, qft:l, qft:m,n, haar:d[,seed], file:PATH");
    sub->add_option("--partition", o.partition, "cut dA:dB");
  };

  CLI::App* decompose = app.add_subcommand("decompose", "operator-Schmidt decomposition");
  gate_opts(decompose);
  common(decompose);
  CLI::App* canonical = app.add_subcommand("canonical", "two-qubit canonical decomposition");
  gate_opts(canonical);
  common(canonical);
  CLI::App* strength = app.add_subcommand("strength", "strength of a gate");
  gate_opts(strength);
  common(strength);
  strength->add_option("--measure", o.measure, "k_har, k_sch, k_e, k_delta_e, k_hs or k_d");
  strength->add_option("--metric", o.metric, "metric for k_d: hs or op");
  strength->add_option("--ancilla", o.ancilla, "ancilla dimensions rA:rB for k_e and k_delta_e");
  strength->add_flag("--probe-start", o.probe_start, "warm-start k_e from the maximally entangled probe");
  CLI::App* channel = app.add_subcommand("channel", "strengths of a two-qubit channel");
  gate_opts(channel);
  common(channel);
  channel->add_option("--channel", o.channel, "depolarizing, random:k[,seed] or kraus:PATH");
  channel->add_option("--measure", o.measure, "k_e or k_sch (default both)");
  channel->add_option("--enlarge", o.enlarge, "extra Kraus slots for k_sch")->check(CLI::NonNegativeNumber);
  CLI::App* bound = app.add_subcommand("bound", "gate-count and communication lower bounds");
  common(bound);
  bound->add_option("kind", o.bound_kind, "log-rank, gates, approx-gates or qft")->required();
  bound->add_option("--fn", o.fn, "named function NAME:bits (eq, ip, and, xor)");
  bound->add_option("--table", o.table, "truth table CSV");
  bound->add_option("--ku", o.ku, "strength of the target");
  bound->add_option("--kmax", o.kmax, "largest strength of an available gate");
  bound->add_option("--feps", o.feps, "continuity allowance f(eps) for approx-gates");
  bound->add_option("--qft", o.qft, "split m:n of the Fourier transform");
  bound->add_flag("--numeric", o.numeric, "check qft against numeric Hartley strengths");
  CLI::App* sweep = app.add_subcommand("sweep", "figure data as CSV");
  common(sweep);
  sweep->add_option("--fig", o.fig, "1, 2 or 4")->required();
  sweep->add_option("--grid", o.grid, "a:b:step");
  sweep->add_option("--samples", o.samples, "pairs for --fig 1");
  CLI::App* axioms = app.add_subcommand("axioms", "property table audit");
  common(axioms);
  axioms->add_option("--measure", o.measure, "measure or all");
  axioms->add_option("--samples", o.samples, "samples per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitValidation;
  }

  int code = kExitOk;
  std::string text;
  try {
    ReportMeta meta{app.get_subcommands().front()->get_name(), o.seed};
    if (decompose->parsed()) {
      Partition part;
      const ComplexMatrix u = load_gate(o, part);
      text = schmidt_report(o.gate, u, part, meta);
    } else if (canonical->parsed()) {
      Partition part;
      const ComplexMatrix u = load_gate(o, part);
      if (!(part == Partition{2, 2})) throw ValidationError("canonical needs a 2:2 gate");
      text = canonical_report(u, meta);
    } else if (strength->parsed()) {
      text = cmd_strength(o, meta);
    } else if (channel->parsed()) {
      text = cmd_channel(o, meta);
    } else if (bound->parsed()) {
      text = cmd_bound(o, meta);
    } else if (sweep->parsed()) {
      text = cmd_sweep(o);
    } else if (axioms->parsed()) {
      bool contradiction = false;
      text = cmd_axioms(o, meta, contradiction);
      if (contradiction) {
        err << "error: property table contradiction\n";
        code = kExitAssertion;
      }
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitValidation;
    }
    f << text;
  }
  return code;
}

}  // namespace dynstrength
