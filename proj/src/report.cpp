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

#include "dynstrength/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include <json.hpp>

namespace dynstrength {

namespace {

using nlohmann::ordered_json;

ordered_json header(const ReportMeta& meta) {
  ordered_json j;
  j["command"] = meta.command;
  j["seed"] = meta.seed;
  return j;
}

ordered_json vector_json(const ComplexVector& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({round12(v(i).real()), round12(v(i).imag())});
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out == 0.0 ? 0.0 : out;  // no negative zero
}

std::string schmidt_report(const std::string& gate, const ComplexMatrix& u, const Partition& part,
                           const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["gate"] = gate;
  j["partition"] = to_string(part);
  const SchmidtDecomposition d = operator_schmidt(u, part);
  ordered_json c = ordered_json::array();
  for (Eigen::Index i = 0; i < d.coefficients.size(); ++i) c.push_back(round12(d.coefficients(i)));
  j["coefficients"] = c;
  j["schmidt_number"] = d.coefficients.size();
  j["k_har"] = number(k_har(u, part));
  j["k_sch"] = number(k_sch(u, part));
  if (is_unitary(u)) j["linear_entropy"] = number(linear_entropy(u, part));
  return dump(j);
}

std::string canonical_report(const ComplexMatrix& u, const ReportMeta& meta) {
  const CanonicalDecomposition d = canonical_decompose(u);
  ordered_json j = header(meta);
  j["theta"] = {round12(d.theta[0]), round12(d.theta[1]), round12(d.theta[2])};
  const int cls = schmidt_class(u);
  j["class"] = cls;
  if (cls == 2) j["p"] = number(schmidt2_normal_form(u));
  j["global_phase"] = number(d.global_phase);
  j["reconstruction_error"] = number(d.reconstruction_error);
  return dump(j);
}

std::string strength_report(const StrengthReport& r, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["measure"] = r.measure;
  j["value"] = number(r.value);
  j["bound_kind"] = to_string(r.bound_kind);
  j["restarts_used"] = r.restarts_used;
  j["best_restart"] = r.best_restart;
  j["evals"] = r.evals;
  j["converged"] = r.converged;
  if (r.witness) {
    j["witness"] = {{"alpha", vector_json(r.witness->alpha)},
                    {"beta", vector_json(r.witness->beta)},
                    {"ancilla_dims", {r.witness->ancilla_dims.first, r.witness->ancilla_dims.second}}};
  } else if (r.witness_state) {
    j["witness"] = {{"state", vector_json(*r.witness_state)}};
  }
  return dump(j);
}

std::string hs_report(const HsStrength& r, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["measure"] = "k_hs";
  j["metric"] = "hilbert_schmidt";
  j["value"] = number(r.value);
  j["bound_kind"] = "exact";
  j["minimizer_k"] = r.minimizer_k;
  j["minimizer_phase"] = number(r.minimizer_phase);
  return dump(j);
}

std::string channel_report(const std::vector<StrengthReport>& reports, const ReportMeta& meta) {
  ordered_json j = header(meta);
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    list.push_back({{"measure", r.measure},
                    {"value", number(r.value)},
                    {"bound_kind", to_string(r.bound_kind)},
                    {"restarts_used", r.restarts_used},
                    {"best_restart", r.best_restart}});
  }
  j["reports"] = list;
  return dump(j);
}

std::string bound_report(const BoundReport& r, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["bound"] = r.bound_name;
  j["value"] = number(r.value);
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = number(v);
  j["inputs"] = in;
  return dump(j);
}

std::string property_report(const std::vector<PropertyCase>& cases, const ReportMeta& meta) {
  ordered_json j = header(meta);
  ordered_json list = ordered_json::array();
  int contradictions = 0;
  for (const auto& c : cases) {
    ordered_json e;
    e["measure"] = c.measure;
    e["property"] = c.property;
    e["expected"] = to_string(c.expected);
    e["verdict"] = to_string(c.verdict);
    e["samples"] = c.samples;
    e["tolerance"] = number(c.tolerance);
    e["worst_violation"] = number(c.worst_violation);
    e["contradicts_table"] = c.contradicts();
    if (!c.note.empty()) e["note"] = c.note;
    // witnesses keep full precision so that replay is exact
    if (c.witness) e["witness"] = nlohmann::json::parse(c.witness->to_json());
    if (c.contradicts()) ++contradictions;
    list.push_back(std::move(e));
  }
  j["contradictions"] = contradictions;
  j["cases"] = list;
  return dump(j);
}

std::string to_csv(const SweepResult& sweep) {
  std::string out;
  for (std::size_t i = 0; i < sweep.columns.size(); ++i) {
    if (i) out += ',';
    out += sweep.columns[i];
  }
  out += '\n';
  for (const auto& row : sweep.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dynstrength
