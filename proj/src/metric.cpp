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

#include "dynstrength/metric.hpp"

#include <cmath>

#include "dynstrength/canonical.hpp"

namespace dynstrength {

MetricKind parse_metric(const std::string& name) {
  if (name == "hs" || name == "hilbert_schmidt") return MetricKind::hilbert_schmidt;
  if (name == "op" || name == "operator" || name == "operator_norm") return MetricKind::operator_norm;
  throw ValidationError("unknown metric '" + name + "' (expected hs or op)");
}

std::string to_string(MetricKind kind) {
  return kind == MetricKind::hilbert_schmidt ? "hilbert_schmidt" : "operator_norm";
}

std::array<Complex, 4> canonical_eigenvalues(const std::array<double, 3>& theta) {
  std::array<Complex, 4> out;
  for (int j = 0; j < 4; ++j) {
    double ph = 0.0;
    for (int k = 1; k < 4; ++k) ph += kSignMatrix[j][k] * theta[k - 1];
    out[j] = std::polar(1.0, ph);
  }
  return out;
}

HsStrength k_hs_two_qubit(const ComplexMatrix& u) {
  const CanonicalDecomposition dec = canonical_decompose(u);
  const auto lambda = canonical_eigenvalues(dec.theta);
  int best = 0;
  double top = -1.0;
  for (int k = 0; k < 4; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j < 4; ++j) sum += lambda[j] * static_cast<double>(kSignMatrix[j][k]);
    if (std::abs(sum) > top + 1e-12) {
      top = std::abs(sum);
      best = k;
    }
  }
  HsStrength out;
  out.value = std::sqrt(std::max(0.0, 8.0 - 2.0 * top));
  out.minimizer_k = best;
  const ComplexMatrix s = pauli::sigma(best);
  const ComplexMatrix la = dec.a1 * s * dec.a2, lb = dec.b1 * s * dec.b2;
  const ComplexMatrix local = kron(la, lb);
  out.minimizer_phase = std::arg((local.adjoint() * u).trace());
  out.minimizer = std::polar(1.0, out.minimizer_phase) * local;
  return out;
}

double distance(const ComplexMatrix& u, const ComplexMatrix& v, MetricKind metric) {
  return metric == MetricKind::hilbert_schmidt ? hs_norm(u - v) : operator_norm(u - v);
}

StrengthReport k_d_numeric(const ComplexMatrix& u, const Partition& part, MetricKind metric,
                           const OptimizerConfig& cfg) {
  if (u.rows() != part.dim() || u.cols() != part.dim()) {
    throw ValidationError("k_d_numeric: operator does not match partition " + to_string(part));
  }
  require_unitary(u, "k_d_numeric");
  cfg.validate();
  const int na = part.dA * part.dA, nb = part.dB * part.dB;
  const Objective f = [&](std::span<const double> x) {
    const ComplexMatrix a = unitary_from_params(x.subspan(0, na), part.dA);
    const ComplexMatrix b = unitary_from_params(x.subspan(na, nb), part.dB);
    return distance(u, kron(a, b), metric);
  };
  const OptimizeResult r = minimize(f, gaussian_start(na + nb), cfg);
  StrengthReport rep;
  rep.measure = metric == MetricKind::hilbert_schmidt ? "k_hs" : "k_op";
  rep.value = r.value;
  rep.bound_kind = BoundKind::upper;
  rep.evals = r.evals;
  rep.restarts_used = r.restarts_used;
  rep.best_restart = r.best_restart;
  rep.converged = r.converged;
  return rep;
}

}  // namespace dynstrength
