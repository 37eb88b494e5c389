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

#pragma once

// Strengths induced by distances to the local unitaries.

#include <array>
#include <string>

#include "dynstrength/entangle.hpp"
#include "dynstrength/matcore.hpp"
#include "dynstrength/optimize.hpp"

namespace dynstrength {

enum class MetricKind { hilbert_schmidt, operator_norm };
MetricKind parse_metric(const std::string& name);
std::string to_string(MetricKind kind);

/// Rows of the sign matrix relating canonical angles to magic-basis eigenphases.
inline constexpr std::array<std::array<int, 4>, 4> kSignMatrix{
    {{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, -1, -1}, {1, -1, 1, 1}}};

/// lambda_j = exp(i sum_k H_jk theta_k), k over the three angles.
std::array<Complex, 4> canonical_eigenvalues(const std::array<double, 3>& theta);

struct HsStrength {
  double value = 0.0;
  int minimizer_k = 0;  // 0 = identity, 1..3 = X, Y, Z pair
  double minimizer_phase = 0.0;
  ComplexMatrix minimizer;  // e^{i phase} (A1 s_k A2) (x) (B1 s_k B2)
};

/// Exact Hilbert-Schmidt strength sqrt(8 - 2 max_k |sum_j lambda_j H_jk|) of a
/// two-qubit unitary; ties pick the smallest k.
HsStrength k_hs_two_qubit(const ComplexMatrix& u);

/// min over local unitaries A (x) B of D(U, A (x) B) by Nelder-Mead.
StrengthReport k_d_numeric(const ComplexMatrix& u, const Partition& part, MetricKind metric,
                           const OptimizerConfig& cfg);

/// D(U, V) for the chosen metric.
double distance(const ComplexMatrix& u, const ComplexMatrix& v, MetricKind metric);

}  // namespace dynstrength
