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

// Entanglement-generating strengths K_E and K_dE, the maximally entangled
// probe, the two-copy superadditivity construction, and channel versions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynstrength/matcore.hpp"
#include "dynstrength/optimize.hpp"

namespace dynstrength {

enum class BoundKind { exact, lower, upper };
std::string to_string(BoundKind kind);

/// alpha lives on A (x) R_A (index a * rA + ra), beta on B (x) R_B.
struct ProductProbe {
  ComplexVector alpha;
  ComplexVector beta;
  std::pair<int, int> ancilla_dims{1, 1};
};

struct StrengthReport {
  std::string measure;
  double value = 0.0;
  BoundKind bound_kind = BoundKind::exact;
  std::optional<ProductProbe> witness;
  std::optional<ComplexVector> witness_state;  // K_dE input on A R_A B R_B
  long evals = 0;
  int restarts_used = 0;
  int best_restart = -1;
  bool converged = true;
};

/// Entropy (bits) across left : rest, where `left` lists subsystem indices.
double entanglement(const PureState& state, const std::vector<int>& left);

/// Applies `op` to the listed subsystems (in the given order) of `state`.
PureState apply_operator(const PureState& state, const ComplexMatrix& op,
                         const std::vector<int>& targets);

/// E(U |alpha>|beta>) for maximally entangled alpha, beta with ancillas of
/// dimensions (dA, dB), computed on the full four-party state. For a
/// non-unitary Q the output is renormalized by sqrt(dA dB / tr Q^dag Q).
double k_sch_probe(const ComplexMatrix& q, const Partition& part);

/// Entanglement across A R_A : B R_B of U(alpha (x) beta).
double probe_entanglement(const ComplexMatrix& u, const Partition& part, const ProductProbe& probe);

struct KeOptions {
  /// Adds the maximally entangled probe as a warm start, which makes the
  /// result at least K_Sch(U).
  bool probe_warm_start = false;
  /// Ancilla dimensions; zero means (dA, dB).
  std::pair<int, int> ancilla_dims{0, 0};
};

/// Lower bound on K_E(U) by multi-start Nelder-Mead over product probes.
StrengthReport k_e(const ComplexMatrix& u, const Partition& part, const OptimizerConfig& cfg,
                   const KeOptions& opts = {});

/// Lower bound on K_dE(U) = max |E(U psi) - E(psi)| over pure psi on
/// A R_A B R_B with the given ancilla truncation. `warm_states` are tried
/// as extra starting points.
StrengthReport k_delta_e(const ComplexMatrix& u, const Partition& part,
                         std::pair<int, int> ancilla_dims, const OptimizerConfig& cfg,
                         const std::vector<ComplexVector>& warm_states = {});

/// E(psi) and E(U psi) for a K_dE input psi on A R_A B R_B.
std::pair<double, double> delta_e_terms(const ComplexMatrix& u, const Partition& part,
                                        std::pair<int, int> ancilla_dims, const ComplexVector& psi);

struct SuperadditivityPoint {
  double p = 0.0;
  double two_copy_probe = 0.0;  // E(U (x) U |alpha>|beta>), computed directly
  double h_sq = 0.0;            // H[(1-2p)^2]
  double two_h = 0.0;           // 2 H(p)
  double gap = 0.0;             // h_sq - two_h
};

/// Two copies of sqrt(1-p) I.I + i sqrt(p) X.X acting on A1 B1 and A2 B2,
/// with Bell pairs on A1 A2 and on B1 B2.
SuperadditivityPoint superadditivity_gap(double p);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);
/// Entanglement of formation of a two-qubit state via the concurrence.
double eof_two_qubit(const DensityMatrix& rho);

struct KrausChannel {
  Partition in_partition;
  std::vector<ComplexMatrix> elements;

  /// Square elements of size dA dB and sum G^dag G = I within 1e-8.
  void validate() const;
  DensityMatrix apply(const DensityMatrix& rho) const;
};

KrausChannel unitary_channel(const ComplexMatrix& u, const Partition& part);
/// rho -> tr(rho) I / d, with elements (W_A (x) W_B) / d over products of
/// Weyl operators X^j Z^k on each side.
KrausChannel completely_depolarizing(const Partition& part);
/// Random channel with `kraus` elements from a Haar isometry.
KrausChannel random_channel(const Partition& part, int kraus, std::uint64_t seed);

/// (E (x) I)(|alpha><alpha| (x) |beta><beta|) with maximally entangled
/// probes, on A R_A B R_B ordering (A, R_A, B, R_B).
DensityMatrix channel_probe_state(const KrausChannel& channel);

/// Lower bound on K_E of a two-qubit channel: max EoF over pure product inputs.
StrengthReport k_e_channel(const KrausChannel& channel, const OptimizerConfig& cfg);

/// Upper bound on K_Sch of a channel: minimum over mixings W (Kraus list
/// zero-padded by `enlarge`) of sum_j tr(F_j^dag F_j)/(dA dB) K_Sch(F_j).
StrengthReport k_sch_channel(const KrausChannel& channel, int enlarge, const OptimizerConfig& cfg);

/// Upper bound on the entanglement of formation of rho across left : rest,
/// minimizing the average entropy over right-unitary mixings of the
/// eigen-ensemble padded by `enlarge` slots.
StrengthReport eof_upper_bound(const DensityMatrix& rho, const std::vector<int>& left, int enlarge,
                               const OptimizerConfig& cfg);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  int samples = 0;
};

/// Haar average over product inputs of the linear entropy 1 - tr(rho_A^2) of
/// U|a>|b>, estimated from `samples` draws.
MonteCarloEstimate average_linear_entropy_mc(const ComplexMatrix& u, const Partition& part,
                                             int samples, std::uint64_t seed);
/// Closed form d^2/(d+1)^2 [L(U) + L(U SWAP) - L(SWAP)] for dA = dB = d.
double average_linear_entropy(const ComplexMatrix& u, const Partition& part);

}  // namespace dynstrength
