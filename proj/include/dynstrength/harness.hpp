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

// Randomized checks of the axioms and properties of each strength measure
// against the property table, the counterexample searches, and figure sweeps.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynstrength/matcore.hpp"
#include "dynstrength/optimize.hpp"

namespace dynstrength {

enum class Verdict { holds, violated, evidence_only, not_applicable };
/// Expected table entry: "yes", "no", "?" or "--".
enum class Expectation { yes, no, unknown, not_applicable };

std::string to_string(Verdict v);
std::string to_string(Expectation e);

inline const std::vector<std::string> kMeasures{"k_har", "k_sch", "k_e", "k_delta_e", "k_hs"};
inline const std::vector<std::string> kProperties{"A1", "A2", "A3", "P1", "P2", "P3",
                                                  "P4", "P5", "P6", "P7", "P8", "P9"};

/// Expected cell; k_hs uses the unitarily invariant K_D[U] column.
Expectation table_entry(const std::string& measure, const std::string& property);

/// Serialized counterexample. `kind` selects the replay routine; `value` is
/// the recorded violation.
struct Witness {
  std::string kind;
  std::map<std::string, ComplexMatrix> matrices;
  std::map<std::string, double> scalars;
  double value = 0.0;

  std::string to_json() const;
  static Witness from_json(const std::string& text);
};

/// Recomputes the violation stored in a witness.
double replay(const Witness& w);

struct PropertyCase {
  std::string measure;
  std::string property;
  Verdict verdict = Verdict::evidence_only;
  Expectation expected = Expectation::unknown;
  int samples = 0;
  double tolerance = 0.0;
  double worst_violation = 0.0;  // largest (lhs - rhs) seen; <= 0 means none
  std::optional<Witness> witness;
  std::string note;

  /// A "yes" cell that was violated, or a "no" cell without a witness.
  bool contradicts() const;
};

struct SuiteConfig {
  int samples = 20;
  std::uint64_t seed = 0;
  OptimizerConfig optimizer{8, 20000, 1e-7, 1e-6, 0, 0};
  int chaining_samples = 200;
};

/// Every tabulated property for one measure. Throws ValidationError for an
/// unknown measure.
std::vector<PropertyCase> run_axiom_suite(const std::string& measure, const SuiteConfig& cfg);
std::vector<PropertyCase> run_axiom_suite(const std::string& measure, int samples, std::uint64_t seed);

struct ChainingSearch {
  ComplexMatrix u, v;      // dressed pair achieving the best violation
  double violation = 0.0;  // K_Sch(UV) - K_Sch(U) - K_Sch(V)
  int samples = 0;
  int pairs_violating = 0;  // pairs with violation > 0.01
  std::vector<std::array<double, 2>> points;  // (K_Sch(U)+K_Sch(V), K_Sch(UV)) per pair
};

/// Random near-identity pairs exp(i eps G) dressed by a Nelder-Mead choice
/// of the local unitary between them, maximizing the chaining violation.
ChainingSearch search_chaining_violation(int samples, const OptimizerConfig& cfg);

/// CNOT as the reduction of a Toffoli with its target on A, cut A:BC.
PropertyCase toffoli_reduction_case();

/// |K_Sch(U) - K_Sch(V)| bound from the HS distance of U and V.
double k_sch_continuity_modulus(double hs_distance, const Partition& part);
/// 4 ||U-V|| log2(dA dB) + eta(2 ||U-V||), valid for ||U-V|| <= 1/6.
double k_e_continuity_modulus(double op_distance, const Partition& part);

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Values a, a+step, ... up to b (inclusive within 1e-9 steps).
std::vector<double> make_grid(double a, double b, double step);

/// Columns p, k_sch, k_e, diff for U_p.
SweepResult sweep_up(const std::vector<double>& grid, const OptimizerConfig& cfg);
/// Columns p, twoH, Hsq, diff. Throws NumericalError if the direct two-copy
/// computation departs from H[(1-2p)^2] by more than 1e-9.
SweepResult sweep_superadditivity(const std::vector<double>& grid);
/// Columns sum, product, violation for the chaining search points.
SweepResult sweep_chaining(const ChainingSearch& search);

}  // namespace dynstrength
