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

// Lower bounds from strength measures: gate counts, log-rank communication
// complexity and the distributed Fourier transform.

#include <string>
#include <utility>
#include <vector>

#include "dynstrength/matcore.hpp"

namespace dynstrength {

/// f(x, y) with x from Alice's bits_a bits (rows) and y from Bob's (columns).
struct BooleanFunction {
  int bits_a = 0;
  int bits_b = 0;
  std::vector<std::vector<int>> table;

  void validate() const;
  /// The +-1 matrix (-1)^{f(x,y)}.
  Eigen::MatrixXd communication_matrix() const;
  /// sum_{x,y} (-1)^{f(x,y)} |x><x| (x) |y><y|.
  ComplexMatrix sign_unitary() const;
};

/// "eq", "ip", "and" or "xor" on `bits` bits per party.
BooleanFunction named_function(const std::string& name, int bits);
/// Parses "NAME:bits".
BooleanFunction parse_function_spec(const std::string& spec);
/// Rows are x, columns y, entries 0 or 1, separated by commas.
BooleanFunction function_from_csv(const std::string& text);
BooleanFunction load_function_csv(const std::string& path);

struct BoundReport {
  std::string bound_name;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> inputs;
};

/// ceil(kU / kmax - 1e-9).
double gate_count_bound(double ku, double kmax);
/// max(0, ceil((kU - f_eps) / kmax - 1e-9)).
double approx_gate_count_bound(double ku, double kmax, double f_eps);

struct LogRankResult {
  int rank = 0;
  int schmidt_number = 0;  // of the sign unitary across the x:y cut
  double bound = 0.0;      // qubits
};
LogRankResult log_rank_bound(const BooleanFunction& f);

struct QftBound {
  double bound = 0.0;        // 2m qubits of communication
  double k_har_qft = 0.0;    // numeric when computed, else the closed form 2m
  double k_har_swap = 2.0;
  double swap_ratio = 0.0;   // k_har_qft / k_har_swap
  bool numeric = false;
};
/// Communication bound 2m for the (m+n)-qubit Fourier transform split after
/// m <= n qubits. When `numeric`, K_Har(QFT) and K_Har(SWAP) come from
/// operator-Schmidt ranks (m+n <= 12) and bound = K_Har(QFT).
/// Note that K_Har(QFT) / K_Har(SWAP) = m, half the quoted bound.
QftBound qft_comm_bound(int m, int n, bool numeric = false);

}  // namespace dynstrength
