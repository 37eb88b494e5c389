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

#include "dynstrength/bounds.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dynstrength/schmidt.hpp"

namespace dynstrength {

namespace {

constexpr double kCeilGuard = 1e-9;

int parse_bit(const std::string& cell) {
  std::string t;
  for (char c : cell) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t == "0") return 0;
  if (t == "1") return 1;
  throw ValidationError("truth table entries must be 0 or 1, got '" + t + "'");
}

int bits_for(size_t n, const char* what) {
  int bits = 0;
  while ((size_t{1} << bits) < n) ++bits;
  if ((size_t{1} << bits) != n) {
    throw ValidationError(std::string("truth table ") + what + " count must be a power of two");
  }
  return bits;
}

}  // namespace

void BooleanFunction::validate() const {
  if (bits_a < 0 || bits_b < 0 || bits_a > 10 || bits_b > 10) {
    throw ValidationError("boolean function: bit lengths must lie in 0..10");
  }
  if (table.size() != (size_t{1} << bits_a)) throw ValidationError("boolean function: wrong row count");
  for (const auto& row : table) {
    if (row.size() != (size_t{1} << bits_b)) throw ValidationError("boolean function: wrong column count");
    for (int v : row) {
      if (v != 0 && v != 1) throw ValidationError("boolean function: entries must be 0 or 1");
    }
  }
}

Eigen::MatrixXd BooleanFunction::communication_matrix() const {
  validate();
  Eigen::MatrixXd m(table.size(), table.front().size());
  for (size_t x = 0; x < table.size(); ++x) {
    for (size_t y = 0; y < table[x].size(); ++y) m(x, y) = table[x][y] ? -1.0 : 1.0;
  }
  return m;
}

ComplexMatrix BooleanFunction::sign_unitary() const {
  const Eigen::MatrixXd c = communication_matrix();
  const Eigen::Index nb = c.cols();
  ComplexMatrix u = ComplexMatrix::Zero(c.rows() * nb, c.rows() * nb);
  for (Eigen::Index x = 0; x < c.rows(); ++x) {
    for (Eigen::Index y = 0; y < nb; ++y) u(x * nb + y, x * nb + y) = c(x, y);
  }
  return u;
}

BooleanFunction named_function(const std::string& name, int bits) {
  if (bits < 1 || bits > 10) throw ValidationError("function bit length must lie in 1..10");
  const int n = 1 << bits;
  BooleanFunction f{bits, bits, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v;
      if (name == "eq") {
        v = x == y;
      } else if (name == "ip") {
        v = std::popcount(static_cast<unsigned>(x & y)) & 1;
      } else if (name == "and") {
        v = (x & y) == n - 1 ? 1 : 0;
      } else if (name == "xor") {
        v = std::popcount(static_cast<unsigned>(x ^ y)) & 1;
      } else {
        throw ValidationError("unknown function '" + name + "' (expected eq, ip, and, xor)");
      }
      f.table[x][y] = v;
    }
  }
  return f;
}

BooleanFunction parse_function_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("function spec must look like NAME:bits");
  int bits = 0;
  try {
    size_t used = 0;
    bits = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ValidationError("function spec: bit count must be an integer");
  }
  return named_function(spec.substr(0, colon), bits);
}

BooleanFunction function_from_csv(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_bit(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("truth table is empty");
  BooleanFunction f;
  f.bits_a = bits_for(rows.size(), "row");
  f.bits_b = bits_for(rows.front().size(), "column");
  f.table = std::move(rows);
  f.validate();
  return f;
}

BooleanFunction load_function_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read truth table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return function_from_csv(ss.str());
}

double gate_count_bound(double ku, double kmax) {
  if (!(kmax > 0.0)) throw ValidationError("gate_count_bound: kmax must be positive");
  if (!(ku >= 0.0)) throw ValidationError("gate_count_bound: kU must be nonnegative");
  return std::max(0.0, std::ceil(ku / kmax - kCeilGuard));
}

double approx_gate_count_bound(double ku, double kmax, double f_eps) {
  if (!(f_eps >= 0.0)) throw ValidationError("approx_gate_count_bound: f(eps) must be nonnegative");
  if (!(kmax > 0.0)) throw ValidationError("approx_gate_count_bound: kmax must be positive");
  return std::max(0.0, std::ceil((ku - f_eps) / kmax - kCeilGuard));
}

LogRankResult log_rank_bound(const BooleanFunction& f) {
  const Eigen::MatrixXd c = f.communication_matrix();
  LogRankResult out;
  out.rank = numerical_rank(singular_values(c.cast<Complex>()));
  out.bound = 0.25 * std::log2(static_cast<double>(out.rank));
  const Partition part{static_cast<int>(c.rows()), static_cast<int>(c.cols())};
  out.schmidt_number = schmidt_number(f.sign_unitary(), part);
  if (out.schmidt_number != out.rank) {
    throw NumericalError("log_rank_bound: Schmidt number " + std::to_string(out.schmidt_number) +
                         " differs from communication rank " + std::to_string(out.rank));
  }
  return out;
}

QftBound qft_comm_bound(int m, int n, bool numeric) {
  if (m < 0 || n < 0) throw ValidationError("qft_comm_bound: qubit counts must be nonnegative");
  if (m > n) throw ValidationError("qft_comm_bound: requires m <= n");
  QftBound out;
  out.k_har_qft = 2.0 * m;
  if (numeric) {
    if (m + n > 12 || m + n < 1) throw ValidationError("qft_comm_bound: numeric check needs 1 <= m+n <= 12");
    out.k_har_qft = k_har(qft(m + n), {1 << m, 1 << n});
    out.k_har_swap = k_har(swap_gate(2), {2, 2});
    out.numeric = true;
  }
  out.bound = out.k_har_qft;
  out.swap_ratio = out.k_har_qft / out.k_har_swap;
  return out;
}

}  // namespace dynstrength
