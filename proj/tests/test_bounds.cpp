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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "dynstrength/bounds.hpp"
#include "dynstrength/schmidt.hpp"

using namespace dynstrength;

namespace {

int rank_of(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

}  // namespace

TEST_CASE("named functions") {
  const BooleanFunction eq = named_function("eq", 2);
  CHECK(eq.table[1][1] == 1);
  CHECK(eq.table[1][2] == 0);
  const BooleanFunction ip = named_function("ip", 2);
  CHECK(ip.table[3][3] == 0);  // 1 + 1
  CHECK(ip.table[3][1] == 1);
  const BooleanFunction a = named_function("and", 2);
  CHECK(a.table[3][3] == 1);
  CHECK(a.table[3][1] == 0);
  const BooleanFunction x = named_function("xor", 1);
  CHECK(x.table[0][1] == 1);
  CHECK(x.table[1][1] == 0);
  CHECK_THROWS_AS(named_function("or", 2), ValidationError);
  CHECK_THROWS_AS(named_function("eq", 0), ValidationError);
  CHECK_THROWS_AS(parse_function_spec("eq"), ValidationError);
  CHECK_THROWS_AS(parse_function_spec("eq:x"), ValidationError);
  CHECK(parse_function_spec("ip:3").table.size() == 8);
}

TEST_CASE("communication matrix and sign unitary") {
  const BooleanFunction f = named_function("eq", 2);
  const Eigen::MatrixXd c = f.communication_matrix();
  const ComplexMatrix u = f.sign_unitary();
  CHECK(u.rows() == 16);
  CHECK(is_unitary(u));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(c(x, y) == (f.table[x][y] ? -1.0 : 1.0));
      CHECK(u(x * 4 + y, x * 4 + y) == Complex(c(x, y)));
    }
  CHECK((u - ComplexMatrix(u.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("CSV truth tables") {
  const BooleanFunction f = function_from_csv("0,1\n1,0\n");
  CHECK(f.bits_a == 1);
  CHECK(f.bits_b == 1);
  CHECK(log_rank_bound(f).rank == 1);  // xor is rank one
  CHECK_THROWS_AS(function_from_csv("0,1\n1\n"), ValidationError);
  CHECK_THROWS_AS(function_from_csv("0,2\n1,0\n"), ValidationError);
  CHECK_THROWS_AS(function_from_csv("0,1,1\n1,0,0\n"), ValidationError);
  CHECK_THROWS_AS(function_from_csv(""), ValidationError);
  const std::string path = "test_bounds_table.csv";
  {
    std::ofstream out(path);
    out << "1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n";
  }
  CHECK(log_rank_bound(load_function_csv(path)).rank == 4);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_function_csv("does/not/exist.csv"), ValidationError);
}

TEST_CASE("log-rank bound on named functions") {
  for (int bits = 1; bits <= 4; ++bits) {
    for (const char* name : {"eq", "ip", "and", "xor"}) {
      CAPTURE(name);
      CAPTURE(bits);
      const BooleanFunction f = named_function(name, bits);
      const LogRankResult r = log_rank_bound(f);
      const int rank = rank_of(f.communication_matrix());
      CHECK(r.rank == rank);
      CHECK(r.schmidt_number == rank);
      CHECK(r.bound == doctest::Approx(0.25 * std::log2(rank)));
    }
  }
  // equality on n bits: the identity pattern has full rank
  CHECK(log_rank_bound(named_function("eq", 3)).bound == doctest::Approx(0.75));
}

TEST_CASE("log-rank bound on random tables") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const int ba = 1 + static_cast<int>(rng() % 2), bb = 1 + static_cast<int>(rng() % 2);
    BooleanFunction f{ba, bb, std::vector<std::vector<int>>(1 << ba, std::vector<int>(1 << bb))};
    for (auto& row : f.table)
      for (int& v : row) v = static_cast<int>(rng() & 1);
    const LogRankResult r = log_rank_bound(f);
    CHECK(r.rank == rank_of(f.communication_matrix()));
    CHECK(r.schmidt_number == schmidt_number(f.sign_unitary(), {1 << ba, 1 << bb}));
  }
}

TEST_CASE("gate-count bounds") {
  // SWAP (K_Har 2) from CNOTs (K_Har 1)
  CHECK(gate_count_bound(k_har(swap_gate(), {2, 2}), k_har(cnot(), {2, 2})) == 2.0);
  CHECK(gate_count_bound(2.0, 1.0) == 2.0);
  CHECK(gate_count_bound(2.0000000001, 1.0) == 2.0);
  CHECK(gate_count_bound(2.1, 1.0) == 3.0);
  CHECK(gate_count_bound(0.0, 1.0) == 0.0);
  CHECK(approx_gate_count_bound(2.0, 1.0, 0.5) == 2.0);
  CHECK(approx_gate_count_bound(0.3, 1.0, 0.5) == 0.0);
  CHECK_THROWS_AS(gate_count_bound(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(gate_count_bound(-1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(approx_gate_count_bound(1.0, 1.0, -0.1), ValidationError);
}

TEST_CASE("distributed Fourier transform bound") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
    const QftBound q = qft_comm_bound(m, n, true);
    CHECK(q.numeric);
    CHECK(q.k_har_qft == doctest::Approx(2.0 * m));
    CHECK(q.k_har_swap == doctest::Approx(2.0));
    CHECK(q.bound == doctest::Approx(2.0 * m));
    CHECK(q.swap_ratio == doctest::Approx(static_cast<double>(m)));
  }
  CHECK(qft_comm_bound(3, 5).bound == 6.0);
  CHECK_THROWS_AS(qft_comm_bound(3, 2), ValidationError);
  CHECK_THROWS_AS(qft_comm_bound(7, 7, true), ValidationError);
}
