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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dynstrength/canonical.hpp"
#include "dynstrength/matcore.hpp"
#include "dynstrength/schmidt.hpp"
#include "test_util.hpp"

using namespace dynstrength;
using dynstrength::testing::random_matrix;

TEST_CASE("kron of identities and Paulis") {
  CHECK((kron(pauli::i2(), pauli::i2()) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
  ComplexMatrix xx = kron(pauli::x(), pauli::x());
  ComplexMatrix anti = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1.0;
  CHECK((xx - anti).norm() == 0.0);

  // first CNOT Schmidt term: |0><0| (x) I/sqrt2, scaled by sqrt2
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix term = std::numbers::sqrt2 * kron(p0, pauli::i2() / std::numbers::sqrt2);
  CHECK((term - cnot()).block(0, 0, 2, 2).norm() < 1e-15);
}

TEST_CASE("kron is associative") {
  for (int t = 0; t < 20; ++t) {
    ComplexMatrix a = random_matrix(1 + t % 3, 2, 10 * t + 1);
    ComplexMatrix b = random_matrix(2, 1 + t % 2, 10 * t + 2);
    ComplexMatrix c = random_matrix(3, 2, 10 * t + 3);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("partial trace") {
  SUBCASE("product state") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = 1.0;
    DensityMatrix red = partial_trace(to_density({{2, 2}, v}), {0});
    CHECK(std::abs(red.matrix(0, 0) - Complex(1.0)) < 1e-15);
    CHECK(red.matrix.cwiseAbs().sum() == doctest::Approx(1.0));
  }
  SUBCASE("Bell state reduces to I/2") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = v(3) = 1.0 / std::numbers::sqrt2;
    DensityMatrix red = partial_trace(to_density({{2, 2}, v}), {0});
    CHECK((red.matrix - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  }
  SUBCASE("ancilla-traced U_p output matches the pure-state Schmidt spectrum") {
    // order (A, B, R_A, R_B); the probe is alpha on A R_A times beta on B R_B
    ComplexVector alpha = haar_state(4, 11), beta = haar_state(4, 12);
    ComplexVector psi0(16);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int ra = 0; ra < 2; ++ra)
          for (int rb = 0; rb < 2; ++rb)
            psi0(((a * 2 + b) * 2 + ra) * 2 + rb) = alpha(a * 2 + ra) * beta(b * 2 + rb);
    ComplexVector psi = kron(up_gate(0.3), ComplexMatrix::Identity(4, 4)) * psi0;

    DensityMatrix red = partial_trace(to_density({{2, 2, 2, 2}, psi}), {2, 0});
    CHECK(red.dims == std::vector<int>{2, 2});
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(red.matrix);
    RealVector got = es.eigenvalues().reverse();

    // independent route: Schmidt coefficients of psi across (A R_A):(B R_B)
    ComplexMatrix m(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int ra = 0; ra < 2; ++ra)
          for (int rb = 0; rb < 2; ++rb)
            m(a * 2 + ra, b * 2 + rb) = psi(((a * 2 + b) * 2 + ra) * 2 + rb);
    RealVector s = singular_values(m);
    for (int i = 0; i < 4; ++i) CHECK(got(i) == doctest::Approx(s(i) * s(i)).epsilon(1e-10));
  }
  SUBCASE("random states keep unit trace") {
    for (int t = 0; t < 20; ++t) {
      ComplexVector v = haar_state(12, 100 + t);
      DensityMatrix red = partial_trace(to_density({{2, 3, 2}, v}), {t % 3});
      CHECK(std::abs(red.matrix.trace() - Complex(1.0)) < 1e-10);
    }
  }
  SUBCASE("invalid subsystem index") {
    DensityMatrix rho{{2, 2}, 0.25 * ComplexMatrix::Identity(4, 4)};
    CHECK_THROWS_AS(partial_trace(rho, {2}), ValidationError);
    CHECK_THROWS_AS(partial_trace(rho, {}), ValidationError);
    CHECK_THROWS_AS(partial_trace(rho, {0, 1}), ValidationError);
  }
}

TEST_CASE("svd") {
  CHECK((svd(ComplexMatrix::Identity(3, 3)).s.array() - 1.0).abs().maxCoeff() < 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  RealVector s = svd(d).s;
  CHECK(s(0) == doctest::Approx(3.0));
  CHECK(s(1) == doctest::Approx(0.0));

  RealVector cn = svd(realign(cnot(), {2, 2})).s;
  CHECK(cn(0) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(cn(1) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(cn(2) < 1e-12);
  CHECK(cn(3) < 1e-12);
}

TEST_CASE("svd reconstructs random matrices") {
  for (int t = 0; t < 200; ++t) {
    const int rows = 1 + t % 16, cols = 1 + (7 * t) % 16;
    ComplexMatrix m = random_matrix(rows, cols, 500 + t);
    SvdResult f = svd(m);
    const double err = (m - f.u * f.s.cast<Complex>().asDiagonal() * f.vh).norm();
    CHECK(err <= 1e-10 * m.norm());
    for (Eigen::Index i = 1; i < f.s.size(); ++i) CHECK(f.s(i - 1) >= f.s(i));
  }
}

TEST_CASE("eig_unitary") {
  UnitaryEigen id = eig_unitary(ComplexMatrix::Identity(3, 3));
  for (auto l : id.eigenvalues) CHECK(std::abs(l - Complex(1.0)) < 1e-12);

  UnitaryEigen z = eig_unitary(pauli::z());
  CHECK(std::abs(z.eigenvalues[0] - Complex(1.0)) < 1e-12);   // phase 0
  CHECK(std::abs(z.eigenvalues[1] - Complex(-1.0)) < 1e-12);  // phase pi

  SUBCASE("canonical form eigenvalues follow the H-matrix formula") {
    const int h[4][4] = {{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, -1, -1}, {1, -1, 1, 1}};
    for (Angles th : {Angles{std::numbers::pi / 4, 0, 0}, Angles{0.3, -0.2, 0.1}}) {
      std::vector<Complex> expected;
      for (int j = 0; j < 4; ++j) {
        double ph = 0.0;
        for (int k = 1; k < 4; ++k) ph += h[j][k] * th[k - 1];
        expected.push_back(std::polar(1.0, ph));
      }
      UnitaryEigen e = eig_unitary(canonical_form(th));
      for (auto lam : e.eigenvalues) {
        bool found = std::any_of(expected.begin(), expected.end(),
                                 [&](Complex x) { return std::abs(x - lam) < 1e-8; });
        CHECK(found);
      }
    }
    UnitaryEigen cx = eig_unitary(canonical_form({std::numbers::pi / 4, 0, 0}));
    CHECK(std::abs(cx.eigenvalues[0] - std::polar(1.0, -std::numbers::pi / 4)) < 1e-8);
    CHECK(std::abs(cx.eigenvalues[1] - std::polar(1.0, -std::numbers::pi / 4)) < 1e-8);
    CHECK(std::abs(cx.eigenvalues[2] - std::polar(1.0, std::numbers::pi / 4)) < 1e-8);
    CHECK(std::abs(cx.eigenvalues[3] - std::polar(1.0, std::numbers::pi / 4)) < 1e-8);
  }
  SUBCASE("eigenvectors are orthonormal inside degenerate blocks") {
    ComplexMatrix u = canonical_form({std::numbers::pi / 4, std::numbers::pi / 4, 0.0});
    UnitaryEigen e = eig_unitary(u);
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(4, 4)).norm() < 1e-10);
    for (int j = 0; j < 4; ++j) {
      CHECK((u * e.eigenvectors.col(j) - e.eigenvalues[j] * e.eigenvectors.col(j)).norm() < 1e-8);
    }
  }
  CHECK_THROWS_AS(eig_unitary(2.0 * pauli::x()), ValidationError);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy({1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0));
  // -(1/4) log2(1/4) - (3/4) log2(3/4)
  const double direct = 0.25 * 2.0 + 0.75 * std::log2(4.0 / 3.0);
  CHECK(shannon_entropy({0.25, 0.75}) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(direct == doctest::Approx(0.8112781245).epsilon(1e-9));
  CHECK(shannon_entropy({0.5 + 1e-13, 0.5, -1e-13}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(shannon_entropy({1.1, -0.1}), ValidationError);
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.4}), ValidationError);
}

TEST_CASE("von Neumann entropy") {
  ComplexVector v = haar_state(4, 3);
  CHECK(von_neumann_entropy(to_density({{4}, v})) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(von_neumann_entropy({{2}, 0.5 * ComplexMatrix::Identity(2, 2)}) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy({{6}, ComplexMatrix::Identity(6, 6) / 6.0}) ==
        doctest::Approx(std::log2(6.0)));

  for (int t = 0; t < 10; ++t) {
    ComplexMatrix g = random_matrix(5, 5, 900 + t);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    ComplexMatrix u = haar_unitary(5, 950 + t);
    double a = von_neumann_entropy({{5}, rho});
    ComplexMatrix conj = u * rho * u.adjoint();
    conj = 0.5 * (conj + conj.adjoint());
    CHECK(std::abs(a - von_neumann_entropy({{5}, conj})) < 1e-9);
  }
}

TEST_CASE("haar unitaries") {
  ComplexMatrix one = haar_unitary(1, 5);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-14);
  CHECK((haar_unitary(4, 77) - haar_unitary(4, 77)).norm() == 0.0);
  CHECK((haar_unitary(4, 77) - haar_unitary(4, 78)).norm() > 0.1);
  for (int d : {2, 3, 5, 8}) {
    ComplexMatrix u = haar_unitary(d, 1000 + d);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() <= 1e-10);
  }

  // E|tr U|^2 = 1 under Haar measure
  const int n = 10000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = std::norm(haar_unitary(2, mix_seed(4242, i)).trace());
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sumsq / n - mean * mean) / n);
  CHECK(std::abs(mean - 1.0) < 3.0 * se);
}

TEST_CASE("gate registry") {
  CHECK((gate(GateSpec::parse("up:0")) - ComplexMatrix::Identity(4, 4)).norm() < 1e-15);
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::numbers::sqrt2;
  CHECK((gate(GateSpec::parse("qft:1")) - h).norm() < 1e-15);

  ComplexMatrix c = gate(GateSpec::parse("cnot"));
  CHECK(c(0, 0) == Complex(1.0));
  CHECK(c(1, 1) == Complex(1.0));
  CHECK(c(3, 2) == Complex(1.0));
  CHECK(c(2, 3) == Complex(1.0));

  ComplexMatrix t0 = gate(GateSpec::parse("toffoli:0"));
  CHECK(t0(0b111, 0b011) == Complex(1.0));  // controls 1,2 set -> flip qubit 0
  ComplexMatrix t2 = gate(GateSpec::parse("toffoli"));
  CHECK(t2(0b111, 0b110) == Complex(1.0));

  CHECK(is_unitary(gate(GateSpec::parse("qft:5"))));
  CHECK(is_unitary(gate(GateSpec::parse("up:0.3"))));
  CHECK((gate(GateSpec::parse("haar:4,12345")) - haar_unitary(4, 12345)).norm() == 0.0);

  CHECK(*default_partition(GateSpec::parse("qft:1,3"), 16) == Partition{2, 8});
  CHECK(*default_partition(GateSpec::parse("qft:5"), 32) == Partition{4, 8});
  CHECK(*default_partition(GateSpec::parse("toffoli:0"), 8) == Partition{2, 4});
  CHECK(GateSpec::parse("up:0.25").to_string() == "up:0.25");

  CHECK_THROWS_AS(GateSpec::parse("bogus"), ValidationError);
  CHECK_THROWS_AS(GateSpec::parse("up:1.5"), ValidationError);
  CHECK_THROWS_AS(GateSpec::parse("up"), ValidationError);
  CHECK_THROWS_AS(GateSpec::parse("qft:0"), ValidationError);
  CHECK_THROWS_AS(GateSpec::parse("qft:x"), ValidationError);
  CHECK_THROWS_AS(GateSpec::parse("toffoli:3"), ValidationError);
}

TEST_CASE("matrix JSON") {
  ComplexMatrix m = random_matrix(2, 3, 8);
  ComplexMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK((back - m).norm() == 0.0);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows":2,"cols":2,"entries":[[1,0]]})"), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows":1,"cols":1,"entries":[[1]]})"), ValidationError);
  CHECK_THROWS_AS(matrix_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(load_matrix("/nonexistent/matrix.json"), ValidationError);
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2:4") == Partition{2, 4});
  CHECK_THROWS_AS(parse_partition("2x4"), ValidationError);
  CHECK_THROWS_AS(parse_partition("0:4"), ValidationError);
}
