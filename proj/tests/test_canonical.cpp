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
#include <numbers>
#include <random>

#include "dynstrength/canonical.hpp"
#include "dynstrength/schmidt.hpp"
#include "test_util.hpp"

using namespace dynstrength;
using dynstrength::testing::random_local;

namespace {

constexpr double kPi = std::numbers::pi;

// Makhlin local invariants (G1, G2) from an independent magic basis.
std::pair<Complex, Complex> makhlin(const ComplexMatrix& u) {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix q(4, 4);
  q << 1, 0, 0, kI, 0, kI, 1, 0, 0, kI, -1, 0, 1, 0, 0, -kI;
  q *= r;
  const ComplexMatrix ub = q.adjoint() * u * q;
  const ComplexMatrix m = ub.transpose() * ub;
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  return {tr * tr / (16.0 * det), (tr * tr - tr2) / (4.0 * det)};
}

Angles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-kPi, kPi);
  return {uni(rng), uni(rng), uni(rng)};
}

bool in_chamber(const Angles& t) {
  const double tol = 1e-9;
  return t[0] <= kPi / 4 + tol && t[0] >= t[1] - tol && t[1] >= std::abs(t[2]) - tol &&
         !(std::abs(t[0] - kPi / 4) < tol && t[2] < -tol);
}

}  // namespace

TEST_CASE("canonical_form is exp[i(tx XX + ty YY + tz ZZ)]") {
  Angles th{0.3, -0.7, 1.1};
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 3; ++k) h += th[k] * kron(pauli::sigma(k + 1), pauli::sigma(k + 1));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector ph(4);
  for (int j = 0; j < 4; ++j) ph(j) = std::polar(1.0, es.eigenvalues()(j));
  ComplexMatrix expected = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  CHECK((canonical_form(th) - expected).norm() < 1e-12);
}

TEST_CASE("magic basis makes local unitaries real") {
  ComplexMatrix m = magic_basis();
  CHECK((m.adjoint() * m - ComplexMatrix::Identity(4, 4)).norm() < 1e-14);
  for (int t = 0; t < 10; ++t) {
    ComplexMatrix a = haar_unitary(2, 2 * t), b = haar_unitary(2, 2 * t + 1);
    ComplexMatrix sa = a / std::sqrt(a.determinant()), sb = b / std::sqrt(b.determinant());
    ComplexMatrix l = kron(sa, sb);
    ComplexMatrix o = m.adjoint() * l * m;
    CHECK(o.imag().norm() < 1e-10);
  }
}

TEST_CASE("factor_product") {
  ComplexMatrix a = haar_unitary(2, 1), b = haar_unitary(2, 2);
  auto [fa, fb] = factor_product(kron(a, b));
  CHECK((kron(fa, fb) - kron(a, b)).norm() < 1e-12);
  CHECK_THROWS_AS(factor_product(cnot()), NumericalError);
}

TEST_CASE("known gates") {
  CanonicalDecomposition c = canonical_decompose(cnot());
  CHECK(c.theta[0] == doctest::Approx(kPi / 4).epsilon(1e-10));
  CHECK(std::abs(c.theta[1]) < 1e-10);
  CHECK(std::abs(c.theta[2]) < 1e-10);

  CanonicalDecomposition s = canonical_decompose(swap_gate());
  for (double t : s.theta) CHECK(t == doctest::Approx(kPi / 4).epsilon(1e-10));

  CanonicalDecomposition id = canonical_decompose(random_local(9));
  for (double t : id.theta) CHECK(std::abs(t) < 1e-10);

  CHECK_THROWS_AS(canonical_decompose(2.0 * cnot()), ValidationError);
  CHECK_THROWS_AS(canonical_decompose(ComplexMatrix::Identity(3, 3)), ValidationError);
}

TEST_CASE("canonicalize_angles lands in the chamber and keeps invariants") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Angles raw = random_angles(rng);
    const Angles c = canonicalize_angles(raw);
    CHECK(in_chamber(c));
    auto [g1a, g2a] = makhlin(canonical_form(raw));
    auto [g1b, g2b] = makhlin(canonical_form(c));
    CHECK(std::abs(g1a - g1b) < 1e-9);
    CHECK(std::abs(g2a - g2b) < 1e-9);
  }
}

TEST_CASE("round trip on dressed canonical forms") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Angles th = canonicalize_angles(random_angles(rng));
    ComplexMatrix u = std::polar(1.0, 0.1 * i) * random_local(2 * i) * canonical_form(th) *
                      random_local(2 * i + 1);
    CanonicalDecomposition d = canonical_decompose(u);
    CHECK(d.reconstruction_error <= 1e-8);
    CHECK((d.reconstruct() - u).norm() <= 1e-8);
    CHECK(in_chamber(d.theta));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(d.theta[k] - th[k]) < 1e-7);
  }
}

TEST_CASE("Haar unitaries decompose and match Makhlin invariants") {
  for (int i = 0; i < 200; ++i) {
    ComplexMatrix u = haar_unitary(4, mix_seed(99, i));
    CanonicalDecomposition d = canonical_decompose(u);
    CHECK(d.reconstruction_error <= 1e-8);
    auto [g1a, g2a] = makhlin(u);
    auto [g1b, g2b] = makhlin(canonical_form(d.theta));
    CHECK(std::abs(g1a - g1b) < 1e-8);
    CHECK(std::abs(g2a - g2b) < 1e-8);
    // Schmidt coefficients are twice the canonical coefficient magnitudes
    auto c = canonical_coefficients(d.theta);
    std::vector<double> mags;
    for (auto v : c) mags.push_back(2.0 * std::abs(v));
    std::sort(mags.rbegin(), mags.rend());
    RealVector s = schmidt_coefficients(u, {2, 2});
    for (int k = 0; k < 4; ++k) CHECK(std::abs(s(k) - mags[k]) < 1e-9);
  }
}

TEST_CASE("no two-qubit unitary has Schmidt number 3") {
  int counts[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    int c = schmidt_class(haar_unitary(4, mix_seed(7, i)));
    REQUIRE((c == 1 || c == 2 || c == 4));
    ++counts[c];
  }
  CHECK(counts[4] == 1000);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uni(0.0, kPi / 4);
  for (int i = 0; i < 1000; ++i) {
    Angles th{uni(rng), 0.0, 0.0};
    if (i % 3 == 1) th[1] = uni(rng);
    if (i % 3 == 2) th = {uni(rng), uni(rng), uni(rng)};
    if (i % 10 == 0) th = {0.0, 0.0, 0.0};
    const int c = schmidt_class(random_local(i) * canonical_form(th));
    REQUIRE((c == 1 || c == 2 || c == 4));
    CHECK(c == schmidt_number(canonical_form(th), {2, 2}));
  }
}

TEST_CASE("schmidt_class agrees with schmidt_number") {
  CHECK(schmidt_class(cnot()) == 2);
  CHECK(schmidt_class(swap_gate()) == 4);
  CHECK(schmidt_class(random_local(4)) == 1);
  CHECK(schmidt_class(up_gate(0.2)) == 4);
  CHECK(schmidt_class(controlled_x_form(0.2)) == 2);
}

TEST_CASE("class-2 normal form recovers p") {
  for (int i = 0; i <= 20; ++i) {
    const double p = 0.02 + 0.048 * i;
    if (std::abs(p - 0.5) < 1e-12) continue;
    ComplexMatrix u = random_local(300 + i) * controlled_x_form(p) * random_local(400 + i);
    CHECK(schmidt2_normal_form(u) == doctest::Approx(std::min(p, 1.0 - p)).epsilon(1e-9));
  }
  CHECK(schmidt2_normal_form(cnot()) == doctest::Approx(0.5));
  CHECK_THROWS_AS(schmidt2_normal_form(swap_gate()), ValidationError);
}
