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

#include "dynstrength/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dynstrength {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kBoundaryTol = 1e-10;

ComplexMatrix pauli_pair(int k) { return kron(pauli::sigma(k + 1), pauli::sigma(k + 1)); }

// Running form U = e^{i phase} (a1 (x) b1) core(theta) (a2 (x) b2); every
// move below rewrites core(theta) = L core(theta') R and absorbs L, R.
struct Tracker {
  double phase = 0.0;
  ComplexMatrix a1, b1, a2, b2;
  Angles theta{};

  // theta_k -> theta_k - n pi/2 using exp(i pi/2 s.s) = i s.s
  void shift(int k, int n) {
    const ComplexMatrix s = pauli::sigma(k + 1);
    for (int i = 0; i < std::abs(n); ++i) {
      a2 = s * a2;
      b2 = s * b2;
      phase += n > 0 ? kHalfPi : -kHalfPi;
    }
    theta[k] -= n * kHalfPi;
  }

  // Negate theta_k and theta_l by conjugating with sigma_m (x) I.
  void flip(int k, int l) {
    const int m = 3 - k - l;
    const ComplexMatrix s = pauli::sigma(m + 1);
    a1 = a1 * s;
    a2 = s * a2;
    theta[k] = -theta[k];
    theta[l] = -theta[l];
  }

  // Exchange theta_k and theta_l by conjugating with G (x) G, where G maps
  // sigma_k to +-sigma_l and back.
  void exchange(int k, int l) {
    if (k > l) std::swap(k, l);
    ComplexMatrix g(2, 2);
    const double r = 1.0 / std::numbers::sqrt2;
    if (k == 0 && l == 1) {
      g << 1, 0, 0, kI;  // phase gate
    } else if (k == 0 && l == 2) {
      g << r, r, r, -r;  // Hadamard
    } else {
      g << r, -kI * r, -kI * r, r;  // X rotation by pi/2
    }
    const ComplexMatrix gd = g.adjoint();
    a1 = a1 * gd;
    b1 = b1 * gd;
    a2 = g * a2;
    b2 = g * b2;
    std::swap(theta[k], theta[l]);
  }

  void fold(int k) {
    int n = static_cast<int>(std::floor((theta[k] + kQuarterPi) / kHalfPi));
    double rest = theta[k] - n * kHalfPi;
    if (rest <= -kQuarterPi + kBoundaryTol) --n;
    if (n != 0) shift(k, n);
  }

  void canonicalize() {
    for (int k = 0; k < 3; ++k) fold(k);
    // sort by magnitude, descending
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < 2; ++k) {
        if (std::abs(theta[k]) < std::abs(theta[k + 1])) exchange(k, k + 1);
      }
    }
    if (theta[0] < 0 && theta[1] < 0) {
      flip(0, 1);
    } else if (theta[0] < 0) {
      flip(0, 2);
    } else if (theta[1] < 0) {
      flip(1, 2);
    }
    fold(2);
    // On the tx = pi/4 face, tz and -tz are equivalent; keep tz >= 0.
    if (std::abs(theta[0] - kQuarterPi) < kBoundaryTol && theta[2] < 0) {
      flip(0, 2);
      fold(0);
    }
  }
};

// Real orthogonal O with O^T M O diagonal, for complex symmetric unitary M.
// Re(M) and Im(M) commute, so a generic real combination of them shares
// their eigenbasis; several mixing weights guard against accidental ties.
Eigen::Matrix4d symmetric_unitary_eigenbasis(const ComplexMatrix& m) {
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  constexpr double weights[] = {0.0, 0.6180339887, -1.4142135623, 2.7182818284, 0.3183098861,
                                -5.0};
  Eigen::Matrix4d best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (double w : weights) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re + w * im);
    const Eigen::Matrix4d o = es.eigenvectors();
    ComplexMatrix d = o.transpose().cast<Complex>() * m * o.cast<Complex>();
    d.diagonal().setZero();
    const double residual = d.norm();
    if (residual < best_residual) {
      best_residual = residual;
      best = o;
    }
    if (residual < 1e-13) break;
  }
  if (best_residual > 1e-9) {
    throw NumericalError("canonical_decompose: could not diagonalize the magic-basis square");
  }
  return best;
}

}  // namespace

ComplexMatrix magic_basis() {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m(4, 4);
  m << r, kI * r, 0, 0,
       0, 0, kI * r, r,
       0, 0, kI * r, -r,
       r, -kI * r, 0, 0;
  return m;
}

std::pair<ComplexMatrix, ComplexMatrix> factor_product(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ValidationError("factor_product: need a 4x4 matrix");
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double n = m.block(2 * i, 2 * j, 2, 2).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  }
  if (!(best > 0.0)) throw NumericalError("factor_product: zero matrix");
  ComplexMatrix b = m.block(2 * bi, 2 * bj, 2, 2) * (std::numbers::sqrt2 / best);
  ComplexMatrix a(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) a(i, j) = (b.adjoint() * m.block(2 * i, 2 * j, 2, 2)).trace() / 2.0;
  }
  if ((kron(a, b) - m).norm() > 1e-8) throw NumericalError("factor_product: not a tensor product");
  return {a, b};
}

ComplexMatrix CanonicalDecomposition::reconstruct() const {
  return std::polar(1.0, global_phase) * kron(a1, b1) * canonical_form(theta) * kron(a2, b2);
}

std::array<Complex, 4> canonical_coefficients(const Angles& t) {
  const double cx = std::cos(t[0]), cy = std::cos(t[1]), cz = std::cos(t[2]);
  const double sx = std::sin(t[0]), sy = std::sin(t[1]), sz = std::sin(t[2]);
  return {Complex(cx * cy * cz, sx * sy * sz), Complex(cx * sy * sz, sx * cy * cz),
          Complex(sx * cy * sz, cx * sy * cz), Complex(sx * sy * cz, cx * cy * sz)};
}

ComplexMatrix canonical_form(const Angles& theta) {
  const auto c = canonical_coefficients(theta);
  ComplexMatrix u = c[0] * ComplexMatrix::Identity(4, 4);
  for (int k = 0; k < 3; ++k) u += c[k + 1] * pauli_pair(k);
  return u;
}

CanonicalDecomposition canonical_decompose(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw ValidationError("canonical_decompose: need a 4x4 unitary");
  require_unitary(u, "canonical_decompose");

  const double phase0 = std::arg(u.determinant()) / 4.0;
  const ComplexMatrix us = u * std::polar(1.0, -phase0);
  const ComplexMatrix mb = magic_basis();
  const ComplexMatrix up = mb.adjoint() * us * mb;
  const ComplexMatrix square = up.transpose() * up;

  Eigen::Matrix4d o = symmetric_unitary_eigenbasis(square);
  if (o.determinant() < 0) o.col(0) = -o.col(0);
  const ComplexMatrix oc = o.cast<Complex>();
  const ComplexMatrix diag = oc.transpose() * square * oc;

  ComplexVector root(4);
  for (int j = 0; j < 4; ++j) root(j) = std::sqrt(diag(j, j) / std::abs(diag(j, j)));
  ComplexMatrix k1 = up * oc * root.cwiseInverse().asDiagonal();
  if (k1.determinant().real() < 0) {
    root(0) = -root(0);
    k1.col(0) = -k1.col(0);
  }
  if (k1.imag().norm() > 1e-6) throw NumericalError("canonical_decompose: left factor is not real");
  const ComplexMatrix k1r = k1.real().cast<Complex>();

  // Phases of the magic-basis eigenvalues are phi + sum_k h_jk theta_k.
  Eigen::Matrix4d system;
  Eigen::Vector4d phases;
  for (int j = 0; j < 4; ++j) {
    system(j, 0) = 1.0;
    for (int k = 0; k < 3; ++k) {
      system(j, k + 1) = (mb.col(j).adjoint() * pauli_pair(k) * mb.col(j))(0, 0).real();
    }
    phases(j) = std::arg(root(j));
  }
  const Eigen::Vector4d sol = system.partialPivLu().solve(phases);

  Tracker t;
  t.phase = phase0 + sol(0);
  t.theta = {sol(1), sol(2), sol(3)};
  std::tie(t.a1, t.b1) = factor_product(mb * k1r * mb.adjoint());
  std::tie(t.a2, t.b2) = factor_product(mb * oc.transpose() * mb.adjoint());
  t.canonicalize();

  CanonicalDecomposition out;
  out.theta = t.theta;
  out.a1 = t.a1;
  out.b1 = t.b1;
  out.a2 = t.a2;
  out.b2 = t.b2;
  out.global_phase = std::remainder(t.phase, 2.0 * std::numbers::pi);
  out.reconstruction_error = (out.reconstruct() - u).norm();
  if (out.reconstruction_error > 1e-8) {
    throw NumericalError("canonical_decompose: reconstruction error " +
                         std::to_string(out.reconstruction_error));
  }
  return out;
}

Angles canonicalize_angles(Angles theta) {
  Tracker t;
  t.a1 = t.b1 = t.a2 = t.b2 = ComplexMatrix::Identity(2, 2);
  t.theta = theta;
  t.canonicalize();
  return t.theta;
}

int schmidt_class(const ComplexMatrix& u, double rel_tol) {
  const auto c = canonical_coefficients(canonical_decompose(u).theta);
  double top = 0.0;
  for (const auto& v : c) top = std::max(top, std::abs(v));
  int count = 0;
  for (const auto& v : c) count += std::abs(v) > rel_tol * top ? 1 : 0;
  if (count == 3) {
    throw NumericalError("schmidt_class: found Schmidt number 3, which no two-qubit unitary has; "
                         "the tolerance is misconfigured");
  }
  return count;
}

double schmidt2_normal_form(const ComplexMatrix& u) {
  const int cls = schmidt_class(u);
  if (cls != 2) {
    throw ValidationError("schmidt2_normal_form needs Schmidt class 2, got " + std::to_string(cls));
  }
  const double s = std::sin(canonical_decompose(u).theta[0]);
  return std::min(s * s, 1.0 - s * s);
}

}  // namespace dynstrength
