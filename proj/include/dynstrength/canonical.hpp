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

// Two-qubit canonical decomposition
//   U = e^{i phi} (A1 (x) B1) exp[i(tx XX + ty YY + tz ZZ)] (A2 (x) B2)
// and the Schmidt-class results that follow from it.

#include <array>

#include "dynstrength/matcore.hpp"

namespace dynstrength {

using Angles = std::array<double, 3>;

struct CanonicalDecomposition {
  Angles theta{};  // tx >= ty >= |tz|, each in (-pi/4, pi/4]
  ComplexMatrix a1, b1;  // post-local
  ComplexMatrix a2, b2;  // pre-local
  double global_phase = 0.0;
  double reconstruction_error = 0.0;  // HS norm

  ComplexMatrix reconstruct() const;
};

/// Decomposes a two-qubit unitary. Throws ValidationError for non-unitary
/// input and NumericalError if the result does not reproduce U within 1e-8.
CanonicalDecomposition canonical_decompose(const ComplexMatrix& u);

/// exp[i(tx XX + ty YY + tz ZZ)] for arbitrary angles.
ComplexMatrix canonical_form(const Angles& theta);

/// Coefficients of I.I, X.X, Y.Y, Z.Z in canonical_form(theta). Their
/// magnitudes are half the operator-Schmidt coefficients.
std::array<Complex, 4> canonical_coefficients(const Angles& theta);

/// Reduces an angle triple to the Weyl-chamber representative used by
/// canonical_decompose (fold by pi/2, sort by magnitude, signs on tz).
Angles canonicalize_angles(Angles theta);

/// Schmidt number of a two-qubit unitary from its canonical coefficients;
/// always 1, 2 or 4. A count of 3 means the tolerance is misconfigured and
/// raises NumericalError.
int schmidt_class(const ComplexMatrix& u, double rel_tol = kRankTolerance);

/// The p <= 1/2 for which U is locally equivalent to
/// sqrt(1-p) I.I + i sqrt(p) X.X. Requires Schmidt class 2.
double schmidt2_normal_form(const ComplexMatrix& u);

/// Magic (phase-adjusted Bell) basis as columns; local unitaries become real
/// orthogonal matrices in this basis.
ComplexMatrix magic_basis();

/// Writes a 4x4 product operator as A (x) B. Throws NumericalError when the
/// input is not a tensor product within 1e-8.
std::pair<ComplexMatrix, ComplexMatrix> factor_product(const ComplexMatrix& m);

}  // namespace dynstrength
