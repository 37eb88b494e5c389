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

// Operator-Schmidt decomposition and the strengths read directly off the
// Schmidt coefficients.

#include <vector>

#include "dynstrength/matcore.hpp"

namespace dynstrength {

/// Q = sum_l s_l A_l (x) B_l with {A_l}, {B_l} orthonormal under tr(X^dag Y).
struct SchmidtDecomposition {
  Partition partition;
  RealVector coefficients;  // descending, only the nonzero ones
  std::vector<ComplexMatrix> left_ops;
  std::vector<ComplexMatrix> right_ops;

  ComplexMatrix reconstruct() const;
};

/// Realignment Q~_{(j,k),(j',k')} = Q_{(j,j'),(k,k')}: rows index the A
/// operator basis |j><k|, columns the B operator basis |j'><k'|.
///
/// Worked example (dA = dB = 2): Q_{(j,j'),(k,k')} is the entry of Q in row
/// 2j+j', column 2k+k'; it lands in Q~ at row 2j+k, column 2j'+k'. For
/// Q = |0><0| (x) I, the only nonzero row of Q~ is row 0 (A = |0><0|) and it
/// holds vec(I) = (1,0,0,1).
ComplexMatrix realign(const ComplexMatrix& q, const Partition& part);

/// Full decomposition. Coefficients at or below the rank tolerance are dropped.
SchmidtDecomposition operator_schmidt(const ComplexMatrix& q, const Partition& part,
                                      double rel_tol = kRankTolerance);
/// All min(dA^2, dB^2) singular values of the realigned matrix, descending.
RealVector schmidt_coefficients(const ComplexMatrix& q, const Partition& part);

int schmidt_number(const ComplexMatrix& q, const Partition& part, double rel_tol = kRankTolerance);
double k_har(const ComplexMatrix& q, const Partition& part, double rel_tol = kRankTolerance);
/// Shannon entropy of s_l^2 / tr(Q^dag Q). Throws ValidationError for Q = 0.
double k_sch(const ComplexMatrix& q, const Partition& part);
/// K_Sch from a precomputed spectrum.
double k_sch_from_coefficients(const RealVector& s);
/// Operator linear entropy 1 - sum s_l^4 / (dA dB)^2 of a unitary.
double linear_entropy(const ComplexMatrix& u, const Partition& part);
/// 2 s_1 s_2 / (dA dB); only defined for Schmidt number exactly 2.
double operator_concurrence(const ComplexMatrix& u, const Partition& part);

/// Closed-form Schmidt spectrum of the (m+n)-qubit Fourier transform cut
/// after the first m qubits, valid for m <= n.
struct QftSchmidtSummary {
  int count = 0;
  double coefficient = 0.0;
};
QftSchmidtSummary qft_schmidt_reference(int m, int n);

}  // namespace dynstrength
