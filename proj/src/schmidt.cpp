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

#include "dynstrength/schmidt.hpp"

#include <cmath>

namespace dynstrength {

namespace {

void check_dims(const ComplexMatrix& q, const Partition& part) {
  if (part.dA < 1 || part.dB < 1) throw ValidationError("partition dimensions must be positive");
  if (q.rows() != q.cols() || q.rows() != part.dim()) {
    throw ValidationError("operator dimension " + std::to_string(q.rows()) + "x" +
                          std::to_string(q.cols()) + " does not match partition " +
                          to_string(part));
  }
}

}  // namespace

ComplexMatrix SchmidtDecomposition::reconstruct() const {
  ComplexMatrix q = ComplexMatrix::Zero(partition.dim(), partition.dim());
  for (Eigen::Index l = 0; l < coefficients.size(); ++l) {
    q += coefficients(l) * kron(left_ops[l], right_ops[l]);
  }
  return q;
}

ComplexMatrix realign(const ComplexMatrix& q, const Partition& part) {
  check_dims(q, part);
  const int dA = part.dA, dB = part.dB;
  ComplexMatrix r(dA * dA, dB * dB);
  for (int j = 0; j < dA; ++j) {
    for (int k = 0; k < dA; ++k) {
      for (int jp = 0; jp < dB; ++jp) {
        for (int kp = 0; kp < dB; ++kp) {
          r(j * dA + k, jp * dB + kp) = q(j * dB + jp, k * dB + kp);
        }
      }
    }
  }
  return r;
}

SchmidtDecomposition operator_schmidt(const ComplexMatrix& q, const Partition& part,
                                      double rel_tol) {
  const SvdResult f = svd(realign(q, part));
  const int count = numerical_rank(f.s, rel_tol);
  SchmidtDecomposition out;
  out.partition = part;
  out.coefficients = f.s.head(count);
  for (int l = 0; l < count; ++l) {
    ComplexMatrix a(part.dA, part.dA), b(part.dB, part.dB);
    for (int j = 0; j < part.dA; ++j) {
      for (int k = 0; k < part.dA; ++k) a(j, k) = f.u(j * part.dA + k, l);
    }
    for (int j = 0; j < part.dB; ++j) {
      for (int k = 0; k < part.dB; ++k) b(j, k) = f.vh(l, j * part.dB + k);
    }
    out.left_ops.push_back(std::move(a));
    out.right_ops.push_back(std::move(b));
  }
  return out;
}

RealVector schmidt_coefficients(const ComplexMatrix& q, const Partition& part) {
  return singular_values(realign(q, part));
}

int schmidt_number(const ComplexMatrix& q, const Partition& part, double rel_tol) {
  return numerical_rank(schmidt_coefficients(q, part), rel_tol);
}

double k_har(const ComplexMatrix& q, const Partition& part, double rel_tol) {
  const int n = schmidt_number(q, part, rel_tol);
  if (n == 0) throw ValidationError("k_har: zero operator");
  return std::log2(static_cast<double>(n));
}

double k_sch_from_coefficients(const RealVector& s) {
  const double total = s.squaredNorm();
  if (!(total > 0.0)) throw ValidationError("k_sch: zero operator");
  return entropy_of_weights(s.array().square().matrix() / total);
}

double k_sch(const ComplexMatrix& q, const Partition& part) {
  return k_sch_from_coefficients(schmidt_coefficients(q, part));
}

double linear_entropy(const ComplexMatrix& u, const Partition& part) {
  check_dims(u, part);
  require_unitary(u, "linear_entropy");
  const RealVector s = schmidt_coefficients(u, part);
  const double n = static_cast<double>(part.dim());
  return 1.0 - s.array().pow(4).sum() / (n * n);
}

double operator_concurrence(const ComplexMatrix& u, const Partition& part) {
  check_dims(u, part);
  require_unitary(u, "operator_concurrence");
  const RealVector s = schmidt_coefficients(u, part);
  const int count = numerical_rank(s);
  if (count != 2) {
    throw ValidationError("operator_concurrence needs Schmidt number 2, got " +
                          std::to_string(count));
  }
  return 2.0 * s(0) * s(1) / part.dim();
}

QftSchmidtSummary qft_schmidt_reference(int m, int n) {
  if (m < 0 || n < 0) throw ValidationError("qft_schmidt_reference: negative qubit count");
  if (m > n) {
    throw ValidationError("qft_schmidt_reference: closed form only established for m <= n");
  }
  if (m + n > 12) throw ValidationError("qft_schmidt_reference: m+n must be <= 12");
  return {1 << (2 * m), std::sqrt(static_cast<double>(1 << (n - m)))};
}

}  // namespace dynstrength
