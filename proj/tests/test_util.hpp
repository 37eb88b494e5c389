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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dynstrength/matcore.hpp"

namespace dynstrength::testing {

inline ComplexMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline ComplexMatrix random_local(std::uint64_t seed) {
  return kron(haar_unitary(2, mix_seed(seed, 1)), haar_unitary(2, mix_seed(seed, 2)));
}

inline double entropy_bits(std::initializer_list<double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

// Entropy (bits) of a pure state across left : rest, by permuting the
// amplitudes into a matrix and taking its singular values.
inline double cut_entropy(const ComplexVector& psi, const std::vector<int>& dims,
                          const std::vector<int>& left) {
  const int n = static_cast<int>(dims.size());
  std::vector<bool> is_left(n, false);
  int rows = 1;
  for (int k : left) {
    is_left[k] = true;
    rows *= dims[k];
  }
  const int cols = static_cast<int>(psi.size()) / rows;
  ComplexMatrix m(rows, cols);
  std::vector<int> digit(n, 0);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    long rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      digit[k] = static_cast<int>(rest % dims[k]);
      rest /= dims[k];
    }
    int r = 0, c = 0;
    for (int k = 0; k < n; ++k) {
      if (is_left[k]) r = r * dims[k] + digit[k];
      else c = c * dims[k] + digit[k];
    }
    m(r, c) = psi(idx);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  double h = 0.0, total = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) total += std::pow(svd.singularValues()(i), 2);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double p = std::pow(svd.singularValues()(i), 2) / total;
    if (p > 1e-300) h -= p * std::log2(p);
  }
  return h;
}

inline double binary_h(double p) { return entropy_bits({p, 1.0 - p}); }

}  // namespace dynstrength::testing
