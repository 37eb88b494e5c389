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

// Dense complex linear algebra, standard gates, random ensembles and entropy
// primitives shared by every strength measure.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynstrength/error.hpp"

namespace dynstrength {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Relative tolerance deciding whether a singular value counts as nonzero.
inline constexpr double kRankTolerance = 1e-8;

/// Dimensions (dA, dB) of a bipartite cut A:B.
struct Partition {
  int dA = 1;
  int dB = 1;

  int dim() const { return dA * dB; }
  bool operator==(const Partition&) const = default;
};

/// Parses "dA:dB".
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& part);

struct PureState {
  std::vector<int> dims;
  ComplexVector amplitudes;
};

struct DensityMatrix {
  std::vector<int> dims;
  ComplexMatrix matrix;
};

/// Throws ValidationError unless the state is normalized (1e-12) and matches dims.
void validate(const PureState& psi);
/// Throws ValidationError unless Hermitian, unit trace and PSD (1e-10).
void validate(const DensityMatrix& rho);

DensityMatrix to_density(const PureState& psi);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Reduced density matrix on the subsystems listed in `keep` (any order;
/// kept subsystems stay in their original relative order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

struct SvdResult {
  ComplexMatrix u;
  RealVector s;  // descending
  ComplexMatrix vh;
};

/// Full SVD with singular values sorted descending. Throws NumericalError if
/// the reconstruction postcondition fails.
SvdResult svd(const ComplexMatrix& m);
/// Singular values only, descending.
RealVector singular_values(const ComplexMatrix& m);
/// Number of singular values above `rel_tol * s_max`.
int numerical_rank(const RealVector& s, double rel_tol = kRankTolerance);

struct UnitaryEigen {
  std::vector<Complex> eigenvalues;  // sorted by phase in (-pi, pi]
  ComplexMatrix eigenvectors;        // orthonormal columns
};

/// Spectral decomposition of a unitary matrix through its complex Schur form,
/// which yields orthonormal eigenvectors even inside degenerate blocks.
UnitaryEigen eig_unitary(const ComplexMatrix& u);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-8);
void require_unitary(const ComplexMatrix& u, const char* what, double tol = 1e-8);
double hs_norm(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);

/// Shannon entropy in bits. Entries below -1e-12 are rejected; small negative
/// entries are clamped and the vector renormalized.
double shannon_entropy(std::span<const double> p);
double shannon_entropy(std::initializer_list<double> p);
/// Binary entropy h(p) in bits.
double binary_entropy(double p);
/// Shannon entropy of an unnormalized nonnegative spectrum (clamps, normalizes).
double entropy_of_weights(const RealVector& w);

double von_neumann_entropy(const DensityMatrix& rho);

/// Haar-distributed unitary via QR of a Ginibre matrix, with R's diagonal
/// phases folded into Q. Deterministic for a given seed.
ComplexMatrix haar_unitary(int d, std::uint64_t seed);
/// Haar-random unit vector of dimension d.
ComplexVector haar_state(int d, std::uint64_t seed);

/// SplitMix64 mix; used to derive independent per-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_0..sigma_3 = I, X, Y, Z.
ComplexMatrix sigma(int k);
}  // namespace pauli

ComplexMatrix cnot();
ComplexMatrix swap_gate(int d = 2);
/// Doubly-controlled NOT on three qubits; `target` is the qubit index 0..2
/// (0 is the most significant), the other two are controls.
ComplexMatrix toffoli(int target = 2);
/// (sqrt(1-p) I.I + i sqrt(p) X.X)(sqrt(1-p) I.I + i sqrt(p) Z.Z).
ComplexMatrix up_gate(double p);
/// sqrt(1-p) I.I + i sqrt(p) X.X, the Schmidt-number-2 normal form.
ComplexMatrix controlled_x_form(double p);
/// Quantum Fourier transform on `qubits` qubits, first qubit most significant.
ComplexMatrix qft(int qubits);

/// A gate from the registry: cnot, swap, toffoli[:target], up:p,
/// qft:l or qft:m,n, haar:d[,seed], file:path.
struct GateSpec {
  std::string name;
  std::vector<double> params;
  std::string path;

  static GateSpec parse(const std::string& text);
  std::string to_string() const;
};

ComplexMatrix gate(const GateSpec& spec);
/// The natural cut for a gate when none is given explicitly.
std::optional<Partition> default_partition(const GateSpec& spec, int dim);

/// Matrix JSON: {"rows": N, "cols": M, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);

}  // namespace dynstrength
