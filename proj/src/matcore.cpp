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

#include "dynstrength/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

namespace dynstrength {

namespace {

int product(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ValidationError("empty parameter in '" + text + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw ValidationError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int as_int(double v, const char* what) {
  if (v != std::floor(v) || v < 0 || v > 1e9) {
    throw ValidationError(std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<int>(v);
}

std::optional<int> exact_sqrt(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("partition must look like dA:dB");
  auto nums = parse_numbers(text.substr(0, colon) + "," + text.substr(colon + 1));
  if (nums.size() != 2) throw ValidationError("partition must look like dA:dB");
  Partition p{as_int(nums[0], "dA"), as_int(nums[1], "dB")};
  if (p.dA < 1 || p.dB < 1) throw ValidationError("partition dimensions must be positive");
  return p;
}

std::string to_string(const Partition& part) {
  return std::to_string(part.dA) + ":" + std::to_string(part.dB);
}

void validate(const PureState& psi) {
  if (psi.dims.empty() || product(psi.dims) != psi.amplitudes.size()) {
    throw ValidationError("pure state dimensions do not match amplitude count");
  }
  if (!psi.amplitudes.allFinite()) throw ValidationError("pure state has non-finite amplitudes");
  if (std::abs(psi.amplitudes.squaredNorm() - 1.0) > 1e-12) {
    throw ValidationError("pure state is not normalized");
  }
}

void validate(const DensityMatrix& rho) {
  const auto& m = rho.matrix;
  if (rho.dims.empty() || m.rows() != m.cols() || product(rho.dims) != m.rows()) {
    throw ValidationError("density matrix dimensions do not match subsystem dims");
  }
  if (!m.allFinite()) throw ValidationError("density matrix has non-finite entries");
  if ((m - m.adjoint()).norm() > 1e-10) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > 1e-10) {
    throw ValidationError("density matrix does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix to_density(const PureState& psi) {
  return {psi.dims, psi.amplitudes * psi.amplitudes.adjoint()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const int n = static_cast<int>(rho.dims.size());
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || std::adjacent_find(keep.begin(), keep.end()) != keep.end() ||
      keep.front() < 0 || keep.back() >= n || static_cast<int>(keep.size()) >= n) {
    throw ValidationError("partial_trace: keep must be a nonempty strict subset of subsystems");
  }
  if (product(rho.dims) != rho.matrix.rows() || rho.matrix.rows() != rho.matrix.cols()) {
    throw ValidationError("partial_trace: matrix does not match dims");
  }
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;

  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(rho.dims[k]);
  const int dk = product(kept_dims);
  const int dt = static_cast<int>(rho.matrix.rows()) / dk;

  // index[t * dk + k] = full basis index with kept multi-index k, traced t
  std::vector<int> index(static_cast<std::size_t>(dk) * dt);
  const int total = static_cast<int>(rho.matrix.rows());
  for (int i = 0; i < total; ++i) {
    int rem = i, k = 0, t = 0, kstride = 1, tstride = 1;
    for (int s = n - 1; s >= 0; --s) {
      int digit = rem % rho.dims[s];
      rem /= rho.dims[s];
      if (kept[s]) {
        k += digit * kstride;
        kstride *= rho.dims[s];
      } else {
        t += digit * tstride;
        tstride *= rho.dims[s];
      }
    }
    index[static_cast<std::size_t>(t) * dk + k] = i;
  }

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int t = 0; t < dt; ++t) {
    const int* row = &index[static_cast<std::size_t>(t) * dk];
    for (int a = 0; a < dk; ++a) {
      for (int b = 0; b < dk; ++b) out(a, b) += rho.matrix(row[a], row[b]);
    }
  }
  return {kept_dims, out};
}

SvdResult svd(const ComplexMatrix& m) {
  if (!m.allFinite()) throw ValidationError("svd: non-finite input");
  SvdResult r;
  if (std::min(m.rows(), m.cols()) <= 16) {
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) throw NumericalError("svd: Jacobi SVD did not converge");
    r = {solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
  } else {
    Eigen::BDCSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) throw NumericalError("svd: BDC SVD did not converge");
    r = {solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
  }
  const double scale = std::max(m.norm(), 1e-300);
  const double err = (m - r.u * r.s.cast<Complex>().asDiagonal() * r.vh).norm();
  if (err > 1e-10 * scale && err > 1e-280) {
    throw NumericalError("svd: reconstruction error " + std::to_string(err / scale));
  }
  return r;
}

RealVector singular_values(const ComplexMatrix& m) {
  if (!m.allFinite()) throw ValidationError("svd: non-finite input");
  if (std::min(m.rows(), m.cols()) <= 16) {
    Eigen::JacobiSVD<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("svd: Jacobi SVD did not converge");
    return solver.singularValues();
  }
  Eigen::BDCSVD<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("svd: BDC SVD did not converge");
  return solver.singularValues();
}

int numerical_rank(const RealVector& s, double rel_tol) {
  if (s.size() == 0) return 0;
  const double smax = s.maxCoeff();
  if (smax <= 0.0) return 0;
  return static_cast<int>((s.array() > rel_tol * smax).count());
}

UnitaryEigen eig_unitary(const ComplexMatrix& u) {
  require_unitary(u, "eig_unitary");
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success) throw NumericalError("eig_unitary: Schur form failed");
  // For a normal matrix the triangular factor is diagonal.
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& q = schur.matrixU();
  const Eigen::Index n = u.rows();

  std::vector<Eigen::Index> order(n);
  for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
  auto phase = [&](Eigen::Index i) {
    double a = std::arg(t(i, i));
    return a <= -std::numbers::pi ? a + 2 * std::numbers::pi : a;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return phase(a) < phase(b); });

  UnitaryEigen out;
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex lam = t(order[k], order[k]);
    out.eigenvalues.push_back(lam / std::abs(lam));
    out.eigenvectors.col(k) = q.col(order[k]);
  }
  return out;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || !u.allFinite()) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

void require_unitary(const ComplexMatrix& u, const char* what, double tol) {
  if (!is_unitary(u, tol)) throw ValidationError(std::string(what) + ": input is not unitary");
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

double operator_norm(const ComplexMatrix& m) {
  RealVector s = singular_values(m);
  return s.size() ? s(0) : 0.0;
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -1e-12) {
      throw ValidationError("shannon_entropy: negative or non-finite probability");
    }
    sum += std::max(v, 0.0);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("shannon_entropy: probabilities do not sum to 1");
  double h = 0.0;
  for (double v : p) {
    double q = std::max(v, 0.0) / sum;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

double shannon_entropy(std::initializer_list<double> p) {
  return shannon_entropy(std::span<const double>(p.begin(), p.size()));
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_of_weights(const RealVector& w) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) sum += std::max(w(i), 0.0);
  if (sum <= 0.0) return 0.0;
  double h = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    double q = std::max(w(i), 0.0) / sum;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  validate(rho);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix, Eigen::EigenvaluesOnly);
  return entropy_of_weights(es.eigenvalues());
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("haar_unitary: dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    double mag = std::abs(rjj);
    q.col(j) *= mag > 0 ? rjj / mag : Complex(1.0);
  }
  return q;
}

ComplexVector haar_state(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("haar_state: dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) {
    double re = normal(rng);
    double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

namespace pauli {
ComplexMatrix i2() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
ComplexMatrix sigma(int k) {
  switch (k) {
    case 0: return i2();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw ValidationError("pauli index must be 0..3");
  }
}
}  // namespace pauli

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix swap_gate(int d) {
  if (d < 1) throw ValidationError("swap: dimension must be positive");
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) m(b * d + a, a * d + b) = 1.0;
  }
  return m;
}

ComplexMatrix toffoli(int target) {
  if (target < 0 || target > 2) throw ValidationError("toffoli: target must be 0, 1 or 2");
  const int tbit = 2 - target;  // bit position inside the basis index
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int b = 0; b < 8; ++b) {
    int controls = 0b111 & ~(1 << tbit);
    int out = (b & controls) == controls ? b ^ (1 << tbit) : b;
    m(out, b) = 1.0;
  }
  return m;
}

ComplexMatrix controlled_x_form(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
  ComplexMatrix xx = kron(pauli::x(), pauli::x());
  return std::sqrt(1.0 - p) * ComplexMatrix::Identity(4, 4) + kI * std::sqrt(p) * xx;
}

ComplexMatrix up_gate(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("up: p must lie in [0,1]");
  ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  ComplexMatrix xx = kron(pauli::x(), pauli::x());
  ComplexMatrix zz = kron(pauli::z(), pauli::z());
  const double a = std::sqrt(1.0 - p), b = std::sqrt(p);
  return (a * id + kI * b * xx) * (a * id + kI * b * zz);
}

ComplexMatrix qft(int qubits) {
  if (qubits < 1 || qubits > 14) throw ValidationError("qft: qubit count must be in 1..14");
  const int n = 1 << qubits;
  ComplexMatrix m(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      // reduce s*t mod n first to keep the phase argument small
      long long k = (static_cast<long long>(s) * t) % n;
      m(t, s) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
    }
  }
  return m;
}

GateSpec GateSpec::parse(const std::string& text) {
  GateSpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (spec.name == "file") {
    if (rest.empty()) throw ValidationError("file gate needs a path: file:PATH");
    spec.path = rest;
    return spec;
  }
  if (colon != std::string::npos) spec.params = parse_numbers(rest);

  const auto& p = spec.params;
  if (spec.name == "cnot" || spec.name == "swap") {
    if (!p.empty()) throw ValidationError(spec.name + " takes no parameters");
  } else if (spec.name == "toffoli") {
    if (p.size() > 1) throw ValidationError("toffoli takes at most one parameter (target)");
    if (p.size() == 1 && as_int(p[0], "toffoli target") > 2) {
      throw ValidationError("toffoli: target must be 0, 1 or 2");
    }
  } else if (spec.name == "up") {
    if (p.size() != 1) throw ValidationError("up needs exactly one parameter: up:p");
    if (!(p[0] >= 0.0 && p[0] <= 1.0)) throw ValidationError("up: p must lie in [0,1]");
  } else if (spec.name == "qft") {
    if (p.empty() || p.size() > 2) throw ValidationError("qft needs qft:l or qft:m,n");
    int total = 0;
    for (double v : p) total += as_int(v, "qft qubit count");
    if (total < 1) throw ValidationError("qft needs at least one qubit");
  } else if (spec.name == "haar") {
    if (p.empty() || p.size() > 2) throw ValidationError("haar needs haar:d or haar:d,seed");
    if (as_int(p[0], "haar dimension") < 1) throw ValidationError("haar: dimension must be positive");
    if (p.size() == 2) as_int(p[1], "haar seed");
  } else {
    throw ValidationError("unknown gate '" + spec.name + "'");
  }
  return spec;
}

std::string GateSpec::to_string() const {
  if (name == "file") return "file:" + path;
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << params[i];
    out += (i == 0 ? ":" : ",") + ss.str();
  }
  return out;
}

ComplexMatrix gate(const GateSpec& spec) {
  const auto& p = spec.params;
  if (spec.name == "cnot") return cnot();
  if (spec.name == "swap") return swap_gate(2);
  if (spec.name == "toffoli") return toffoli(p.empty() ? 2 : static_cast<int>(p[0]));
  if (spec.name == "up") return up_gate(p.at(0));
  if (spec.name == "qft") {
    int total = 0;
    for (double v : p) total += static_cast<int>(v);
    return qft(total);
  }
  if (spec.name == "haar") {
    return haar_unitary(static_cast<int>(p.at(0)),
                        p.size() > 1 ? static_cast<std::uint64_t>(p[1]) : 0);
  }
  if (spec.name == "file") return load_matrix(spec.path);
  throw ValidationError("unknown gate '" + spec.name + "'");
}

std::optional<Partition> default_partition(const GateSpec& spec, int dim) {
  const auto& p = spec.params;
  if (spec.name == "cnot" || spec.name == "swap" || spec.name == "up") return Partition{2, 2};
  if (spec.name == "toffoli") return Partition{2, 4};
  if (spec.name == "qft") {
    if (p.size() == 2) return Partition{1 << static_cast<int>(p[0]), 1 << static_cast<int>(p[1])};
    int l = static_cast<int>(p.at(0));
    return Partition{1 << (l / 2), 1 << (l - l / 2)};
  }
  if (auto r = exact_sqrt(dim)) return Partition{*r, *r};
  return std::nullopt;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ValidationError("matrix JSON needs rows, cols and entries");
  }
  const auto& jr = j["rows"];
  const auto& jc = j["cols"];
  if (!jr.is_number_integer() || !jc.is_number_integer() || jr.get<long long>() < 1 ||
      jc.get<long long>() < 1) {
    throw ValidationError("matrix JSON: rows and cols must be positive integers");
  }
  const auto rows = jr.get<Eigen::Index>();
  const auto cols = jc.get<Eigen::Index>();
  const auto& e = j["entries"];
  if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != rows * cols) {
    throw ValidationError("matrix JSON: entries count must equal rows*cols");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const auto& z = e[static_cast<std::size_t>(k)];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw ValidationError("matrix JSON: each entry must be [re, im]");
    }
    m(k / cols, k % cols) = Complex(z[0].get<double>(), z[1].get<double>());
  }
  if (!m.allFinite()) throw ValidationError("matrix JSON: non-finite entry");
  return m;
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_json(ss.str());
}

}  // namespace dynstrength
