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

#include "dynstrength/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dynstrength/schmidt.hpp"

namespace dynstrength {

namespace {

std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
  return s;
}

long product_of(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<long>());
}

void check_subsystems(const std::vector<int>& dims, const std::vector<int>& idx, const char* what) {
  std::vector<bool> seen(dims.size(), false);
  for (int i : idx) {
    if (i < 0 || i >= static_cast<int>(dims.size()) || seen[i]) {
      throw ValidationError(std::string(what) + ": invalid or repeated subsystem index");
    }
    seen[i] = true;
  }
}

// Offsets of every joint digit assignment of `subs` (first listed is most significant).
std::vector<long> offsets_of(const std::vector<int>& dims, const std::vector<int>& subs) {
  const auto strides = strides_of(dims);
  std::vector<long> out{0};
  for (int s : subs) {
    std::vector<long> next;
    next.reserve(out.size() * dims[s]);
    for (long base : out) {
      for (int d = 0; d < dims[s]; ++d) next.push_back(base + d * strides[s]);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& subs) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (std::find(subs.begin(), subs.end(), i) == subs.end()) rest.push_back(i);
  }
  return rest;
}

// Entropy of the reduced state of a (possibly unnormalized) bipartite matrix.
double matrix_entropy(const ComplexMatrix& psi) {
  const ComplexMatrix rho = psi.rows() <= psi.cols() ? ComplexMatrix(psi * psi.adjoint())
                                                     : ComplexMatrix(psi.adjoint() * psi);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  return entropy_of_weights(es.eigenvalues());
}

double vector_entropy(const ComplexVector& amps, const std::vector<int>& dims,
                      const std::vector<int>& left) {
  const auto rows = offsets_of(dims, left);
  const auto cols = offsets_of(dims, complement(static_cast<int>(dims.size()), left));
  ComplexMatrix m(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) m(i, j) = amps(rows[i] + cols[j]);
  }
  return matrix_entropy(m);
}

ComplexVector max_entangled(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int a = 0; a < d; ++a) v(a * d + a) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

// Unit vector on A (x) R with the first min(d, r) levels maximally correlated.
ComplexVector max_entangled(int d, int r) {
  const int k = std::min(d, r);
  ComplexVector v = ComplexVector::Zero(d * r);
  for (int a = 0; a < k; ++a) v(a * r + a) = 1.0 / std::sqrt(static_cast<double>(k));
  return v;
}

// U (alpha (x) beta) across A R_A : B R_B from the operator-Schmidt form.
class ProbeEvaluator {
 public:
  ProbeEvaluator(const ComplexMatrix& u, const Partition& part, int ra, int rb)
      : dec_(operator_schmidt(u, part)), ra_(ra), rb_(rb) {}

  double operator()(const ComplexVector& alpha, const ComplexVector& beta) const {
    const Partition& p = dec_.partition;
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        am(alpha.data(), p.dA, ra_), bm(beta.data(), p.dB, rb_);
    const auto terms = static_cast<Eigen::Index>(dec_.coefficients.size());
    ComplexMatrix left(p.dA * ra_, terms), right(p.dB * rb_, terms);
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> tmp;
    for (Eigen::Index l = 0; l < terms; ++l) {
      tmp = dec_.left_ops[l] * am;
      left.col(l) = Eigen::Map<const ComplexVector>(tmp.data(), tmp.size()) * dec_.coefficients(l);
      tmp = dec_.right_ops[l] * bm;
      right.col(l) = Eigen::Map<const ComplexVector>(tmp.data(), tmp.size());
    }
    return matrix_entropy(left * right.transpose());
  }

 private:
  SchmidtDecomposition dec_;
  int ra_, rb_;
};

StrengthReport report_from(const std::string& measure, double value, BoundKind kind,
                           const OptimizeResult& r) {
  StrengthReport rep;
  rep.measure = measure;
  rep.value = std::max(value, 0.0);
  rep.bound_kind = kind;
  rep.evals = r.evals;
  rep.restarts_used = r.restarts_used;
  rep.best_restart = r.best_restart;
  rep.converged = r.converged;
  return rep;
}

void check_probe_input(const ComplexMatrix& u, const Partition& part, const char* what) {
  if (part.dA < 1 || part.dB < 1 || u.rows() != part.dim() || u.cols() != part.dim()) {
    throw ValidationError(std::string(what) + ": operator does not match partition " +
                          to_string(part));
  }
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
  }
  return "exact";
}

double entanglement(const PureState& state, const std::vector<int>& left) {
  validate(state);
  check_subsystems(state.dims, left, "entanglement");
  if (left.empty() || left.size() == state.dims.size()) {
    throw ValidationError("entanglement: the cut must leave both sides nonempty");
  }
  return vector_entropy(state.amplitudes, state.dims, left);
}

PureState apply_operator(const PureState& state, const ComplexMatrix& op,
                         const std::vector<int>& targets) {
  check_subsystems(state.dims, targets, "apply_operator");
  if (product_of(state.dims) != state.amplitudes.size()) {
    throw ValidationError("apply_operator: amplitudes do not match dims");
  }
  const auto inner = offsets_of(state.dims, targets);
  const auto outer = offsets_of(state.dims, complement(static_cast<int>(state.dims.size()), targets));
  if (op.rows() != static_cast<Eigen::Index>(inner.size()) || op.cols() != op.rows()) {
    throw ValidationError("apply_operator: operator size does not match the target subsystems");
  }
  PureState out{state.dims, ComplexVector(state.amplitudes.size())};
  ComplexVector v(inner.size());
  for (long base : outer) {
    for (size_t j = 0; j < inner.size(); ++j) v(j) = state.amplitudes(base + inner[j]);
    const ComplexVector w = op * v;
    for (size_t j = 0; j < inner.size(); ++j) out.amplitudes(base + inner[j]) = w(j);
  }
  return out;
}

double k_sch_probe(const ComplexMatrix& q, const Partition& part) {
  check_probe_input(q, part, "k_sch_probe");
  PureState in{{part.dA, part.dA, part.dB, part.dB},
               kron(max_entangled(part.dA), max_entangled(part.dB))};
  PureState out = apply_operator(in, q, {0, 2});
  const double norm = out.amplitudes.norm();
  if (!(norm > 1e-150)) throw ValidationError("k_sch_probe: zero operator");
  out.amplitudes /= norm;
  return entanglement(out, {0, 1});
}

double probe_entanglement(const ComplexMatrix& u, const Partition& part, const ProductProbe& probe) {
  check_probe_input(u, part, "probe_entanglement");
  const auto [ra, rb] = probe.ancilla_dims;
  if (probe.alpha.size() != part.dA * ra || probe.beta.size() != part.dB * rb) {
    throw ValidationError("probe_entanglement: probe dimensions do not match");
  }
  PureState in{{part.dA, ra, part.dB, rb}, kron(probe.alpha, probe.beta)};
  return entanglement(apply_operator(in, u, {0, 2}), {0, 1});
}

StrengthReport k_e(const ComplexMatrix& u, const Partition& part, const OptimizerConfig& cfg,
                   const KeOptions& opts) {
  check_probe_input(u, part, "k_e");
  require_unitary(u, "k_e");
  cfg.validate();
  const int ra = opts.ancilla_dims.first > 0 ? opts.ancilla_dims.first : part.dA;
  const int rb = opts.ancilla_dims.second > 0 ? opts.ancilla_dims.second : part.dB;
  const ProbeEvaluator eval(u, part, ra, rb);
  const int na = 2 * part.dA * ra, nb = 2 * part.dB * rb;

  const Objective f = [&](std::span<const double> x) {
    const ComplexVector a = unit_vector(x.subspan(0, na));
    const ComplexVector b = unit_vector(x.subspan(na, nb));
    if (a.squaredNorm() == 0.0 || b.squaredNorm() == 0.0) return 0.0;
    return -eval(a, b);
  };
  std::vector<std::vector<double>> warm;
  if (opts.probe_warm_start) {
    auto x = unit_vector_params(max_entangled(part.dA, ra));
    auto y = unit_vector_params(max_entangled(part.dB, rb));
    x.insert(x.end(), y.begin(), y.end());
    warm.push_back(std::move(x));
  }
  const OptimizeResult r = minimize(f, gaussian_start(na + nb), cfg, warm);

  StrengthReport rep = report_from("k_e", -r.value, BoundKind::lower, r);
  const std::span<const double> xs(r.x);
  rep.witness = ProductProbe{unit_vector(xs.subspan(0, na)), unit_vector(xs.subspan(na, nb)), {ra, rb}};
  return rep;
}

std::pair<double, double> delta_e_terms(const ComplexMatrix& u, const Partition& part,
                                        std::pair<int, int> ancilla_dims, const ComplexVector& psi) {
  const auto [ra, rb] = ancilla_dims;
  const int dA = part.dA, dB = part.dB;
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      before(psi.data(), dA * ra, dB * rb);
  // rows (a, b), columns (ra, rb) so that U acts from the left
  ComplexMatrix m(dA * dB, ra * rb);
  for (int a = 0; a < dA; ++a)
    for (int x = 0; x < ra; ++x)
      for (int b = 0; b < dB; ++b)
        for (int y = 0; y < rb; ++y) m(a * dB + b, x * rb + y) = before(a * ra + x, b * rb + y);
  const ComplexMatrix um = u * m;
  ComplexMatrix after(dA * ra, dB * rb);
  for (int a = 0; a < dA; ++a)
    for (int x = 0; x < ra; ++x)
      for (int b = 0; b < dB; ++b)
        for (int y = 0; y < rb; ++y) after(a * ra + x, b * rb + y) = um(a * dB + b, x * rb + y);
  return {matrix_entropy(before), matrix_entropy(after)};
}

StrengthReport k_delta_e(const ComplexMatrix& u, const Partition& part,
                         std::pair<int, int> ancilla_dims, const OptimizerConfig& cfg,
                         const std::vector<ComplexVector>& warm_states) {
  check_probe_input(u, part, "k_delta_e");
  require_unitary(u, "k_delta_e");
  cfg.validate();
  const auto [ra, rb] = ancilla_dims;
  if (ra < 1 || rb < 1) throw ValidationError("k_delta_e: ancilla dimensions must be positive");
  const int dim = part.dA * ra * part.dB * rb;

  const Objective f = [&](std::span<const double> x) {
    const ComplexVector psi = unit_vector(x);
    if (psi.squaredNorm() == 0.0) return 0.0;
    auto [e0, e1] = delta_e_terms(u, part, ancilla_dims, psi);
    return -std::abs(e1 - e0);
  };
  std::vector<std::vector<double>> warm;
  warm.push_back(unit_vector_params(kron(max_entangled(part.dA, ra), max_entangled(part.dB, rb))));
  for (const auto& w : warm_states) {
    if (w.size() != dim) throw ValidationError("k_delta_e: warm state has the wrong dimension");
    warm.push_back(unit_vector_params(w));
  }
  const OptimizeResult r = minimize(f, gaussian_start(2 * dim), cfg, warm);
  StrengthReport rep = report_from("k_delta_e", -r.value, BoundKind::lower, r);
  rep.witness_state = unit_vector(r.x);
  return rep;
}

SuperadditivityPoint superadditivity_gap(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("superadditivity_gap: p must lie in [0,1]");
  const ComplexMatrix u = controlled_x_form(p);
  // order A1 B1 A2 B2; Bell pairs on (A1, A2) and (B1, B2)
  PureState psi{{2, 2, 2, 2}, ComplexVector::Zero(16)};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) psi.amplitudes(((a * 2 + b) * 2 + a) * 2 + b) = 0.5;
  psi = apply_operator(apply_operator(psi, u, {0, 1}), u, {2, 3});

  SuperadditivityPoint out;
  out.p = p;
  out.two_copy_probe = entanglement(psi, {0, 2});
  out.h_sq = binary_entropy((1.0 - 2.0 * p) * (1.0 - 2.0 * p));
  out.two_h = 2.0 * binary_entropy(p);
  out.gap = out.h_sq - out.two_h;
  return out;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.matrix.rows() != 4 || rho.matrix.cols() != 4) {
    throw ValidationError("concurrence: need a two-qubit density matrix");
  }
  validate(rho);
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * rho.matrix.conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix);
  const RealVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix root = es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
                             es.eigenvectors().adjoint();
  ComplexMatrix r = root * flipped * root;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> rs(r, Eigen::EigenvaluesOnly);
  RealVector lam = rs.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double eof_two_qubit(const DensityMatrix& rho) {
  const double c = std::min(concurrence(rho), 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

void KrausChannel::validate() const {
  if (elements.empty()) throw ValidationError("channel: no operation elements");
  const int d = in_partition.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& g : elements) {
    if (g.rows() != d || g.cols() != d) {
      throw ValidationError("channel: element size does not match partition " +
                            dynstrength::to_string(in_partition));
    }
    sum += g.adjoint() * g;
  }
  if ((sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
    throw ValidationError("channel: elements are not trace preserving");
  }
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  const int d = in_partition.dim();
  if (rho.matrix.rows() != d || rho.matrix.cols() != d) {
    throw ValidationError("channel: input state has the wrong dimension");
  }
  DensityMatrix out{{in_partition.dA, in_partition.dB}, ComplexMatrix::Zero(d, d)};
  for (const auto& g : elements) out.matrix += g * rho.matrix * g.adjoint();
  return out;
}

KrausChannel unitary_channel(const ComplexMatrix& u, const Partition& part) {
  require_unitary(u, "unitary_channel");
  KrausChannel ch{part, {u}};
  ch.validate();
  return ch;
}

// Weyl operators X^j Z^k on a d-level system.
std::vector<ComplexMatrix> weyl_operators(int d) {
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  std::vector<ComplexMatrix> out;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      ComplexMatrix w = ComplexMatrix::Zero(d, d);
      for (int s = 0; s < d; ++s) w((s + j) % d, s) = std::pow(omega, k * s);
      out.push_back(std::move(w));
    }
  }
  return out;
}

KrausChannel completely_depolarizing(const Partition& part) {
  const double d = part.dim();
  KrausChannel ch{part, {}};
  for (const auto& a : weyl_operators(part.dA))
    for (const auto& b : weyl_operators(part.dB)) ch.elements.push_back(kron(a, b) / d);
  return ch;
}

KrausChannel random_channel(const Partition& part, int kraus, std::uint64_t seed) {
  if (kraus < 1) throw ValidationError("random_channel: need at least one element");
  const int d = part.dim();
  const ComplexMatrix v = haar_unitary(d * kraus, seed);
  KrausChannel ch{part, {}};
  for (int j = 0; j < kraus; ++j) ch.elements.push_back(v.block(j * d, 0, d, d));
  return ch;
}

DensityMatrix channel_probe_state(const KrausChannel& channel) {
  channel.validate();
  const Partition& p = channel.in_partition;
  PureState in{{p.dA, p.dA, p.dB, p.dB}, kron(max_entangled(p.dA), max_entangled(p.dB))};
  const long n = in.amplitudes.size();
  DensityMatrix sigma{in.dims, ComplexMatrix::Zero(n, n)};
  for (const auto& g : channel.elements) {
    const ComplexVector v = apply_operator(in, g, {0, 2}).amplitudes;
    sigma.matrix += v * v.adjoint();
  }
  return sigma;
}

StrengthReport k_e_channel(const KrausChannel& channel, const OptimizerConfig& cfg) {
  channel.validate();
  cfg.validate();
  if (!(channel.in_partition == Partition{2, 2})) {
    throw ValidationError("k_e_channel: only two-qubit channels are supported");
  }
  const Objective f = [&](std::span<const double> x) {
    const ComplexVector a = unit_vector(x.subspan(0, 4));
    const ComplexVector b = unit_vector(x.subspan(4, 4));
    if (a.squaredNorm() == 0.0 || b.squaredNorm() == 0.0) return 0.0;
    const ComplexVector ab = kron(a, b);
    DensityMatrix out = channel.apply({{2, 2}, ab * ab.adjoint()});
    out.matrix = 0.5 * (out.matrix + out.matrix.adjoint());
    return -eof_two_qubit(out);
  };
  const OptimizeResult r = minimize(f, gaussian_start(8), cfg);
  StrengthReport rep = report_from("k_e_channel", -r.value, BoundKind::lower, r);
  const std::span<const double> xs(r.x);
  rep.witness = ProductProbe{unit_vector(xs.subspan(0, 4)), unit_vector(xs.subspan(4, 4)), {1, 1}};
  return rep;
}

StrengthReport k_sch_channel(const KrausChannel& channel, int enlarge, const OptimizerConfig& cfg) {
  channel.validate();
  cfg.validate();
  if (enlarge < 0) throw ValidationError("k_sch_channel: enlarge must be nonnegative");
  const Partition part = channel.in_partition;
  const int k = static_cast<int>(channel.elements.size());
  const int n = k + enlarge;
  const double d = part.dim();

  const auto cost = [&](const ComplexMatrix& w) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      ComplexMatrix f = ComplexMatrix::Zero(part.dim(), part.dim());
      for (int i = 0; i < k; ++i) f += w(j, i) * channel.elements[i];
      const double weight = f.squaredNorm() / d;
      if (weight < 1e-14) continue;
      total += weight * k_sch_from_coefficients(schmidt_coefficients(f, part));
    }
    return total;
  };
  if (k == 1) {
    // every mixing of a single element is a rescaled copy of it
    return report_from("k_sch_channel", k_sch(channel.elements[0], part), BoundKind::exact,
                       OptimizeResult{});
  }
  const Objective f = [&](std::span<const double> x) { return cost(unitary_from_params(x, n)); };
  const std::vector<std::vector<double>> warm{std::vector<double>(n * n, 0.0)};
  const OptimizeResult r = minimize(f, gaussian_start(n * n), cfg, warm);
  return report_from("k_sch_channel", r.value, BoundKind::upper, r);
}

StrengthReport eof_upper_bound(const DensityMatrix& rho, const std::vector<int>& left, int enlarge,
                               const OptimizerConfig& cfg) {
  validate(rho);
  cfg.validate();
  check_subsystems(rho.dims, left, "eof_upper_bound");
  if (left.empty() || left.size() == rho.dims.size()) {
    throw ValidationError("eof_upper_bound: the cut must leave both sides nonempty");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix);
  std::vector<ComplexVector> ensemble;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > 1e-12) ensemble.push_back(std::sqrt(es.eigenvalues()(i)) * es.eigenvectors().col(i));
  }
  const int k = static_cast<int>(ensemble.size());
  const int n = k + std::max(enlarge, 0);
  const auto cost = [&](const ComplexMatrix& w) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      ComplexVector v = ComplexVector::Zero(rho.matrix.rows());
      for (int i = 0; i < k; ++i) v += w(j, i) * ensemble[i];
      const double p = v.squaredNorm();
      if (p < 1e-14) continue;
      total += p * vector_entropy(v, rho.dims, left);
    }
    return total;
  };
  const Objective f = [&](std::span<const double> x) { return cost(unitary_from_params(x, n)); };
  const std::vector<std::vector<double>> warm{std::vector<double>(n * n, 0.0)};
  const OptimizeResult r = minimize(f, gaussian_start(n * n), cfg, warm);
  return report_from("eof", r.value, BoundKind::upper, r);
}

MonteCarloEstimate average_linear_entropy_mc(const ComplexMatrix& u, const Partition& part,
                                             int samples, std::uint64_t seed) {
  check_probe_input(u, part, "average_linear_entropy_mc");
  require_unitary(u, "average_linear_entropy_mc");
  if (samples < 2) throw ValidationError("average_linear_entropy_mc: need at least two samples");
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ComplexVector a = haar_state(part.dA, mix_seed(seed, 2 * static_cast<std::uint64_t>(i)));
    const ComplexVector b = haar_state(part.dB, mix_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1));
    const ComplexVector out = u * kron(a, b);
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(out.data(), part.dA, part.dB);
    const ComplexMatrix rho = m * m.adjoint();
    const double v = 1.0 - (rho * rho).trace().real();
    sum += v;
    sumsq += v * v;
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean = sum / samples;
  const double var = std::max(0.0, (sumsq - samples * est.mean * est.mean) / (samples - 1));
  est.standard_error = std::sqrt(var / samples);
  return est;
}

double average_linear_entropy(const ComplexMatrix& u, const Partition& part) {
  if (part.dA != part.dB) throw ValidationError("average_linear_entropy: needs dA = dB");
  const double d = part.dA;
  const ComplexMatrix sw = swap_gate(part.dA);
  return d * d / ((d + 1) * (d + 1)) *
         (linear_entropy(u, part) + linear_entropy(u * sw, part) - linear_entropy(sw, part));
}

}  // namespace dynstrength
