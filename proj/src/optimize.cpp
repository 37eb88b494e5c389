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

#include "dynstrength/optimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

namespace dynstrength {

namespace {

struct CallbackData {
  const Objective* f;
  long evals = 0;
  std::vector<double> scratch;
};

double gsl_trampoline(const gsl_vector* v, void* params) {
  auto* data = static_cast<CallbackData*>(params);
  ++data->evals;
  for (std::size_t i = 0; i < v->size; ++i) data->scratch[i] = gsl_vector_get(v, i);
  double value = (*data->f)(data->scratch);
  return std::isfinite(value) ? value : std::numeric_limits<double>::max();
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;
using MinimizerPtr = std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter>;

VectorPtr make_vector(const std::vector<double>& x) {
  VectorPtr v(gsl_vector_alloc(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) gsl_vector_set(v.get(), i, x[i]);
  return v;
}

void silence_gsl() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ValidationError("optimizer: restarts must be >= 1");
  if (max_evals < 1) throw ValidationError("optimizer: max_evals must be >= 1");
  if (!(xtol > 0.0) || !(ftol > 0.0)) throw ValidationError("optimizer: tolerances must be > 0");
  if (threads < 0) throw ValidationError("optimizer: threads must be >= 0");
}

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, double step,
                           const OptimizerConfig& cfg) {
  silence_gsl();
  const std::size_t n = x0.size();
  OptimizeResult result;
  if (n == 0) {
    result.value = f(x0);
    result.evals = 1;
    result.converged = true;
    return result;
  }

  CallbackData data{&f, 0, std::vector<double>(n)};
  gsl_multimin_function fn{&gsl_trampoline, n, &data};
  MinimizerPtr solver(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  VectorPtr steps(gsl_vector_alloc(n));

  std::vector<double> best = std::move(x0);
  double best_value = std::numeric_limits<double>::infinity();
  // Flat directions (global phase, normalization) keep the simplex from
  // shrinking, so stalls in the best value also count as convergence.
  const long stall_window = std::max<long>(50, 10 * static_cast<long>(n));
  double reseed_step = step;

  while (data.evals < cfg.max_evals) {
    VectorPtr start = make_vector(best);
    gsl_vector_set_all(steps.get(), reseed_step);
    gsl_multimin_fminimizer_set(solver.get(), &fn, start.get(), steps.get());
    const double before = best_value;

    double stall_ref = solver->fval;
    long stall_iter = 0;
    bool local_converged = false;
    while (data.evals < cfg.max_evals) {
      if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
      const double size = gsl_multimin_fminimizer_size(solver.get());
      if (size < cfg.xtol) {
        local_converged = true;
        break;
      }
      if (stall_ref - solver->fval > 1e-3 * cfg.ftol) {
        stall_ref = solver->fval;
        stall_iter = 0;
      } else if (++stall_iter > stall_window) {
        local_converged = true;
        break;
      }
    }
    if (solver->fval < best_value) {
      best_value = solver->fval;
      for (std::size_t i = 0; i < n; ++i) best[i] = gsl_vector_get(solver->x, i);
    }
    if (!local_converged) break;
    if (before - best_value < cfg.ftol) {
      result.converged = true;
      break;
    }
    reseed_step = std::max(0.5 * reseed_step, 1e-3);
  }

  result.x = std::move(best);
  result.value = best_value;
  result.evals = data.evals;
  result.restarts_used = 1;
  result.best_restart = 0;
  return result;
}

OptimizeResult minimize(const Objective& f, const StartPoint& start, const OptimizerConfig& cfg,
                        const std::vector<std::vector<double>>& warm_starts, double step) {
  cfg.validate();
  const int total = std::max<int>(cfg.restarts, static_cast<int>(warm_starts.size()));
  std::vector<OptimizeResult> runs(total);
  std::vector<std::exception_ptr> errors(total);

  parallel_for(total, cfg.threads, [&](int r) {
    try {
      std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      std::vector<double> x0 =
          r < static_cast<int>(warm_starts.size()) ? warm_starts[r] : start(r, rng);
      runs[r] = nelder_mead(f, std::move(x0), step, cfg);
    } catch (...) {
      errors[r] = std::current_exception();
    }
  });
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  OptimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < total; ++r) {
    best.evals += runs[r].evals;
    if (runs[r].value < best.value) {
      best.value = runs[r].value;
      best.x = runs[r].x;
      best.best_restart = r;
      best.converged = runs[r].converged;
    }
  }
  best.restarts_used = total;
  return best;
}

StartPoint gaussian_start(int n) {
  return [n](int, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = normal(rng);
    return x;
  };
}

ComplexVector unit_vector(std::span<const double> x) {
  const auto d = static_cast<Eigen::Index>(x.size() / 2);
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(x[2 * i], x[2 * i + 1]);
  const double norm = v.norm();
  if (!(norm > 1e-150)) return ComplexVector::Zero(d);
  return v / norm;
}

std::vector<double> unit_vector_params(const ComplexVector& v) {
  std::vector<double> x(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    x[2 * i] = v(i).real();
    x[2 * i + 1] = v(i).imag();
  }
  return x;
}

ComplexMatrix hermitian_from_params(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n * n) throw ValidationError("hermitian_from_params: need n*n values");
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) h(i, i) = x[k++];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = Complex(x[k], x[k + 1]);
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  }
  return h;
}

ComplexMatrix unitary_from_params(std::span<const double> x, int n) {
  ComplexMatrix h = hermitian_from_params(x, n);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(n);
  for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(n, 1));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dynstrength
