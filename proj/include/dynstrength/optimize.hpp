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

// Multi-start derivative-free minimization and the smooth parametrizations
// (unit vectors, unitaries) the strength measures optimize over.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "dynstrength/matcore.hpp"

namespace dynstrength {

struct OptimizerConfig {
  int restarts = 16;
  int max_evals = 20000;  // per restart
  double xtol = 1e-7;     // simplex size
  double ftol = 1e-6;     // bits
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency

  /// Throws ValidationError when restarts < 1 or a tolerance is not positive.
  void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;
/// Produces the starting point of restart `index` from its private stream.
using StartPoint = std::function<std::vector<double>(int index, std::mt19937_64& rng)>;

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  long evals = 0;        // summed over restarts
  int restarts_used = 0;
  int best_restart = -1;
  bool converged = false;  // best restart stopped on tolerance, not budget
};

/// Nelder-Mead from a single start. The simplex is re-seeded around the best
/// vertex until a re-seed improves the value by less than ftol.
OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, double step,
                           const OptimizerConfig& cfg);

/// Independent Nelder-Mead restarts; restart i draws from a stream seeded by
/// mix_seed(cfg.seed, i), so results do not depend on thread scheduling.
/// Extra `warm_starts` run first with indices 0..k-1 and count as restarts.
OptimizeResult minimize(const Objective& f, const StartPoint& start, const OptimizerConfig& cfg,
                        const std::vector<std::vector<double>>& warm_starts = {},
                        double step = 0.4);

/// Standard-normal start of dimension n.
StartPoint gaussian_start(int n);

/// Complex vector of dimension x.size()/2 normalized to unit length; returns
/// the zero vector when the input has (numerically) zero norm.
ComplexVector unit_vector(std::span<const double> x);
/// Inverse of unit_vector for a given vector (interleaved re/im).
std::vector<double> unit_vector_params(const ComplexVector& v);

/// Hermitian n x n matrix from n*n reals (diagonal first, then re/im pairs of
/// the strict upper triangle).
ComplexMatrix hermitian_from_params(std::span<const double> x, int n);
/// exp(i H) for the Hermitian H above; surjective onto U(n).
ComplexMatrix unitary_from_params(std::span<const double> x, int n);

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace dynstrength
