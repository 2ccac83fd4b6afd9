// Copyright 2026 The loqc Authors
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

#include <cstddef>
#include <cstdint>

namespace loqc {

/// Failure probabilities of the recursively protected teleportation.
struct FailureRates {
  double F_r = 0;
  double F_z = 0;
  /// Taken equal to F_z.
  double F_zz = 0;
};

/// Closed forms F_r = f, F_z = (2f^2 - f^3)/(1 - f + f^2). f must be in [0, 1].
FailureRates failure_recursions(double f);

/// Fixed points of F = f F + (1-f) f and F = f^2 + (1-f) f^2 + f(1-f) F,
/// found by iterating from 0 until successive values differ by < tol.
FailureRates failure_fixed_points(double f, double tol = 1e-12);

/// Nontrivial solution of F_z(f) = f in (0, 1) by bisection.
double threshold_solve(double tol = 1e-12);

struct MonteCarloEstimate {
  double F_r_hat = 0;
  double F_z_hat = 0;
  double F_zz_hat = 0;
  double stderr_r = 0;
  double stderr_z = 0;
  double stderr_zz = 0;
  std::uint64_t trials = 0;
};

/// Uniform double in [0, 1) from a counter-based stream. Pure function of its
/// arguments.
double stream_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial, std::uint64_t draw);

/// Retries beyond this many attempts count as a failure.
inline constexpr std::uint64_t kMaxAttempts = 1'000'000;

/// Simulates the retry/failure branch structure. Bitwise identical for any
/// thread count. threads = 0 means default_thread_count().
MonteCarloEstimate monte_carlo_failure(double f, std::uint64_t trials, std::uint64_t seed, std::size_t threads = 0);

/// LOQC_THREADS if set to a positive integer, else hardware concurrency.
std::size_t default_thread_count();

}  // namespace loqc
