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


#include "loqc/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

void check_f(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw ValidationError("f must lie in [0, 1]");
}

double fz_closed(double f) { return (2 * f * f - f * f * f) / (1 - f + f * f); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum : std::uint64_t { kStreamR = 1, kStreamZ = 2, kStreamZZ = 3 };

// One trial of the F_r tree: true on failure.
bool trial_r(double f, std::uint64_t seed, std::uint64_t t) {
  // Draws lie in [0, 1), so f = 1 retries until the cap.
  if (f >= 1.0) return true;
  std::uint64_t draw = 0;
  for (std::uint64_t a = 0; a < kMaxAttempts; ++a) {
    if (stream_uniform(seed, kStreamR, t, draw++) < f) continue;  // qubit 4 Y-projected: retry
    return stream_uniform(seed, kStreamR, t, draw++) < f;         // qubit 2 Z-projected
  }
  return true;
}

bool trial_z(double f, std::uint64_t seed, std::uint64_t stream, std::uint64_t t) {
  const double fail = f * f + (1 - f) * f * f;
  const double retry = (1 - f) * f;
  for (std::uint64_t a = 0; a < kMaxAttempts; ++a) {
    const double u = stream_uniform(seed, stream, t, a);
    if (u < fail) return true;
    if (u < fail + retry) continue;
    return false;
  }
  return true;
}

struct Counts {
  std::uint64_t r = 0, z = 0, zz = 0;
};

double binomial_stderr(double p, std::uint64_t n) { return std::sqrt(p * (1 - p) / static_cast<double>(n)); }

}  // namespace

FailureRates failure_recursions(double f) {
  check_f(f);
  const double fz = fz_closed(f);
  return {f, fz, fz};
}

FailureRates failure_fixed_points(double f, double tol) {
  check_f(f);
  if (f == 1.0) return {1.0, 1.0, 1.0};
  auto iterate = [tol](auto step) {
    double x = 0;
    for (int i = 0; i < 10'000'000; ++i) {
      const double next = step(x);
      if (std::abs(next - x) < tol) return next;
      x = next;
    }
    throw InvariantViolation("recursion did not converge");
  };
  const double fr = iterate([f](double F) { return f * F + (1 - f) * f; });
  const double fz = iterate([f](double F) { return f * f + (1 - f) * f * f + f * (1 - f) * F; });
  return {fr, fz, fz};
}

double threshold_solve(double tol) {
  // F_z(f) - f changes sign only at 1/2 inside (0.1, 0.9).
  double lo = 0.1, hi = 0.9;
  auto g = [](double f) { return fz_closed(f) - f; };
  if (!(g(lo) < 0 && g(hi) > 0)) throw InvariantViolation("threshold bracket lost");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double stream_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial, std::uint64_t draw) {
  std::uint64_t k = splitmix(seed);
  k = splitmix(k ^ stream);
  k = splitmix(k ^ trial);
  k = splitmix(k ^ draw);
  return static_cast<double>(k >> 11) * 0x1.0p-53;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("LOQC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MonteCarloEstimate monte_carlo_failure(double f, std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
  check_f(f);
  if (trials == 0) throw ValidationError("trials must be at least 1");
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, trials));

  std::vector<Counts> partial(threads);
  auto work = [&](std::size_t w) {
    const std::uint64_t begin = trials * w / threads, end = trials * (w + 1) / threads;
    Counts c;
    for (std::uint64_t t = begin; t < end; ++t) {
      c.r += trial_r(f, seed, t);
      c.z += trial_z(f, seed, kStreamZ, t);
      c.zz += trial_z(f, seed, kStreamZZ, t);
    }
    partial[w] = c;
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
  }
  Counts total;
  for (const auto& c : partial) {
    total.r += c.r;
    total.z += c.z;
    total.zz += c.zz;
  }
  MonteCarloEstimate e;
  e.trials = trials;
  const double n = static_cast<double>(trials);
  e.F_r_hat = static_cast<double>(total.r) / n;
  e.F_z_hat = static_cast<double>(total.z) / n;
  e.F_zz_hat = static_cast<double>(total.zz) / n;
  e.stderr_r = binomial_stderr(e.F_r_hat, trials);
  e.stderr_z = binomial_stderr(e.F_z_hat, trials);
  e.stderr_zz = binomial_stderr(e.F_zz_hat, trials);
  return e;
}

}  // namespace loqc
