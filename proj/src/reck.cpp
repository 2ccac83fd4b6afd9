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

#include "loqc/reck.hpp"

#include <cmath>
#include <numbers>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr double kNullTolerance = 1e-15;

double wrap_angle(double a) {
  a = std::remainder(a, 2 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
  return a;
}

}  // namespace

Eigen::MatrixXcd rotation_matrix(const TwoModeRotation& t, std::size_t n) {
  if (t.p <= t.q || t.p >= n) throw ValidationError("rotation needs q < p < n");
  const std::size_t modes[2] = {t.q, t.p};
  return embed_matrix(beam_splitter_matrix(t.theta, t.phi), modes, n);
}

DecompositionPlan decompose(const ModeUnitary& u) {
  const std::size_t n = u.dimension();
  DecompositionPlan plan;
  plan.n = n;
  Eigen::MatrixXcd w = u.matrix().adjoint();
  for (std::size_t p = n - 1; p >= 1; --p) {
    for (std::size_t q = p; q-- > 0;) {
      const Complex x = w(q, p), y = w(p, p);
      TwoModeRotation t{p, q, 0.0, 0.0};
      if (std::abs(x) > kNullTolerance) {
        if (std::abs(y) > kNullTolerance) {
          t.theta = std::atan2(std::abs(x), std::abs(y));
          t.phi = wrap_angle(std::arg(-x * std::conj(y)));
        } else {
          t.theta = std::numbers::pi / 2;
          t.phi = wrap_angle(std::arg(-x));
        }
      }
      // Row update W <- T^dag W on rows q and p.
      const Eigen::Matrix2cd b = beam_splitter_matrix(t.theta, t.phi).adjoint();
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        const Complex wq = w(q, c), wp = w(p, c);
        w(q, c) = b(0, 0) * wq + b(0, 1) * wp;
        w(p, c) = b(1, 0) * wq + b(1, 1) * wp;
      }
      plan.rotations.push_back(t);
    }
  }
  plan.diagonal_phases.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex d = w(i, i);
    plan.diagonal_phases[i] = std::abs(std::arg(d)) < kNullTolerance ? 0.0 : wrap_angle(std::arg(d));
  }
  return plan;
}

ModeUnitary reconstruct(const DecompositionPlan& plan) {
  const auto n = static_cast<Eigen::Index>(plan.n);
  if (plan.diagonal_phases.size() != plan.n) throw ValidationError("plan needs one diagonal phase per mode");
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& t : plan.rotations) prod = prod * rotation_matrix(t, plan.n);
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = std::polar(1.0, plan.diagonal_phases[static_cast<std::size_t>(i)]);
  prod = prod * d.asDiagonal();
  return ModeUnitary(prod.adjoint());
}

std::vector<Element> compile_to_elements(const DecompositionPlan& plan) {
  // (T_1 ... T_k D)^dag = D^dag T_k^dag ... T_1^dag, so T_1^dag runs first.
  std::vector<Element> out;
  for (const auto& t : plan.rotations) out.push_back(BeamSplitter{t.q, t.p, -t.theta, t.phi});
  for (std::size_t i = 0; i < plan.diagonal_phases.size(); ++i) {
    if (plan.diagonal_phases[i] != 0.0) out.push_back(PhaseShifter{i, -plan.diagonal_phases[i]});
  }
  return out;
}

}  // namespace loqc
