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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "loqc/errors.hpp"
#include "loqc/gates.hpp"
#include "loqc/reck.hpp"
#include "oracles.hpp"

namespace loqc {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0, 1};

Eigen::Matrix2cd rz(double a) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-kI * (a / 2));
  m(1, 1) = std::exp(kI * (a / 2));
  return m;
}

Eigen::Matrix2cd ry(double a) {
  Eigen::Matrix2cd m;
  m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
  return m;
}

Eigen::Matrix2cd rx(double a) {
  Eigen::Matrix2cd m;
  m << std::cos(a / 2), -kI * std::sin(a / 2), -kI * std::sin(a / 2), std::cos(a / 2);
  return m;
}

// |tr(A^dag B)| / 2 is 1 iff A and B agree up to a global phase.
double phase_free_match(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return std::abs((a.adjoint() * b).trace()) / 2;
}

Eigen::VectorXcd csign_target(QubitAmplitudes a, QubitAmplitudes b) {
  Eigen::VectorXcd v(4);
  v << a[0] * b[0], a[0] * b[1], a[1] * b[0], -a[1] * b[1];
  return v;
}

QubitAmplitudes random_qubit(std::mt19937_64& rng) {
  const Eigen::VectorXcd v = oracle::random_unit_vector(2, rng);
  return {v(0), v(1)};
}

double total_probability(const GateResult& r) {
  double t = r.success_probability;
  for (const auto& f : r.failure_outcomes) t += f.probability;
  return t;
}

TEST(DualRail, Encoding) {
  const DualRailQubit q{0, 1};
  EXPECT_LT(max_abs_difference(encode_dual_rail(1, 0, q), fock_basis_state({0, 1})), 1e-15);
  EXPECT_LT(max_abs_difference(encode_dual_rail(0, 1, q), fock_basis_state({1, 0})), 1e-15);
  const double r = std::sqrt(0.5);
  const FockState s = encode_dual_rail(r, r, q);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude({0, 1}) - r), 0, 1e-15);
  EXPECT_THROW(encode_dual_rail(1, 1, q), ValidationError);
}

TEST(SingleQubit, PhaseShifterIsRz) {
  const DualRailQubit q{0, 1};
  const double phi = 0.83;
  const Complex a(0.6, 0), b(0, 0.8);
  const FockState out = apply_elements(encode_dual_rail(a, b, q), rz_elements(q, phi));
  EXPECT_NEAR(std::abs(out.amplitude({0, 1}) - a), 0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude({1, 0}) - b * std::exp(kI * phi)), 0, 1e-12);
  const auto els = rz_elements(q, phi);
  EXPECT_LT((logical_matrix(els, q) - std::exp(kI * (phi / 2)) * rz(phi)).cwiseAbs().maxCoeff(), 1e-12);
  const auto full = rz_elements(q, 2 * kPi);
  EXPECT_LT((logical_matrix(full, q) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((rz(2 * kPi) + Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  const auto none = rz_elements(q, 0);
  EXPECT_LT((logical_matrix(none, q) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SingleQubit, BeamSplitterIsRy) {
  const DualRailQubit q{0, 1};
  const double t = 0.41;
  const Complex a(0.6, 0), b(0, 0.8);
  const FockState out = apply_elements(encode_dual_rail(a, b, q), ry_elements(q, t));
  // cos t (a|01> + b|10>) - sin t (a|10> - b|01>)
  EXPECT_NEAR(std::abs(out.amplitude({0, 1}) - (std::cos(t) * a + std::sin(t) * b)), 0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude({1, 0}) - (std::cos(t) * b - std::sin(t) * a)), 0, 1e-12);
  const auto els = ry_elements(q, t);
  EXPECT_LT((logical_matrix(els, q) - ry(-2 * t)).cwiseAbs().maxCoeff(), 1e-12);

  const auto quarter = ry_elements(q, kPi / 4);
  const Eigen::Vector2cd zero_out = logical_matrix(quarter, q).col(0);
  EXPECT_NEAR(std::abs(zero_out(0) - std::sqrt(0.5)), 0, 1e-12);
  EXPECT_NEAR(std::abs(zero_out(1) + std::sqrt(0.5)), 0, 1e-12);
}

TEST(SingleQubit, EulerCompilation) {
  const DualRailQubit q{0, 1};
  auto compiled = [&](double a, double b, double g, double d) {
    const SingleQubitProgram p = compile_single_qubit(a, b, g, d, q);
    return Eigen::Matrix2cd(std::exp(kI * p.global_phase) * logical_matrix(p.elements, q));
  };
  EXPECT_LT((compiled(0, 0, 0, 0) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);

  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_LT((compiled(kPi / 2, 0, kPi / 2, kPi) - h).cwiseAbs().maxCoeff(), 1e-9);

  const double v = 0.77;
  EXPECT_NEAR(phase_free_match(compiled(0, kPi / 2, -v, -kPi / 2), rx(v)), 1.0, 1e-12);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 30; ++i) {
    const double a = ang(rng), b = ang(rng), g = ang(rng), d = ang(rng);
    const Eigen::Matrix2cd want = std::exp(kI * a) * rz(b) * ry(g) * rz(d);
    EXPECT_LT((compiled(a, b, g, d) - want).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SingleQubit, CompositionMatchesProduct) {
  const DualRailQubit q{0, 1};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 30; ++i) {
    const double a1 = ang(rng), b1 = ang(rng), g1 = ang(rng), d1 = ang(rng);
    const double a2 = ang(rng), b2 = ang(rng), g2 = ang(rng), d2 = ang(rng);
    auto p1 = compile_single_qubit(a1, b1, g1, d1, q), p2 = compile_single_qubit(a2, b2, g2, d2, q);
    std::vector<Element> both = p1.elements;
    both.insert(both.end(), p2.elements.begin(), p2.elements.end());
    const Eigen::Matrix2cd u1 = std::exp(kI * a1) * rz(b1) * ry(g1) * rz(d1);
    const Eigen::Matrix2cd u2 = std::exp(kI * a2) * rz(b2) * ry(g2) * rz(d2);
    EXPECT_NEAR(phase_free_match(logical_matrix(both, q), u2 * u1), 1.0, 1e-9);
  }
}

TEST(NonlinearSign, ClosedFormAndAngleForm) {
  const Eigen::MatrixXcd m = ns_matrix();
  EXPECT_LT(ModeUnitary::unitarity_error(m), 1e-12);
  EXPECT_NEAR(std::cos(ns_theta2()), std::sqrt(2.0) - 1, 1e-15);
  EXPECT_NEAR(ns_theta2() * 180 / kPi, 65.5302, 1e-4);
  // The angle netlist acting on single photons reproduces the matrix.
  const auto net = ns_netlist();
  for (std::size_t l = 0; l < 3; ++l) {
    std::vector<unsigned> c(3, 0);
    c[l] = 1;
    const FockState out = apply_elements(FockState::basis(Occupation(c)), net);
    for (std::size_t r = 0; r < 3; ++r) {
      std::vector<unsigned> o(3, 0);
      o[r] = 1;
      EXPECT_NEAR(std::abs(out.amplitude(Occupation(o)) - m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l))), 0,
                  1e-6);
    }
  }
}

TEST(NonlinearSign, Examples) {
  const GateResult a = ns_gate(1, 0, 0);
  EXPECT_NEAR(a.success_probability, 0.25, 1e-9);
  EXPECT_NEAR(overlap_fidelity(a.output, fock_basis_state({0})), 1.0, 1e-9);

  const GateResult c = ns_gate(0, 0, 1);
  EXPECT_NEAR(c.success_probability, 0.25, 1e-9);
  EXPECT_NEAR(overlap_fidelity(c.output, fock_basis_state({2})), 1.0, 1e-9);

  const double r = 1 / std::sqrt(3.0);
  const GateResult e = ns_gate(r, r, r);
  FockState want(1);
  want.add({0}, r);
  want.add({1}, r);
  want.add({2}, -r);
  EXPECT_NEAR(e.success_probability, 0.25, 1e-9);
  EXPECT_NEAR(overlap_fidelity(e.output, want), 1.0, 1e-9);
  EXPECT_NEAR(total_probability(e), 1.0, 1e-9);
  EXPECT_THROW(ns_gate(1, 1, 0), ValidationError);
}

TEST(NonlinearSign, InputIndependentSuccess) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXcd v = oracle::random_unit_vector(3, rng);
    const GateResult g = ns_gate(v(0), v(1), v(2));
    EXPECT_NEAR(g.success_probability, 0.25, 1e-9);
    FockState want(1);
    want.add({0}, v(0));
    want.add({1}, v(1));
    want.add({2}, -v(2));
    EXPECT_GE(overlap_fidelity(g.output, want), 1 - 1e-9);
    EXPECT_NEAR(total_probability(g), 1.0, 1e-9);
  }
}

TEST(CsignKlm, TruthTable) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      QubitAmplitudes a{x ? 0.0 : 1.0, x ? 1.0 : 0.0}, b{y ? 0.0 : 1.0, y ? 1.0 : 0.0};
      const GateResult r = csign_klm(a, b);
      EXPECT_NEAR(r.success_probability, 1.0 / 16, 1e-9);
      const Eigen::VectorXcd v = logical_amplitudes(r.output, r.qubits);
      EXPECT_NEAR(std::abs(v(2 * x + y) - (x && y ? -1.0 : 1.0)), 0, 1e-9) << x << y;
      EXPECT_NEAR(total_probability(r), 1.0, 1e-9);
    }
  }
}

TEST(CsignKlm, RandomInputsAndClosure) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const QubitAmplitudes a = random_qubit(rng), b = random_qubit(rng);
    const GateResult r = csign_klm(a, b);
    EXPECT_NEAR(r.success_probability, 1.0 / 16, 1e-9);
    EXPECT_LT(leakage(r.output, r.qubits), 1e-12);
    EXPECT_GE(logical_fidelity(csign_target(a, b), logical_amplitudes(r.output, r.qubits)), 1 - 1e-9);
    EXPECT_NEAR(total_probability(r), 1.0, 1e-9);
  }
}

TEST(CsignKlm, ProducesResourceState) {
  const double r = std::sqrt(0.5);
  const GateResult g = csign_klm({r, r}, {r, r});
  const FockState res = csign_resource_state();
  EXPECT_NEAR(res.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(res.amplitude({0, 1, 0, 1}) - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(res.amplitude({0, 1, 1, 0}) - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(res.amplitude({1, 0, 0, 1}) - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(res.amplitude({1, 0, 1, 0}) + 0.5), 0, 1e-15);
  // Output qubits sit on (one 0, zero 1) and (one 2, zero 3).
  ASSERT_EQ(g.output.modes(), 4u);
  EXPECT_NEAR(overlap_fidelity(g.output, res), 1.0, 1e-9);
}

TEST(CsignKnill, RoundedAngles) {
  const KnillAngles a = knill_rounded_angles();
  EXPECT_DOUBLE_EQ(a.theta1 * 180 / kPi, 54.74);
  EXPECT_DOUBLE_EQ(a.theta4 * 180 / kPi, 17.63);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const QubitAmplitudes x = random_qubit(rng), y = random_qubit(rng);
    const GateResult r = csign_knill_2_27(x, y);
    EXPECT_NEAR(r.success_probability, 2.0 / 27, 2e-4);
    EXPECT_GE(logical_fidelity(csign_target(x, y), logical_amplitudes(r.output, r.qubits)), 1 - 1e-3);
    EXPECT_NEAR(total_probability(r), 1.0, 1e-9);
  }
  const GateResult one = csign_knill_2_27({0, 1}, {0, 1});
  EXPECT_NEAR(logical_amplitudes(one.output, one.qubits)(3).real(), -1.0, 1e-3);
  const GateResult zero = csign_knill_2_27({1, 0}, {1, 0});
  EXPECT_NEAR(std::abs(logical_amplitudes(zero.output, zero.qubits)(0)), 1.0, 1e-3);
}

TEST(CsignKnill, RefinedAnglesMatchClosedForms) {
  const KnillAngles a = knill_refined_angles();
  const double t = std::acos(1 / std::sqrt(3.0));
  const double t4 = std::asin(std::sqrt((3 - std::sqrt(6.0)) / 6));
  EXPECT_NEAR(a.theta1, t, 1e-8);
  EXPECT_NEAR(a.theta2, -t, 1e-8);
  EXPECT_NEAR(a.theta3, t, 1e-8);
  EXPECT_NEAR(a.theta4, t4, 1e-8);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const QubitAmplitudes x = random_qubit(rng), y = random_qubit(rng);
    const GateResult r = csign_knill_2_27(x, y, a);
    EXPECT_NEAR(r.success_probability, 2.0 / 27, 1e-9);
    EXPECT_GE(logical_fidelity(csign_target(x, y), logical_amplitudes(r.output, r.qubits)), 1 - 1e-9);
    EXPECT_LT(leakage(r.output, r.qubits), 1e-12);
  }
}

TEST(Gates, RejectNonNormalized) {
  EXPECT_THROW(csign_klm({1, 1}, {1, 0}), ValidationError);
  EXPECT_THROW(csign_knill_2_27({1, 0}, {0.5, 0}), ValidationError);
}

}  // namespace
}  // namespace loqc
