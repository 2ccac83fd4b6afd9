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

#include "loqc/gates.hpp"

#include <cmath>
#include <numbers>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void require_normalized(std::initializer_list<Complex> amps, const char* what) {
  double s = 0;
  for (auto a : amps) s += std::norm(a);
  if (std::abs(s - 1.0) > 1e-9) throw ValidationError(std::string(what) + " amplitudes are not normalized");
}

FockState two_qubit_input(QubitAmplitudes q1, QubitAmplitudes q2, DualRailQubit r1, DualRailQubit r2,
                          std::size_t n_modes, const std::vector<std::pair<std::size_t, unsigned>>& ancillas) {
  FockState s(n_modes);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      std::vector<unsigned> occ(n_modes, 0);
      occ[x ? r1.one_rail : r1.zero_rail] = 1;
      occ[y ? r2.one_rail : r2.zero_rail] = 1;
      for (auto [m, c] : ancillas) occ[m] = c;
      s.add(Occupation(occ), q1[x] * q2[y]);
    }
  }
  s.prune();
  return s;
}

// Splits a measured state into the success branch and the failures.
GateResult split_outcomes(const FockState& evolved, const DetectorSpec& det, const std::vector<unsigned>& success,
                          std::vector<DualRailQubit> qubits) {
  GateResult r;
  r.qubits = std::move(qubits);
  bool found = false;
  for (auto& o : measure_modes(evolved, det)) {
    if (o.pattern == success) {
      r.success_probability = o.probability;
      r.output = *o.conditional_state;
      found = true;
    } else {
      r.failure_outcomes.push_back({o.pattern, o.probability, FailureOutcome::Kind::Other, {}});
    }
  }
  if (!found) throw InvariantViolation("success pattern never occurred");
  return r;
}

}  // namespace

FockState encode_dual_rail(Complex alpha, Complex beta, DualRailQubit q, std::size_t n_modes) {
  require_normalized({alpha, beta}, "qubit");
  if (q.one_rail == q.zero_rail || q.one_rail >= n_modes || q.zero_rail >= n_modes) {
    throw ValidationError("dual-rail modes must be distinct and in range");
  }
  FockState s(n_modes);
  std::vector<unsigned> zero(n_modes, 0), one(n_modes, 0);
  zero[q.zero_rail] = 1;
  one[q.one_rail] = 1;
  s.add(Occupation(zero), alpha);
  s.add(Occupation(one), beta);
  s.prune();
  return s;
}

Eigen::VectorXcd logical_amplitudes(const FockState& state, std::span<const DualRailQubit> qubits) {
  const auto k = qubits.size();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << k);
  for (const auto& [occ, a] : state.terms()) {
    Eigen::Index idx = 0;
    bool valid = true;
    unsigned used = 0;
    for (std::size_t i = 0; i < k && valid; ++i) {
      const unsigned one = occ[qubits[i].one_rail], zero = occ[qubits[i].zero_rail];
      valid = one + zero == 1;
      idx = (idx << 1) | static_cast<Eigen::Index>(one);
      used += one + zero;
    }
    if (valid && used == occ.total()) v(idx) += a;
  }
  return v;
}

double leakage(const FockState& state, std::span<const DualRailQubit> qubits) {
  return std::max(0.0, state.norm_squared() - logical_amplitudes(state, qubits).squaredNorm());
}

double logical_fidelity(const Eigen::VectorXcd& target, const Eigen::VectorXcd& v) {
  return std::abs(target.dot(v));
}

std::vector<Element> rz_elements(DualRailQubit q, double phi) { return {PhaseShifter{q.one_rail, phi}}; }

std::vector<Element> ry_elements(DualRailQubit q, double theta) {
  return {BeamSplitter{q.one_rail, q.zero_rail, theta, 0.0}};
}

SingleQubitProgram compile_single_qubit(double alpha_g, double beta, double gamma, double delta,
                                        DualRailQubit q) {
  SingleQubitProgram prog;
  auto append = [&](std::vector<Element> e) { prog.elements.insert(prog.elements.end(), e.begin(), e.end()); };
  // Each phase shifter contributes e^{i angle/2} on top of R_z(angle).
  append(rz_elements(q, delta));
  append(ry_elements(q, -gamma / 2));
  append(rz_elements(q, beta));
  prog.global_phase = alpha_g - (beta + delta) / 2;
  return prog;
}

Eigen::Matrix2cd logical_matrix(std::span<const Element> elements, DualRailQubit q, std::size_t n_modes) {
  Eigen::Matrix2cd m;
  const DualRailQubit qs[1] = {q};
  for (int col = 0; col < 2; ++col) {
    FockState in = encode_dual_rail(col == 0 ? 1.0 : 0.0, col == 1 ? 1.0 : 0.0, q, n_modes);
    FockState out = apply_elements(in, elements);
    if (leakage(out, qs) > 1e-12) throw InvariantViolation("single-qubit netlist leaves the dual-rail subspace");
    m.col(col) = logical_amplitudes(out, qs);
  }
  return m;
}

Eigen::Matrix3cd ns_matrix() {
  const double r2 = std::sqrt(2.0);
  const double a = 1 - r2, b = std::pow(2.0, -0.25), c = std::sqrt(3 / r2 - 2), d = 0.5 - 1 / r2;
  Eigen::Matrix3cd m;
  m << a, b, c, b, 0.5, d, c, d, r2 - 0.5;
  return m;
}

double ns_theta2() { return std::acos(std::sqrt(2.0) - 1); }

std::vector<Element> ns_netlist() {
  return {BeamSplitter{2, 1, 22.5 * kDeg, 0.0}, BeamSplitter{0, 1, ns_theta2(), 0.0},
          PhaseShifter{0, std::numbers::pi}, BeamSplitter{2, 1, -22.5 * kDeg, 0.0}};
}

GateResult ns_gate(Complex alpha, Complex beta, Complex gamma) {
  require_normalized({alpha, beta, gamma}, "nonlinear-sign input");
  FockState in(3);
  in.add({0, 1, 0}, alpha);
  in.add({1, 1, 0}, beta);
  in.add({2, 1, 0}, gamma);
  in.prune();
  FockState out = apply_mode_unitary(in, ModeUnitary(ns_matrix()));
  return split_outcomes(out, DetectorSpec{{1, 2}, std::nullopt}, {1, 0}, {});
}

GateResult csign_klm(QubitAmplitudes q1, QubitAmplitudes q2) {
  require_normalized({q1[0], q1[1]}, "qubit 1");
  require_normalized({q2[0], q2[1]}, "qubit 2");
  const DualRailQubit r1{0, 1}, r2{2, 3};
  constexpr std::size_t n = 8;
  FockState s = two_qubit_input(q1, q2, r1, r2, n, {{4, 1}, {6, 1}});
  const BeamSplitter mix{r1.one_rail, r2.one_rail, 45 * kDeg, 0.0};
  const BeamSplitter unmix{r1.one_rail, r2.one_rail, -45 * kDeg, 0.0};
  const std::size_t ns_a[3] = {r1.one_rail, 4, 5};
  const std::size_t ns_b[3] = {r2.one_rail, 6, 7};
  const Eigen::MatrixXcd ns = ns_matrix();
  const ModeUnitary both(embed_matrix(ns, ns_a, n) * embed_matrix(ns, ns_b, n));
  s = apply_beam_splitter(s, mix);
  s = apply_mode_unitary(s, both);
  s = apply_beam_splitter(s, unmix);
  return split_outcomes(s, DetectorSpec{{4, 5, 6, 7}, std::nullopt}, {1, 0, 1, 0}, {r1, r2});
}

KnillAngles knill_rounded_angles() { return {54.74 * kDeg, -54.74 * kDeg, 54.74 * kDeg, 17.63 * kDeg}; }

std::vector<Element> knill_netlist(const KnillAngles& a) {
  return {BeamSplitter{0, 2, a.theta1, 0.0}, BeamSplitter{1, 3, a.theta2, 0.0},
          BeamSplitter{0, 1, a.theta3, 0.0}, BeamSplitter{2, 3, a.theta4, 0.0},
          PhaseShifter{0, std::numbers::pi},  PhaseShifter{1, std::numbers::pi}};
}

namespace {

// Deviation of the post-selected Knill network from a scaled CSign.
Eigen::VectorXd knill_residual(const Eigen::Vector4d& t) {
  const auto net = knill_netlist({t(0), t(1), t(2), t(3)});
  Complex amp[2][2];
  std::vector<Complex> leak;
  for (unsigned x = 0; x < 2; ++x) {
    for (unsigned y = 0; y < 2; ++y) {
      FockState out = apply_elements(FockState::basis({x, y, 1, 1, 1 - x, 1 - y}), net);
      amp[x][y] = out.amplitude({x, y, 1, 1, 1 - x, 1 - y});
      for (const auto& o : enumerate_basis(2, x + y)) {
        if (o[0] == x && o[1] == y) continue;
        leak.push_back(out.amplitude({o[0], o[1], 1, 1, 1 - x, 1 - y}));
      }
    }
  }
  std::vector<Complex> r = {amp[0][1] - amp[0][0], amp[1][0] - amp[0][0], amp[1][1] + amp[0][0]};
  r.insert(r.end(), leak.begin(), leak.end());
  Eigen::VectorXd v(2 * r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    v(2 * i) = r[i].real();
    v(2 * i + 1) = r[i].imag();
  }
  return v;
}

KnillAngles solve_knill_angles() {
  const KnillAngles p = knill_rounded_angles();
  Eigen::Vector4d t(p.theta1, p.theta2, p.theta3, p.theta4);
  double lambda = 1e-6;
  Eigen::VectorXd r = knill_residual(t);
  for (int iter = 0; iter < 200 && r.norm() > 1e-15; ++iter) {
    Eigen::MatrixXd j(r.size(), 4);
    for (int k = 0; k < 4; ++k) {
      const double h = 1e-7;
      Eigen::Vector4d tp = t, tm = t;
      tp(k) += h;
      tm(k) -= h;
      j.col(k) = (knill_residual(tp) - knill_residual(tm)) / (2 * h);
    }
    const Eigen::Matrix4d jtj = j.transpose() * j;
    const Eigen::Vector4d g = j.transpose() * r;
    Eigen::Vector4d step = (jtj + lambda * Eigen::Matrix4d(jtj.diagonal().asDiagonal())).ldlt().solve(-g);
    Eigen::VectorXd r_new = knill_residual(t + step);
    if (r_new.norm() < r.norm()) {
      t += step;
      r = r_new;
      lambda = std::max(lambda / 10, 1e-12);
    } else {
      lambda *= 10;
      if (lambda > 1e6) break;
    }
  }
  return {t(0), t(1), t(2), t(3)};
}

}  // namespace

KnillAngles knill_refined_angles() {
  static const KnillAngles solved = solve_knill_angles();
  return solved;
}

GateResult csign_knill_2_27(QubitAmplitudes q1, QubitAmplitudes q2, const KnillAngles& angles) {
  require_normalized({q1[0], q1[1]}, "qubit 1");
  require_normalized({q2[0], q2[1]}, "qubit 2");
  const DualRailQubit r1{0, 4}, r2{1, 5};
  FockState s = two_qubit_input(q1, q2, r1, r2, 6, {{2, 1}, {3, 1}});
  s = apply_elements(s, knill_netlist(angles));
  // Surviving modes are 0, 1, 4, 5 -> 0, 1, 2, 3.
  return split_outcomes(s, DetectorSpec{{2, 3}, std::nullopt}, {1, 1}, {{0, 2}, {1, 3}});
}

FockState csign_resource_state() {
  FockState s(4);
  s.add({0, 1, 0, 1}, 0.5);
  s.add({0, 1, 1, 0}, 0.5);
  s.add({1, 0, 0, 1}, 0.5);
  s.add({1, 0, 1, 0}, -0.5);
  return s;
}

}  // namespace loqc
