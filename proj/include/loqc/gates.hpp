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

#include <array>
#include <string>
#include <vector>

#include "loqc/optics.hpp"

namespace loqc {

/// A qubit stored in two modes: |0>_q is a photon in zero_rail, |1>_q is a
/// photon in one_rail. Written as |ab> with a = one_rail, b = zero_rail this
/// is |0>_q = |01>, |1>_q = |10>.
struct DualRailQubit {
  std::size_t one_rail = 0;
  std::size_t zero_rail = 1;
};

/// Logical amplitudes (a0, a1) of one qubit.
using QubitAmplitudes = std::array<Complex, 2>;

/// What a failed branch left behind on one logical qubit.
struct QubitFate {
  enum class Kind { Intact, ZProjected, Lost };
  Kind kind = Kind::Lost;
  /// Projected logical value for ZProjected.
  int value = 0;
  /// For Intact: the state equals the input up to a logical Z when true.
  bool needs_z = false;
};

struct FailureOutcome {
  enum class Kind { ZProjection, Other };
  std::vector<unsigned> pattern;
  double probability = 0;
  Kind kind = Kind::Other;
  std::vector<QubitFate> qubits;
};

struct GateResult {
  double success_probability = 0;
  /// Normalized conditional state, ancilla modes removed.
  FockState output{1};
  /// Where the logical qubits live in output.
  std::vector<DualRailQubit> qubits;
  std::vector<FailureOutcome> failure_outcomes;
};

FockState encode_dual_rail(Complex alpha, Complex beta, DualRailQubit q, std::size_t n_modes = 2);

/// Amplitudes over |x_1 ... x_k> (x_1 most significant) read from dual-rail
/// patterns. Everything outside the dual-rail subspace is ignored.
Eigen::VectorXcd logical_amplitudes(const FockState& state, std::span<const DualRailQubit> qubits);

/// Squared norm of the part of state outside the dual-rail subspace.
double leakage(const FockState& state, std::span<const DualRailQubit> qubits);

/// |<target|v>| for a normalized target.
double logical_fidelity(const Eigen::VectorXcd& target, const Eigen::VectorXcd& v);

/// One phase shifter on the |1>_q rail. Logical action e^{i phi/2} R_z(phi).
std::vector<Element> rz_elements(DualRailQubit q, double phi);

/// One beam splitter (theta, 0) with mode_a = one_rail. Logical action R_y(-2 theta).
std::vector<Element> ry_elements(DualRailQubit q, double theta);

struct SingleQubitProgram {
  std::vector<Element> elements;
  /// The netlist times e^{i global_phase} equals the requested unitary.
  double global_phase = 0;
};

/// e^{i alpha} R_z(beta) R_y(gamma) R_z(delta).
SingleQubitProgram compile_single_qubit(double alpha_g, double beta, double gamma, double delta,
                                        DualRailQubit q);

/// Logical 2x2 action of elements on a qubit living in a two-mode register.
Eigen::Matrix2cd logical_matrix(std::span<const Element> elements, DualRailQubit q, std::size_t n_modes = 2);

/// The closed-form 3x3 nonlinear-sign unitary.
Eigen::Matrix3cd ns_matrix();

/// theta_2 of the angle form, arccos(sqrt(2) - 1).
double ns_theta2();

/// Angle form on modes (signal 0, ancilla 1, ancilla 2).
std::vector<Element> ns_netlist();

/// |psi>|1>|0>, post-selects (1, 0) on modes 1 and 2.
GateResult ns_gate(Complex alpha, Complex beta, Complex gamma);

/// Two nonlinear-sign gates between 45 degree beam splitters. Qubit 1 on
/// modes (one 0, zero 1), qubit 2 on (one 2, zero 3), ancillas 4..7.
GateResult csign_klm(QubitAmplitudes q1, QubitAmplitudes q2);

struct KnillAngles {
  double theta1, theta2, theta3, theta4;
};

/// 54.74, -54.74, 54.74, 17.63 degrees.
KnillAngles knill_rounded_angles();

/// Angles re-solved so the conditional action is exactly CSign.
KnillAngles knill_refined_angles();

std::vector<Element> knill_netlist(const KnillAngles& a);

/// Qubit one-rails on modes 0 and 1, ancillas 2 and 3 with one photon each,
/// zero-rails on modes 4 and 5. Post-selects one photon in each ancilla.
GateResult csign_knill_2_27(QubitAmplitudes q1, QubitAmplitudes q2,
                            const KnillAngles& angles = knill_rounded_angles());

/// (|0101> + |0110> + |1001> - |1010>)/2.
FockState csign_resource_state();

}  // namespace loqc
