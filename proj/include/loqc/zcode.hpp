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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loqc/qubits.hpp"

namespace loqc {

/// alpha (|00> + |11>)/sqrt2 + beta (|01> + |10>)/sqrt2.
QubitState encode_z_code(Complex alpha, Complex beta);

/// A single-qubit U_theta on one qubit.
struct SingleQubitRotation {
  Pauli p = Pauli::Z;
  double theta = 0;
  std::size_t qubit = 0;
};

using RotationStep = std::variant<SingleQubitRotation, TwoQubitRotation>;

QubitState apply_steps(const QubitState& state, std::span<const RotationStep> steps);

/// Data on qubit 0, ancilla |0> on qubit 1: Y_-90 on the data, (ZY)_90, Y_90
/// on the data.
std::vector<RotationStep> z_code_preparation_circuit();

/// Runs the preparation circuit on |psi>|0>.
QubitState prepare_z_code(Complex alpha, Complex beta);

struct ZMeasurement {
  int outcome = 1;
  double probability = 0;
  /// Renormalized; empty when probability is 0.
  std::optional<QubitState> state;
};

/// Projects qubit onto Z = outcome.
ZMeasurement z_measure(const QubitState& state, std::size_t qubit, int outcome);

/// Both outcomes, +1 first.
std::vector<ZMeasurement> z_measure_all(const QubitState& state, std::size_t qubit);

enum class RecoveryCircuit {
  /// Measure X (x) X, apply Z to the projected qubit on -1.
  StabilizerMeasurement,
  /// (Y_p X_o)_-90, measure Z_p, X_p X_o on -1, (Y_p X_o)_90.
  RotatedMeasurement,
};

struct RecoveryBranch {
  int measured = 1;
  double probability = 0;
  QubitState state{2};
};

/// Recovery of a two-qubit code block whose qubit projected_qubit was
/// measured in Z with result outcome. Returns every measurement branch.
std::vector<RecoveryBranch> recover_z_measurement(const QubitState& state, std::size_t projected_qubit, int outcome,
                                                  RecoveryCircuit circuit = RecoveryCircuit::StabilizerMeasurement);

enum class EncodedOp { X, Y, Z };

/// The primary representative and the listed alternates.
std::vector<PauliString> encoded_pauli(EncodedOp op);

/// X_phi on the code: X on qubit 0.
QubitState encoded_x_rotation(const QubitState& state, double phi);
/// Z_90 on the code: (Z Z)_90.
QubitState encoded_z90(const QubitState& state);
/// (Zbar Zbar)_90 on two blocks (qubits 0,1 and 2,3): (ZZZZ)_90.
QubitState encoded_zz90(const QubitState& state);

/// Y_phi = Z_90 X_phi Z_-90 as a 2x2 matrix.
Eigen::Matrix2cd y_from_x_and_z90(double phi);

/// Single-qubit Z_{a} (x) Z_{b} dressing and global phase with
/// CSign = e^{i phase} (Z_a (x) Z_b) (ZZ)_90.
struct ZZDressing {
  double angle_first = 0;
  double angle_second = 0;
  double global_phase = 0;
};

/// Searches quarter-turn Z dressings for the CSign identity.
ZZDressing solve_zz_csign_dressing();

Eigen::Matrix4cd csign_matrix();

struct ConditionTable {
  /// entries[a][b](i, j) = <psi_i| E_a^dag E_b |psi_j>.
  std::vector<std::vector<Eigen::MatrixXcd>> entries;
  bool satisfied = true;
  std::vector<std::string> violations;
};

ConditionTable qecc_condition_table(std::span<const QubitState> codewords, std::span<const Eigen::MatrixXcd> errors);

/// E_1 = (1+Z)/2 (x) 1 and E_2 = (1-Z)/2 (x) 1 on two qubits.
std::vector<Eigen::MatrixXcd> z_measurement_errors();

enum class InjectedError { None, ZOnQubit1, YOnQubit2 };

struct NiceTeleportBranch {
  /// (S1, S2) for no error; (outcome, 0) for an injected measurement.
  int s1 = 1;
  int s2 = 1;
  double probability = 0;
  /// Normalized residual: qubit 2 (0-based) for no error; qubits (1,2) for
  /// Z-on-1; qubits (0,2) for Y-on-2.
  QubitState residual{1};
  /// Pauli corrections applied (no-error branches only), e.g. "Z", "X", "ZX", "".
  std::string correction;
  /// Fidelity with the input after correction, where that makes sense.
  double fidelity = 0;
};

struct NiceTeleportReport {
  InjectedError error = InjectedError::None;
  /// Three-qubit state before the final measurements.
  QubitState state_at_a{3};
  std::vector<NiceTeleportBranch> branches;
  /// False when every branch's residual is independent of (alpha, beta).
  bool information_preserved = true;
};

/// |tx2> = (Y Z)_90 |0>|+i> on qubits 1, 2.
QubitState tx2_state();

NiceTeleportReport nice_teleport(Complex alpha, Complex beta, InjectedError error);

}  // namespace loqc
