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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace loqc {

using Complex = std::complex<double>;

/// Dense register of up to 8 qubits. Qubit 0 is the leftmost ket label and
/// the most significant bit of the basis index.
class QubitState {
 public:
  static constexpr std::size_t kMaxQubits = 8;

  explicit QubitState(std::size_t n_qubits);
  QubitState(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

  /// |bits>, e.g. "010".
  static QubitState basis(std::string_view bits);
  static QubitState single(Complex a0, Complex a1);

  std::size_t qubits() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return v_; }
  Complex operator[](std::size_t index) const { return v_(static_cast<Eigen::Index>(index)); }

  double norm() const { return v_.norm(); }
  bool is_normalized(double tol = 1e-10) const { return std::abs(v_.squaredNorm() - 1.0) <= tol; }
  QubitState normalized() const;

  /// Bit of qubit q inside a basis index.
  std::size_t bit(std::size_t index, std::size_t q) const { return (index >> (n_ - 1 - q)) & 1u; }

 private:
  std::size_t n_;
  Eigen::VectorXcd v_;
};

QubitState tensor(const QubitState& a, const QubitState& b);

/// |<a|b>| / (|a||b|).
double fidelity(const QubitState& a, const QubitState& b);

/// Density matrix over up to 7 qubits.
class DensityOperator {
 public:
  static constexpr std::size_t kMaxQubits = 7;

  DensityOperator(std::size_t n_qubits, Eigen::MatrixXcd rho);
  static DensityOperator pure(const QubitState& s);

  std::size_t qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Complex trace() const { return rho_.trace(); }

  /// Throws InvariantViolation unless Hermitian, unit trace and PSD.
  void check() const;

 private:
  std::size_t n_;
  Eigen::MatrixXcd rho_;
};

enum class Pauli : unsigned char { I, X, Y, Z };

Pauli pauli_from_char(char c);
char to_char(Pauli p);
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Tensor product of single-qubit Paulis with a phase in {1, -1, i, -i}.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters, Complex phase = 1.0);
  /// Parses strings like "XXI", "-YY", "iZ".
  static PauliString parse(std::string_view text);
  static PauliString identity(std::size_t n);
  /// A single letter at position q of an n-qubit register.
  static PauliString single(std::size_t n, std::size_t q, Pauli p);

  std::size_t size() const { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  const std::vector<Pauli>& letters() const { return letters_; }
  Complex phase() const { return phase_; }
  std::size_t weight() const;
  bool commutes_with(const PauliString& other) const;
  std::string to_string() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  std::vector<Pauli> letters_;
  Complex phase_{1.0, 0.0};
};

QubitState apply_pauli(const QubitState& state, const PauliString& p);

/// Dense matrix of a Pauli string.
Eigen::MatrixXcd pauli_string_matrix(const PauliString& p);

/// (P)_theta = cos(theta/2) - i sin(theta/2) P for a Hermitian Pauli string.
QubitState apply_pauli_rotation(const QubitState& state, const PauliString& p, double theta);
Eigen::MatrixXcd pauli_rotation_matrix(const PauliString& p, double theta);

/// (U V)_theta on qubits (first, second).
struct TwoQubitRotation {
  Pauli u = Pauli::Z;
  Pauli v = Pauli::Z;
  double theta = 0;
  std::size_t first = 0;
  std::size_t second = 1;

  PauliString as_pauli(std::size_t n_qubits) const;
};

QubitState apply_rotation(const QubitState& state, const TwoQubitRotation& r);

/// U_theta on one qubit.
QubitState apply_single_rotation(const QubitState& state, Pauli p, double theta, std::size_t qubit);

/// Applies a dense 2x2 matrix to one qubit.
QubitState apply_single(const QubitState& state, const Eigen::Matrix2cd& m, std::size_t qubit);

/// (1 +- P)/2 |psi> for a Hermitian Pauli string, without renormalizing.
/// outcome > 0 selects the +1 eigenspace.
QubitState project_pauli(const QubitState& state, const PauliString& p, int outcome);

/// <psi|P|psi>.
double expectation(const QubitState& state, const PauliString& p);

}  // namespace loqc
