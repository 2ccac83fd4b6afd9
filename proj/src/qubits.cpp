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

#include "loqc/qubits.hpp"

#include <cmath>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Index dim_for(std::size_t n) { return Eigen::Index{1} << n; }

// Product of two single letters: a * b = phase * letter.
std::pair<Complex, Pauli> letter_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // X=1, Y=2, Z=3; cyclic order X->Y->Z gives +i.
  const int third = 6 - ia - ib;
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? kI : -kI, static_cast<Pauli>(third)};
}

bool hermitian_phase(Complex phase) { return std::abs(phase.imag()) < 1e-15; }

}  // namespace

QubitState::QubitState(std::size_t n_qubits) : n_(n_qubits), v_(Eigen::VectorXcd::Zero(dim_for(n_qubits))) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) throw ValidationError("qubit register must hold 1..8 qubits");
  v_(0) = 1.0;
}

QubitState::QubitState(std::size_t n_qubits, Eigen::VectorXcd amplitudes) : n_(n_qubits), v_(std::move(amplitudes)) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) throw ValidationError("qubit register must hold 1..8 qubits");
  if (v_.size() != dim_for(n_qubits)) throw ValidationError("amplitude vector has the wrong length");
  if (!v_.allFinite()) throw ValidationError("non-finite amplitude");
}

QubitState QubitState::basis(std::string_view bits) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_for(bits.size()));
  Eigen::Index idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("basis label must be 0/1");
    idx = (idx << 1) | (c == '1');
  }
  v(idx) = 1.0;
  return QubitState(bits.size(), v);
}

QubitState QubitState::single(Complex a0, Complex a1) {
  Eigen::VectorXcd v(2);
  v << a0, a1;
  return QubitState(1, v);
}

QubitState QubitState::normalized() const {
  const double n = norm();
  if (n == 0) throw ValidationError("cannot normalize the zero vector");
  return QubitState(n_, v_ / n);
}

QubitState tensor(const QubitState& a, const QubitState& b) {
  Eigen::VectorXcd v(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  }
  return QubitState(a.qubits() + b.qubits(), v);
}

double fidelity(const QubitState& a, const QubitState& b) {
  if (a.qubits() != b.qubits()) throw ValidationError("fidelity of registers with different sizes");
  const double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) return 0;
  return std::abs(a.amplitudes().dot(b.amplitudes())) / (na * nb);
}

DensityOperator::DensityOperator(std::size_t n_qubits, Eigen::MatrixXcd rho) : n_(n_qubits), rho_(std::move(rho)) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) throw ValidationError("density operator must cover 1..7 qubits");
  if (rho_.rows() != dim_for(n_qubits) || rho_.cols() != dim_for(n_qubits)) {
    throw ValidationError("density matrix has the wrong shape");
  }
}

DensityOperator DensityOperator::pure(const QubitState& s) {
  return DensityOperator(s.qubits(), s.amplitudes() * s.amplitudes().adjoint());
}

void DensityOperator::check() const {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw InvariantViolation("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > 1e-10) throw InvariantViolation("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_);
  if (es.eigenvalues().minCoeff() < -1e-8) throw InvariantViolation("density matrix is not positive semidefinite");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ValidationError(std::string("not a Pauli letter: ") + c);
  }
}

char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString::PauliString(std::vector<Pauli> letters, Complex phase) : letters_(std::move(letters)), phase_(phase) {
  const bool ok = std::abs(std::abs(phase.real()) + std::abs(phase.imag()) - 1.0) < 1e-15 &&
                  (phase.real() == 0 || phase.imag() == 0);
  if (!ok) throw ValidationError("Pauli phase must be one of 1, -1, i, -i");
}

PauliString PauliString::parse(std::string_view text) {
  Complex phase = 1.0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    if (text[0] == '-') phase = -1.0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text[0] == 'i') {
    phase *= kI;
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  for (char c : text) letters.push_back(pauli_from_char(c));
  if (letters.empty()) throw ValidationError("empty Pauli string");
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::identity(std::size_t n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }

PauliString PauliString::single(std::size_t n, std::size_t q, Pauli p) {
  std::vector<Pauli> l(n, Pauli::I);
  l.at(q) = p;
  return PauliString(std::move(l));
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (auto p : letters_) w += p != Pauli::I;
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.size() != size()) throw ValidationError("Pauli strings have different lengths");
  std::size_t anti = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    anti += letters_[i] != Pauli::I && other.letters_[i] != Pauli::I && letters_[i] != other.letters_[i];
  }
  return anti % 2 == 0;
}

std::string PauliString::to_string() const {
  std::string s;
  if (phase_ == Complex(-1.0, 0.0)) s = "-";
  if (phase_ == kI) s = "i";
  if (phase_ == -kI) s = "-i";
  for (auto p : letters_) s += to_char(p);
  return s;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw ValidationError("Pauli strings have different lengths");
  Complex phase = a.phase_ * b.phase_;
  std::vector<Pauli> l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [ph, p] = letter_product(a.letters_[i], b.letters_[i]);
    phase *= ph;
    l[i] = p;
  }
  // Keep the phase exactly on the unit cross.
  phase = Complex(std::round(phase.real()), std::round(phase.imag()));
  return PauliString(std::move(l), phase);
}

QubitState apply_pauli(const QubitState& state, const PauliString& p) {
  const std::size_t n = state.qubits();
  if (p.size() != n) throw ValidationError("Pauli string length does not match the register");
  std::size_t xmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p[q] == Pauli::X || p[q] == Pauli::Y) xmask |= std::size_t{1} << (n - 1 - q);
  }
  const auto& v = state.amplitudes();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Complex f = p.phase();
    for (std::size_t q = 0; q < n; ++q) {
      const auto b = state.bit(static_cast<std::size_t>(i), q);
      if (p[q] == Pauli::Z && b) f = -f;
      if (p[q] == Pauli::Y) f *= b ? -kI : kI;
    }
    out(static_cast<Eigen::Index>(static_cast<std::size_t>(i) ^ xmask)) += f * v(i);
  }
  return QubitState(n, out);
}

Eigen::MatrixXcd pauli_string_matrix(const PauliString& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (auto l : p.letters()) {
    const Eigen::Matrix2cd s = pauli_matrix(l);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * s;
    }
    m = std::move(next);
  }
  return p.phase() * m;
}

QubitState apply_pauli_rotation(const QubitState& state, const PauliString& p, double theta) {
  if (!hermitian_phase(p.phase())) throw ValidationError("rotation generator must be Hermitian");
  const QubitState pv = apply_pauli(state, p);
  return QubitState(state.qubits(), std::cos(theta / 2) * state.amplitudes() - kI * std::sin(theta / 2) * pv.amplitudes());
}

Eigen::MatrixXcd pauli_rotation_matrix(const PauliString& p, double theta) {
  if (!hermitian_phase(p.phase())) throw ValidationError("rotation generator must be Hermitian");
  const auto d = dim_for(p.size());
  return std::cos(theta / 2) * Eigen::MatrixXcd::Identity(d, d) - kI * std::sin(theta / 2) * pauli_string_matrix(p);
}

PauliString TwoQubitRotation::as_pauli(std::size_t n_qubits) const {
  if (first == second || first >= n_qubits || second >= n_qubits) throw ValidationError("rotation targets out of range");
  std::vector<Pauli> l(n_qubits, Pauli::I);
  l[first] = u;
  l[second] = v;
  return PauliString(std::move(l));
}

QubitState apply_rotation(const QubitState& state, const TwoQubitRotation& r) {
  return apply_pauli_rotation(state, r.as_pauli(state.qubits()), r.theta);
}

QubitState apply_single_rotation(const QubitState& state, Pauli p, double theta, std::size_t qubit) {
  return apply_pauli_rotation(state, PauliString::single(state.qubits(), qubit, p), theta);
}

QubitState apply_single(const QubitState& state, const Eigen::Matrix2cd& m, std::size_t qubit) {
  const std::size_t n = state.qubits();
  if (qubit >= n) throw ValidationError("qubit out of range");
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  const auto& v = state.amplitudes();
  Eigen::VectorXcd out(v.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()); ++i) {
    const std::size_t i0 = i & ~mask, i1 = i | mask;
    const int b = (i & mask) ? 1 : 0;
    out(static_cast<Eigen::Index>(i)) = m(b, 0) * v(static_cast<Eigen::Index>(i0)) + m(b, 1) * v(static_cast<Eigen::Index>(i1));
  }
  return QubitState(n, out);
}

QubitState project_pauli(const QubitState& state, const PauliString& p, int outcome) {
  if (!hermitian_phase(p.phase())) throw ValidationError("measured Pauli must be Hermitian");
  const QubitState pv = apply_pauli(state, p);
  const double s = outcome > 0 ? 1.0 : -1.0;
  return QubitState(state.qubits(), 0.5 * (state.amplitudes() + s * pv.amplitudes()));
}

double expectation(const QubitState& state, const PauliString& p) {
  return state.amplitudes().dot(apply_pauli(state, p).amplitudes()).real();
}

}  // namespace loqc
