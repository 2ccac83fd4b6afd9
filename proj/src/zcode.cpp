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

#include "loqc/zcode.hpp"

#include <cmath>
#include <numbers>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr double kQuarter = std::numbers::pi / 2;
constexpr Complex kI{0.0, 1.0};

void require_normalized(Complex a, Complex b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9) throw ValidationError("logical amplitudes are not normalized");
}

// <bra| on one qubit, removing it from the register.
QubitState contract(const QubitState& s, std::size_t qubit, const Eigen::Vector2cd& bra) {
  const std::size_t n = s.qubits();
  const std::size_t m = n - 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << m);
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.amplitudes().size()); ++i) {
    const auto b = s.bit(i, qubit);
    const std::size_t high = i >> (n - qubit);
    const std::size_t low = i & ((std::size_t{1} << (n - 1 - qubit)) - 1);
    const std::size_t j = (high << (n - 1 - qubit)) | low;
    out(static_cast<Eigen::Index>(j)) += std::conj(bra(static_cast<Eigen::Index>(b))) * s[i];
  }
  return QubitState(m, out);
}

Eigen::Vector2cd y_eigen(int s) {
  const double r = std::sqrt(0.5);
  return Eigen::Vector2cd(r, s > 0 ? kI * r : -kI * r);
}

Eigen::Vector2cd z_eigen(int s) { return s > 0 ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1); }

// Rank of the linear map (alpha, beta) -> residual, from its two columns.
bool carries_information(const QubitState& r0, const QubitState& r1) {
  const double n0 = r0.amplitudes().squaredNorm(), n1 = r1.amplitudes().squaredNorm();
  if (n0 < 1e-20 || n1 < 1e-20) return false;
  const double c = std::norm(r0.amplitudes().dot(r1.amplitudes()));
  return c < (1 - 1e-9) * n0 * n1;
}

}  // namespace

QubitState encode_z_code(Complex alpha, Complex beta) {
  require_normalized(alpha, beta);
  const double r = std::sqrt(0.5);
  Eigen::VectorXcd v(4);
  v << alpha * r, beta * r, beta * r, alpha * r;
  return QubitState(2, v);
}

QubitState apply_steps(const QubitState& state, std::span<const RotationStep> steps) {
  QubitState s = state;
  for (const auto& step : steps) {
    if (const auto* one = std::get_if<SingleQubitRotation>(&step)) {
      s = apply_single_rotation(s, one->p, one->theta, one->qubit);
    } else {
      s = apply_rotation(s, std::get<TwoQubitRotation>(step));
    }
  }
  return s;
}

std::vector<RotationStep> z_code_preparation_circuit() {
  return {SingleQubitRotation{Pauli::Y, -kQuarter, 0}, TwoQubitRotation{Pauli::Z, Pauli::Y, kQuarter, 0, 1},
          SingleQubitRotation{Pauli::Y, kQuarter, 0}};
}

QubitState prepare_z_code(Complex alpha, Complex beta) {
  require_normalized(alpha, beta);
  const auto steps = z_code_preparation_circuit();
  return apply_steps(tensor(QubitState::single(alpha, beta), QubitState::basis("0")), steps);
}

ZMeasurement z_measure(const QubitState& state, std::size_t qubit, int outcome) {
  if (!state.is_normalized(1e-9)) throw ValidationError("measurement needs a normalized state");
  if (qubit >= state.qubits()) throw ValidationError("qubit out of range");
  const QubitState p = project_pauli(state, PauliString::single(state.qubits(), qubit, Pauli::Z), outcome);
  ZMeasurement m{outcome > 0 ? 1 : -1, p.amplitudes().squaredNorm(), std::nullopt};
  if (m.probability > 1e-300) m.state = p.normalized();
  return m;
}

std::vector<ZMeasurement> z_measure_all(const QubitState& state, std::size_t qubit) {
  return {z_measure(state, qubit, 1), z_measure(state, qubit, -1)};
}

std::vector<RecoveryBranch> recover_z_measurement(const QubitState& state, std::size_t projected_qubit, int outcome,
                                                  RecoveryCircuit circuit) {
  if (state.qubits() != 2 || projected_qubit > 1) throw ValidationError("recovery acts on a two-qubit block");
  if (!state.is_normalized(1e-9)) throw ValidationError("recovery needs a normalized state");
  const auto zp = PauliString::single(2, projected_qubit, Pauli::Z);
  const int sign = outcome > 0 ? 1 : -1;
  if (std::abs(expectation(state, zp) - sign) > 1e-9) {
    throw ValidationError("input is not Z-projected on the given qubit with the given outcome");
  }
  const std::size_t other = 1 - projected_qubit;
  std::vector<RecoveryBranch> out;
  for (int m : {1, -1}) {
    QubitState s = state;
    if (circuit == RecoveryCircuit::StabilizerMeasurement) {
      s = project_pauli(s, PauliString::parse("XX"), m);
      const double p = s.amplitudes().squaredNorm();
      if (p < 1e-300) continue;
      if (m < 0) s = apply_pauli(s, zp);
      out.push_back({m, p, s.normalized()});
    } else {
      const TwoQubitRotation fwd{Pauli::Y, Pauli::X, -kQuarter, projected_qubit, other};
      const TwoQubitRotation back{Pauli::Y, Pauli::X, kQuarter, projected_qubit, other};
      s = apply_rotation(s, fwd);
      s = project_pauli(s, zp, m);
      const double p = s.amplitudes().squaredNorm();
      if (p < 1e-300) continue;
      if (m < 0) s = apply_pauli(s, PauliString::parse("XX"));
      s = apply_rotation(s, back);
      out.push_back({m, p, s.normalized()});
    }
  }
  return out;
}

std::vector<PauliString> encoded_pauli(EncodedOp op) {
  switch (op) {
    case EncodedOp::X: return {PauliString::parse("XI"), PauliString::parse("IX")};
    case EncodedOp::Y: return {PauliString::parse("YZ"), PauliString::parse("ZY")};
    case EncodedOp::Z: return {PauliString::parse("ZZ"), PauliString::parse("-YY")};
  }
  throw ValidationError("unknown encoded operator");
}

QubitState encoded_x_rotation(const QubitState& state, double phi) {
  return apply_single_rotation(state, Pauli::X, phi, 0);
}

QubitState encoded_z90(const QubitState& state) {
  return apply_pauli_rotation(state, PauliString::parse("ZZ"), kQuarter);
}

QubitState encoded_zz90(const QubitState& state) {
  return apply_pauli_rotation(state, PauliString::parse("ZZZZ"), kQuarter);
}

Eigen::Matrix2cd y_from_x_and_z90(double phi) {
  const Eigen::MatrixXcd z90 = pauli_rotation_matrix(PauliString::parse("Z"), kQuarter);
  const Eigen::MatrixXcd zm90 = pauli_rotation_matrix(PauliString::parse("Z"), -kQuarter);
  const Eigen::MatrixXcd x = pauli_rotation_matrix(PauliString::parse("X"), phi);
  return z90 * x * zm90;
}

Eigen::Matrix4cd csign_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1;
  return m;
}

ZZDressing solve_zz_csign_dressing() {
  const Eigen::MatrixXcd zz = pauli_rotation_matrix(PauliString::parse("ZZ"), kQuarter);
  const Eigen::Matrix4cd target = csign_matrix();
  const double angles[] = {0.0, kQuarter, -kQuarter, 2 * kQuarter};
  for (double a : angles) {
    for (double b : angles) {
      const Eigen::MatrixXcd d = pauli_rotation_matrix(PauliString::parse("ZI"), a) *
                                 pauli_rotation_matrix(PauliString::parse("IZ"), b);
      const Eigen::MatrixXcd m = d * zz;
      const double phase = std::arg(target(0, 0) / m(0, 0));
      if ((std::polar(1.0, phase) * m - target).cwiseAbs().maxCoeff() < 1e-12) return {a, b, phase};
    }
  }
  throw InvariantViolation("no quarter-turn Z dressing turns (ZZ)_90 into CSign");
}

ConditionTable qecc_condition_table(std::span<const QubitState> codewords, std::span<const Eigen::MatrixXcd> errors) {
  ConditionTable t;
  const std::size_t k = codewords.size(), m = errors.size();
  if (k == 0) throw ValidationError("no code words");
  for (const auto& c : codewords) {
    if (!c.is_normalized(1e-9)) throw ValidationError("code words must be normalized");
    if (c.qubits() != codewords[0].qubits()) throw ValidationError("code words have different sizes");
  }
  const auto dim = codewords[0].amplitudes().size();
  for (const auto& e : errors) {
    if (e.rows() != dim || e.cols() != dim) throw ValidationError("error operator has the wrong dimension");
  }
  t.entries.assign(m, std::vector<Eigen::MatrixXcd>(m, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Eigen::MatrixXcd op = errors[a].adjoint() * errors[b];
      auto& c = t.entries[a][b];
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              codewords[i].amplitudes().dot(op * codewords[j].amplitudes());
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const Complex v = c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          const Complex ref = c(0, 0);
          const bool bad = i == j ? std::abs(v - ref) > 1e-12 : std::abs(v) > 1e-12;
          if (bad) {
            t.satisfied = false;
            t.violations.push_back("E" + std::to_string(a) + "^dag E" + std::to_string(b) + " at (" + std::to_string(i) +
                                   "," + std::to_string(j) + (i == j ? ") depends on the code word" : ") is off-diagonal nonzero"));
          }
        }
      }
    }
  }
  return t;
}

std::vector<Eigen::MatrixXcd> z_measurement_errors() {
  const Eigen::MatrixXcd i4 = Eigen::MatrixXcd::Identity(4, 4);
  const Eigen::MatrixXcd z1 = pauli_string_matrix(PauliString::parse("ZI"));
  return {0.5 * (i4 + z1), 0.5 * (i4 - z1)};
}

QubitState tx2_state() {
  const double r = std::sqrt(0.5);
  const QubitState start = tensor(QubitState::basis("0"), QubitState::single(r, kI * r));
  return apply_rotation(start, TwoQubitRotation{Pauli::Y, Pauli::Z, kQuarter, 0, 1});
}

namespace {

QubitState nice_state_at_a(Complex alpha, Complex beta) {
  const QubitState in = tensor(QubitState::single(alpha, beta), tx2_state());
  return apply_rotation(in, TwoQubitRotation{Pauli::Z, Pauli::Y, kQuarter, 0, 1});
}

}  // namespace

NiceTeleportReport nice_teleport(Complex alpha, Complex beta, InjectedError error) {
  require_normalized(alpha, beta);
  NiceTeleportReport rep;
  rep.error = error;
  rep.state_at_a = nice_state_at_a(alpha, beta);
  const QubitState a0 = nice_state_at_a(1.0, 0.0), a1 = nice_state_at_a(0.0, 1.0);
  const QubitState input = QubitState::single(alpha, beta);
  bool any_info = false;

  if (error == InjectedError::None) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        auto reduce = [&](const QubitState& s) { return contract(contract(s, 0, y_eigen(s1)), 0, z_eigen(s2)); };
        QubitState r = reduce(rep.state_at_a);
        const double p = r.amplitudes().squaredNorm();
        any_info = any_info || carries_information(reduce(a0), reduce(a1));
        NiceTeleportBranch b{s1, s2, p, r.normalized(), "", 0};
        QubitState fixed = b.residual;
        if (s1 > 0) {
          fixed = apply_pauli(fixed, PauliString::parse("Z"));
          b.correction += "Z";
        }
        if (s2 > 0) {
          fixed = apply_pauli(fixed, PauliString::parse("X"));
          b.correction += "X";
        }
        b.fidelity = fidelity(fixed, input);
        rep.branches.push_back(std::move(b));
      }
    }
  } else if (error == InjectedError::ZOnQubit1) {
    for (int s : {1, -1}) {
      auto reduce = [&](const QubitState& st) { return contract(st, 0, z_eigen(s)); };
      QubitState r = reduce(rep.state_at_a);
      const double p = r.amplitudes().squaredNorm();
      any_info = any_info || carries_information(reduce(a0), reduce(a1));
      rep.branches.push_back({s, 0, p, r.normalized(), "", 0});
    }
  } else {
    for (int s : {1, -1}) {
      auto reduce = [&](const QubitState& st) { return contract(st, 1, y_eigen(s)); };
      QubitState r = reduce(rep.state_at_a);
      const double p = r.amplitudes().squaredNorm();
      any_info = any_info || carries_information(reduce(a0), reduce(a1));
      NiceTeleportBranch b{s, 0, p, r.normalized(), s > 0 ? "Z_-90" : "Z_90", 0};
      // Qubit 0 carries -+ i alpha |0> + beta |1>; qubit 2 is left in (|0> -+ |1>)/sqrt2.
      const QubitState fixed = apply_single_rotation(b.residual, Pauli::Z, s > 0 ? -kQuarter : kQuarter, 0);
      const double r2 = std::sqrt(0.5);
      b.fidelity = fidelity(fixed, tensor(input, QubitState::single(r2, -s * r2)));
      rep.branches.push_back(std::move(b));
    }
  }
  rep.information_preserved = any_info;
  return rep;
}

}  // namespace loqc
