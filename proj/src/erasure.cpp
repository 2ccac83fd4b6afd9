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


#include "loqc/erasure.hpp"

#include <cmath>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

bool same_letters(const PauliString& a, const PauliString& b) { return a.letters() == b.letters(); }

QubitState project_code_space(const StabilizerCode& code, QubitState s) {
  for (const auto& g : code.generators) s = project_pauli(s, g, 1);
  return project_pauli(s, code.logical_z, 1);
}

QubitState logical_zero(const StabilizerCode& code) {
  const std::size_t dim = std::size_t{1} << code.n;
  for (std::size_t i = 0; i < dim; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(i)) = 1;
    const QubitState s = project_code_space(code, QubitState(code.n, v));
    if (s.norm() > 1e-6) return s.normalized();
  }
  throw InvariantViolation("code space is empty");
}

// Calls fn on every Pauli supported on the erased set (identity elsewhere).
template <class Fn>
bool all_paulis_on(std::size_t n, std::span<const std::size_t> erased, Fn fn) {
  std::vector<Pauli> letters(n, Pauli::I);
  const std::size_t total = std::size_t{1} << (2 * erased.size());
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < erased.size(); ++i) {
      letters[erased[i]] = static_cast<Pauli>((code >> (2 * i)) & 3u);
    }
    if (!fn(PauliString(letters))) return false;
  }
  return true;
}

void check_erased(const StabilizerCode& code, std::span<const std::size_t> erased) {
  for (std::size_t i = 0; i < erased.size(); ++i) {
    if (erased[i] >= code.n) throw ValidationError("erased qubit out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (erased[i] == erased[j]) throw ValidationError("erased qubit listed twice");
    }
  }
}

}  // namespace

DensityOperator apply_erasure(const DensityOperator& rho, std::size_t qubit, ErasureKind kind) {
  const std::size_t n = rho.qubits();
  if (qubit >= n) throw ValidationError("qubit out of range");
  const Eigen::MatrixXcd& r = rho.matrix();
  const Eigen::Index mask = Eigen::Index{1} << (n - 1 - qubit);
  // Elementwise so the output is Hermitian whenever the input is.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(r.rows(), r.cols());
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      if (((i ^ j) & mask) != 0) continue;
      out(i, j) = kind == ErasureKind::Z ? r(i, j) : 0.5 * (r(i, j) + r(i ^ mask, j ^ mask));
    }
  }
  return DensityOperator(n, std::move(out));
}

void StabilizerCode::validate() const {
  for (const auto& g : generators) {
    if (g.size() != n) throw InvariantViolation("generator length differs from the code length");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!generators[i].commutes_with(generators[j])) throw InvariantViolation("generators do not commute");
    }
    if (!generators[i].commutes_with(logical_x) || !generators[i].commutes_with(logical_z)) {
      throw InvariantViolation("logical operator does not commute with a generator");
    }
  }
  if (logical_x.commutes_with(logical_z)) throw InvariantViolation("logical X and Z commute");
}

std::vector<PauliString> StabilizerCode::stabilizer_group() const {
  std::vector<PauliString> group;
  const std::size_t g = generators.size();
  group.reserve(std::size_t{1} << g);
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    PauliString p = PauliString::identity(n);
    for (std::size_t i = 0; i < g; ++i) {
      if (mask >> i & 1u) p = p * generators[i];
    }
    group.push_back(std::move(p));
  }
  return group;
}

PauliString reduce_to_min_weight(const StabilizerCode& code, const PauliString& p) {
  PauliString best = p;
  for (const auto& s : code.stabilizer_group()) {
    PauliString c = p * s;
    if (c.weight() < best.weight()) best = std::move(c);
  }
  return best;
}

StabilizerCode steane_code() {
  StabilizerCode c;
  c.n = 7;
  for (const char* g : {"XXXXIII", "XXIIXXI", "XIXIXIX", "ZZZZIII", "ZZIIZZI", "ZIZIZIZ"}) {
    c.generators.push_back(PauliString::parse(g));
  }
  c.logical_x = reduce_to_min_weight(c, PauliString::parse("XXXXXXX"));
  c.logical_z = reduce_to_min_weight(c, PauliString::parse("ZZZZZZZ"));
  c.validate();
  return c;
}

StabilizerCode z_measurement_code() {
  StabilizerCode c{2, {PauliString::parse("XX")}, PauliString::parse("XI"), PauliString::parse("ZZ")};
  c.validate();
  return c;
}

QubitState code_state(const StabilizerCode& code, Complex alpha, Complex beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9) {
    throw ValidationError("logical amplitudes are not normalized");
  }
  const QubitState zero = logical_zero(code);
  const QubitState one = apply_pauli(zero, code.logical_x);
  return QubitState(code.n, alpha * zero.amplitudes() + beta * one.amplitudes());
}

bool erasure_correctable_pairs(const StabilizerCode& code, std::span<const std::size_t> erased) {
  check_erased(code, erased);
  const Eigen::VectorXcd zero = code_state(code, 1, 0).amplitudes();
  const Eigen::VectorXcd one = code_state(code, 0, 1).amplitudes();
  return all_paulis_on(code.n, erased, [&](const PauliString& p) {
    const Eigen::VectorXcd p0 = apply_pauli(QubitState(code.n, zero), p).amplitudes();
    const Eigen::VectorXcd p1 = apply_pauli(QubitState(code.n, one), p).amplitudes();
    return std::abs(zero.dot(p1)) < 1e-9 && std::abs(zero.dot(p0) - one.dot(p1)) < 1e-9;
  });
}

bool erasure_correctable_support(const StabilizerCode& code, std::span<const std::size_t> erased) {
  check_erased(code, erased);
  const auto group = code.stabilizer_group();
  return all_paulis_on(code.n, erased, [&](const PauliString& p) {
    for (const auto& g : code.generators) {
      if (!p.commutes_with(g)) return true;
    }
    for (const auto& s : group) {
      if (same_letters(s, p)) return true;
    }
    return false;
  });
}

bool erasure_correctable(const StabilizerCode& code, std::span<const std::size_t> erased) {
  return erasure_correctable_support(code, erased);
}

std::pair<std::size_t, std::size_t> count_correctable(const StabilizerCode& code, std::size_t k) {
  if (k > code.n) throw ValidationError("more erasures than qubits");
  std::size_t good = 0, total = 0;
  std::vector<std::size_t> set;
  for (std::size_t mask = 0; mask < (std::size_t{1} << code.n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    set.clear();
    for (std::size_t q = 0; q < code.n; ++q) {
      if (mask >> q & 1u) set.push_back(q);
    }
    ++total;
    good += erasure_correctable(code, set);
  }
  return {good, total};
}

SteaneRecovery steane_z_erasure_recovery(const QubitState& state, std::size_t qubit) {
  const StabilizerCode code = steane_code();
  if (state.qubits() != code.n) throw ValidationError("a Steane block has 7 qubits");
  if (qubit >= code.n) throw ValidationError("qubit out of range");
  if (!state.is_normalized(1e-9)) throw ValidationError("recovery needs a normalized state");
  const PauliString zq = PauliString::single(code.n, qubit, Pauli::Z);
  for (const auto& s : code.stabilizer_group()) {
    if (s.commutes_with(zq) && std::abs(expectation(state, s) - 1.0) > 1e-9) {
      throw ValidationError("state carries more than a single Z erasure on the given qubit");
    }
  }
  SteaneRecovery rec;
  bool found = false;
  for (std::size_t i = 0; i < code.generators.size() && !found; ++i) {
    if (code.generators[i][qubit] == Pauli::X) {
      rec.generator_index = i;
      found = true;
    }
  }
  if (!found) throw InvariantViolation("no X-type generator covers the qubit");
  const PauliString& g = code.generators[rec.generator_index];
  rec.generators_measured = 1;
  for (int m : {1, -1}) {
    QubitState s = project_pauli(state, g, m);
    const double p = s.amplitudes().squaredNorm();
    if (p < 1e-300) continue;
    if (m < 0) s = apply_pauli(s, zq);
    rec.branches.push_back({m, p, s.normalized()});
  }
  return rec;
}

}  // namespace loqc
