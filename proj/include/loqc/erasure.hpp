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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "loqc/qubits.hpp"

namespace loqc {

enum class ErasureKind { Full, Z };

/// Full: (rho + X rho X + Y rho Y + Z rho Z)/4 on one qubit.
/// Z: (rho + Z rho Z)/2.
DensityOperator apply_erasure(const DensityOperator& rho, std::size_t qubit, ErasureKind kind);

/// Stabilizer code with one logical qubit.
struct StabilizerCode {
  std::size_t n = 0;
  std::vector<PauliString> generators;
  PauliString logical_x;
  PauliString logical_z;

  /// Throws InvariantViolation if generators fail to commute, a logical fails
  /// to commute with a generator, or the logicals commute with each other.
  void validate() const;

  /// All 2^g products of generators, phases included.
  std::vector<PauliString> stabilizer_group() const;
};

/// Generators XXXXIII, XXIIXXI, XIXIXIX, ZZZZIII, ZZIIZZI, ZIZIZIZ; logicals
/// X^7 and Z^7 reduced to minimum weight.
StabilizerCode steane_code();

/// Two-qubit code stabilized by XX with Xbar = XI, Zbar = ZZ.
StabilizerCode z_measurement_code();

/// Lowest-weight element of p times the stabilizer group. Ties go to the
/// first in group order.
PauliString reduce_to_min_weight(const StabilizerCode& code, const PauliString& p);

/// alpha |0bar> + beta |1bar>.
QubitState code_state(const StabilizerCode& code, Complex alpha, Complex beta);

/// Every Pauli P supported on the erased set has <0bar|P|1bar> = 0 and
/// <0bar|P|0bar> = <1bar|P|1bar>.
bool erasure_correctable_pairs(const StabilizerCode& code, std::span<const std::size_t> erased);

/// No Pauli supported on the erased set commutes with every generator
/// without lying in the stabilizer group.
bool erasure_correctable_support(const StabilizerCode& code, std::span<const std::size_t> erased);

bool erasure_correctable(const StabilizerCode& code, std::span<const std::size_t> erased);

/// (correctable, total) over all erased sets of size k.
std::pair<std::size_t, std::size_t> count_correctable(const StabilizerCode& code, std::size_t k);

struct SteaneRecoveryBranch {
  int measured = 1;
  double probability = 0;
  QubitState state{7};
};

struct SteaneRecovery {
  std::size_t generator_index = 0;
  std::size_t generators_measured = 0;
  std::vector<SteaneRecoveryBranch> branches;
};

/// Recovers a Steane block after a Z erasure or Z measurement on one qubit:
/// measures one X-type generator containing it and applies Z there on -1.
/// Throws ValidationError if the state is not stabilized by every group
/// element that commutes with Z on that qubit.
SteaneRecovery steane_z_erasure_recovery(const QubitState& state, std::size_t qubit);

}  // namespace loqc
