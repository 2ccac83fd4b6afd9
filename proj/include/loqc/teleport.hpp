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
#include <vector>

#include "loqc/gates.hpp"

namespace loqc {

/// (1/sqrt(n+1)) sum_j |1>^j |0>^{n-j} |0>^j |1>^{n-j} on 2n modes.
struct ResourceState {
  unsigned n = 1;
  FockState state{2};
};

ResourceState t_n_state(unsigned n);

/// u_kl = e^{2 pi i k l / dim} / sqrt(dim).
ModeUnitary fourier_unitary(std::size_t dim);

/// The network applied to the input rail and the first resource block:
/// the 45 degree beam splitter for n = 1, F_{n+1} otherwise.
ModeUnitary teleport_measurement_unitary(unsigned n);

/// Mode layout of a rail teleportation with resource t_n:
///   0            input |1>_q rail (beta)
///   1 .. n       first resource block (measured with mode 0)
///   n+1 .. 2n    second resource block
///   2n+1         input |0>_q rail (alpha)
/// A success with k detected photons leaves the qubit on (one = n+k, zero = 2n+1).
struct TeleportOutcome {
  enum class Status { Success, FailureZ };
  std::vector<unsigned> pattern;
  unsigned k = 0;
  double probability = 0;
  Status status = Status::FailureZ;
  std::size_t output_mode = 0;
  std::optional<PhaseShifter> correction;
  int projected_value = 0;
  /// Normalized state on modes n+1 .. 2n+1 before any correction.
  FockState conditional_state{1};
  /// Logical amplitudes of the output qubit after correction (success only).
  QubitAmplitudes corrected{};
};

std::vector<TeleportOutcome> teleport_rail(Complex alpha, Complex beta, unsigned n);

/// Phase shifter (in the layout above) that restores the input on a success
/// pattern. Throws NotCorrectable on failure patterns.
PhaseShifter correction_for_outcome(unsigned n, std::span<const unsigned> pattern);

/// Two n = 1 teleportations through the entangled resource. Qubit 1 on modes
/// (one 0, zero 1), qubit 2 on (one 2, zero 3), resource on 4..7; detectors
/// on modes 0, 4, 2, 6 in that order.
GateResult teleported_csign(QubitAmplitudes q1, QubitAmplitudes q2);

}  // namespace loqc
