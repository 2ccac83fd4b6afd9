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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "loqc/fock.hpp"

namespace loqc {

/// |n> -> e^{i n phi} |n> on one mode.
struct PhaseShifter {
  std::size_t mode = 0;
  double phi = 0;
};

/// Two-mode element with matrix [[cos t, -e^{i phi} sin t], [e^{-i phi} sin t, cos t]]
/// acting as a_l^dag -> sum_m U_ml a_m^dag on (mode_a, mode_b).
struct BeamSplitter {
  std::size_t mode_a = 0;
  std::size_t mode_b = 1;
  double theta = 0;
  double phi = 0;
};

using Element = std::variant<PhaseShifter, BeamSplitter>;

Eigen::Matrix2cd beam_splitter_matrix(double theta, double phi);

/// Square unitary acting on mode creation operators. Construction checks
/// unitarity to 1e-10.
class ModeUnitary {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit ModeUnitary(Eigen::MatrixXcd m);
  static ModeUnitary identity(std::size_t n);

  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

  /// max |U^dag U - I|.
  static double unitarity_error(const Eigen::MatrixXcd& m);

 private:
  Eigen::MatrixXcd m_;
};

/// Embeds a k x k block on the listed modes of an n-mode identity.
Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& block, std::span<const std::size_t> modes,
                              std::size_t n);

struct DetectorSpec {
  std::vector<std::size_t> modes;
  std::optional<std::vector<unsigned>> postselect;
};

struct OpticalCircuit {
  std::size_t n_modes = 1;
  std::vector<Element> elements;
  std::optional<DetectorSpec> detector;

  /// Throws ValidationError on bad indices.
  void validate() const;
};

struct MeasurementOutcome {
  std::vector<unsigned> pattern;
  double probability = 0;
  /// Normalized state on the unmeasured modes; empty when probability is 0.
  /// When every mode is measured this is the one-mode vacuum.
  std::optional<FockState> conditional_state;
};

using PostSelection = MeasurementOutcome;

FockState apply_phase_shifter(const FockState& state, const PhaseShifter& ps);
FockState apply_beam_splitter(const FockState& state, const BeamSplitter& bs);
FockState apply_element(const FockState& state, const Element& e);

/// Applies elements in order and checks the photon-number distribution after
/// each one. A change raises InvariantViolation.
FockState apply_elements(const FockState& state, std::span<const Element> elements);

/// <m1 m2| B(theta, phi) |n1 n2>.
Complex bs_fock_matrix_element(unsigned m1, unsigned m2, unsigned n1, unsigned n2, double theta,
                               double phi);

/// Evolves through the compiled triangular netlist of U.
FockState apply_mode_unitary(const FockState& state, const ModeUnitary& u);

/// Permanent via Ryser's formula. The empty matrix has permanent 1.
Complex permanent(const Eigen::MatrixXcd& m);

/// <out| U |in> = perm(U_sub) / sqrt(prod in! prod out!).
Complex amplitude_permanent(const ModeUnitary& u, const Occupation& in, const Occupation& out);

/// Enumerates every pattern on the detector modes in canonical order.
std::vector<MeasurementOutcome> measure_modes(const FockState& state, const DetectorSpec& detector);

PostSelection post_select(const FockState& state, const DetectorSpec& detector,
                          std::span<const unsigned> pattern);

/// Modes not in the detector, in increasing order.
std::vector<std::size_t> surviving_modes(std::size_t n_modes, std::span<const std::size_t> measured);

using RunResult = std::variant<FockState, std::vector<MeasurementOutcome>>;

RunResult run_circuit(const OpticalCircuit& circuit, const FockState& input);

}  // namespace loqc
