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

#include <vector>

#include "loqc/optics.hpp"

namespace loqc {

/// T_{p,q}: the beam-splitter matrix placed at rows/columns (q, p) of the
/// identity, q first.
struct TwoModeRotation {
  std::size_t p = 1;
  std::size_t q = 0;
  double theta = 0;
  double phi = 0;
};

/// U = (T_1 T_2 ... T_k D)^{-1} with the rotations in stored order, which is
/// T_{N,N-1}, T_{N,N-2}, ..., T_{2,1} in one-based mode labels.
struct DecompositionPlan {
  std::size_t n = 0;
  std::vector<TwoModeRotation> rotations;
  std::vector<double> diagonal_phases;
};

Eigen::MatrixXcd rotation_matrix(const TwoModeRotation& t, std::size_t n);

DecompositionPlan decompose(const ModeUnitary& u);
ModeUnitary reconstruct(const DecompositionPlan& plan);

/// Forward-executable netlist: one beam splitter per rotation (always
/// emitted, even at theta = 0) followed by a phase shifter for each nonzero
/// diagonal phase.
std::vector<Element> compile_to_elements(const DecompositionPlan& plan);

}  // namespace loqc
