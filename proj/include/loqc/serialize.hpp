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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "loqc/gates.hpp"
#include "loqc/reck.hpp"
#include "loqc/teleport.hpp"

namespace loqc {

using Json = nlohmann::json;

/// x rounded to 12 significant digits. Magnitudes below 1e-12 and -0 map to 0.
double round12(double x);
/// printf("%.12g") of round12(x).
std::string format12(double x);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Parses "a+bi", "a-bi", "a", "bi", "-i" and similar.
Complex parse_complex(std::string_view text);

/// {"n_modes": m, "terms": [{"occ": [...], "re": x, "im": y}, ...]} in
/// canonical order.
Json state_to_json(const FockState& s);
FockState state_from_json(const Json& j);

Json element_to_json(const Element& e);
Json circuit_to_json(const OpticalCircuit& c);
/// Angles are in degrees in the file. Throws ValidationError on bad shape.
OpticalCircuit circuit_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
/// Checks unitarity (ModeUnitary).
ModeUnitary unitary_from_json(const Json& j);

Json plan_to_json(const DecompositionPlan& plan);
Json outcome_to_json(const MeasurementOutcome& o);
Json gate_result_to_json(std::string_view gate, const GateResult& r);
Json teleport_outcome_to_json(const TeleportOutcome& o);

/// Parses text, turning parse errors into ValidationError.
Json parse_json(const std::string& text);

}  // namespace loqc
