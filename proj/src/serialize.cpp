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


#include "loqc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double to_deg(double rad) { return round12(rad / kDeg); }

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::vector<unsigned> counts_of(const Occupation& o) { return {o.counts().begin(), o.counts().end()}; }

const char* fate_name(QubitFate::Kind k) {
  switch (k) {
    case QubitFate::Kind::Intact: return "intact";
    case QubitFate::Kind::ZProjected: return "z_projected";
    case QubitFate::Kind::Lost: return "lost";
  }
  return "lost";
}

}  // namespace

double round12(double x) {
  // Residues of exact zeros stay out of the output.
  constexpr double kOutputZero = 1e-12;
  if (!std::isfinite(x)) throw ValidationError("non-finite number in output");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return std::abs(r) < kOutputZero ? 0.0 : r;
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

Json complex_to_json(Complex z) { return Json{{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

Complex complex_from_json(const Json& j) { return {get_field<double>(j, "re"), get_field<double>(j, "im")}; }

Complex parse_complex(std::string_view text) {
  // Spaces are allowed at the ends and around the joining sign only.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != ' ') {
      s.push_back(text[i]);
      continue;
    }
    const bool after_sign = !s.empty() && (s.back() == '+' || s.back() == '-');
    const auto next = text.find_first_not_of(' ', i);
    const bool before_sign = next == std::string_view::npos || text[next] == '+' || text[next] == '-';
    if (!s.empty() && !after_sign && !before_sign) s.push_back(' ');
  }
  const auto fail = [&] { return ValidationError("cannot parse complex number \"" + std::string(text) + "\""); };
  auto number = [&](const std::string& t, double unit_default) -> double {
    if (t.empty() || t == "+") return unit_default;
    if (t == "-") return -unit_default;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != t.size() || !std::isfinite(v)) throw fail();
    return v;
  };
  if (s.empty()) throw fail();
  if (s.back() != 'i' && s.back() != 'j') return {number(s, 0.0), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  if (split == 0) return {0.0, number(s, 1.0)};
  const std::string re = s.substr(0, split);
  if (re == "+" || re == "-") throw fail();
  return {number(re, 0.0), number(s.substr(split), 1.0)};
}

Json state_to_json(const FockState& s) {
  Json terms = Json::array();
  for (const auto& [occ, a] : s.terms()) {
    terms.push_back(Json{{"occ", counts_of(occ)}, {"re", round12(a.real())}, {"im", round12(a.imag())}});
  }
  return Json{{"n_modes", s.modes()}, {"terms", terms}};
}

FockState state_from_json(const Json& j) {
  const auto n = get_field<std::size_t>(j, "n_modes");
  FockState s(n);
  const Json terms = get_field<Json>(j, "terms");
  if (!terms.is_array()) throw ValidationError("\"terms\" must be an array");
  for (const auto& t : terms) {
    s.add(Occupation(get_field<std::vector<unsigned>>(t, "occ")), {get_field<double>(t, "re"), get_field<double>(t, "im")});
  }
  if (s.empty()) throw ValidationError("state has no terms");
  return s;
}

Json element_to_json(const Element& e) {
  if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
    return Json{{"type", "ps"}, {"mode", ps->mode}, {"phi_deg", to_deg(ps->phi)}};
  }
  const auto& bs = std::get<BeamSplitter>(e);
  return Json{{"type", "bs"},
              {"modes", {bs.mode_a, bs.mode_b}},
              {"theta_deg", to_deg(bs.theta)},
              {"phi_deg", to_deg(bs.phi)}};
}

Json circuit_to_json(const OpticalCircuit& c) {
  Json els = Json::array();
  for (const auto& e : c.elements) els.push_back(element_to_json(e));
  Json j{{"n_modes", c.n_modes}, {"elements", els}};
  if (c.detector) {
    Json d{{"modes", c.detector->modes}};
    if (c.detector->postselect) d["postselect"] = *c.detector->postselect;
    j["detect"] = d;
  }
  return j;
}

OpticalCircuit circuit_from_json(const Json& j) {
  OpticalCircuit c;
  c.n_modes = get_field<std::size_t>(j, "n_modes");
  const Json els = get_field<Json>(j, "elements");
  if (!els.is_array()) throw ValidationError("\"elements\" must be an array");
  for (const auto& e : els) {
    const auto type = get_field<std::string>(e, "type");
    const double phi = e.contains("phi_deg") ? get_field<double>(e, "phi_deg") * kDeg : 0.0;
    if (type == "ps") {
      c.elements.emplace_back(PhaseShifter{get_field<std::size_t>(e, "mode"), phi});
    } else if (type == "bs") {
      const auto modes = get_field<std::vector<std::size_t>>(e, "modes");
      if (modes.size() != 2) throw ValidationError("a beam splitter needs exactly two modes");
      c.elements.emplace_back(BeamSplitter{modes[0], modes[1], get_field<double>(e, "theta_deg") * kDeg, phi});
    } else {
      throw ValidationError("unknown element type \"" + type + "\"");
    }
  }
  if (j.contains("detect")) {
    const Json& d = j.at("detect");
    DetectorSpec spec{get_field<std::vector<std::size_t>>(d, "modes"), std::nullopt};
    if (d.contains("postselect")) spec.postselect = get_field<std::vector<unsigned>>(d, "postselect");
    c.detector = spec;
  }
  c.validate();
  return c;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return Json{{"n", m.rows()}, {"rows", rows}};
}

ModeUnitary unitary_from_json(const Json& j) {
  const auto n = get_field<std::size_t>(j, "n");
  const Json rows = get_field<Json>(j, "rows");
  if (n == 0 || !rows.is_array() || rows.size() != n) throw ValidationError("\"rows\" must hold n rows");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw ValidationError("every row must hold n entries");
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(rows[r][c]);
    }
  }
  return ModeUnitary(m);
}

Json plan_to_json(const DecompositionPlan& plan) {
  Json rots = Json::array();
  for (const auto& t : plan.rotations) {
    rots.push_back(Json{{"p", t.p}, {"q", t.q}, {"theta_deg", to_deg(t.theta)}, {"phi_deg", to_deg(t.phi)}});
  }
  Json phases = Json::array();
  for (double d : plan.diagonal_phases) phases.push_back(to_deg(d));
  return Json{{"n", plan.n}, {"rotations", rots}, {"diagonal_phases_deg", phases}};
}

Json outcome_to_json(const MeasurementOutcome& o) {
  Json j{{"pattern", o.pattern}, {"probability", round12(o.probability)}};
  j["conditional_state"] = o.conditional_state ? state_to_json(*o.conditional_state) : Json(nullptr);
  return j;
}

Json gate_result_to_json(std::string_view gate, const GateResult& r) {
  Json qubits = Json::array();
  for (const auto& q : r.qubits) qubits.push_back(Json{{"one_rail", q.one_rail}, {"zero_rail", q.zero_rail}});
  Json failures = Json::array();
  for (const auto& f : r.failure_outcomes) {
    Json fates = Json::array();
    for (const auto& q : f.qubits) {
      fates.push_back(Json{{"kind", fate_name(q.kind)}, {"value", q.value}, {"needs_z", q.needs_z}});
    }
    failures.push_back(Json{{"pattern", f.pattern},
                            {"probability", round12(f.probability)},
                            {"kind", f.kind == FailureOutcome::Kind::ZProjection ? "z_projection" : "other"},
                            {"qubits", fates}});
  }
  Json j{{"gate", gate}, {"success_probability", round12(r.success_probability)}, {"qubits", qubits}, {"failures", failures}};
  j["conditional_state"] = r.success_probability > 0 ? state_to_json(r.output) : Json(nullptr);
  if (!r.qubits.empty() && r.success_probability > 0) {
    const Eigen::VectorXcd v = logical_amplitudes(r.output, r.qubits);
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) amps.push_back(complex_to_json(v(i)));
    j["logical_amplitudes"] = amps;
  }
  return j;
}

Json teleport_outcome_to_json(const TeleportOutcome& o) {
  const bool ok = o.status == TeleportOutcome::Status::Success;
  Json j{{"measurement", o.pattern},
         {"k", o.k},
         {"probability", round12(o.probability)},
         {"status", ok ? "success" : "failure_z"}};
  if (ok) {
    j["output_mode"] = o.output_mode;
    j["correction_phi_deg"] = o.correction ? to_deg(o.correction->phi) : 0.0;
    j["corrected"] = Json::array({complex_to_json(o.corrected[0]), complex_to_json(o.corrected[1])});
  } else {
    j["projected_value"] = o.projected_value;
  }
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace loqc
