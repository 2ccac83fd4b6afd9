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


#include "loqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "loqc/erasure.hpp"
#include "loqc/errors.hpp"
#include "loqc/serialize.hpp"
#include "loqc/threshold.hpp"
#include "loqc/zcode.hpp"

namespace loqc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Complex> normalized_flags(const std::vector<std::string>& texts) {
  std::vector<Complex> v;
  double n = 0;
  for (const auto& t : texts) {
    v.push_back(parse_complex(t));
    n += std::norm(v.back());
  }
  if (!(n > 0)) throw ValidationError("amplitudes must not all be zero");
  for (auto& z : v) z /= std::sqrt(n);
  return v;
}

Json complex_list(std::span<const Complex> v) {
  Json j = Json::array();
  for (Complex z : v) j.push_back(complex_to_json(z));
  return j;
}

std::vector<unsigned> parse_occ(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != item.size()) throw ValidationError("bad occupation list \"" + text + "\"");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw ValidationError("empty occupation list");
  return out;
}

void check_unit(double f, const char* name) {
  if (!(f >= 0.0 && f <= 1.0)) throw ValidationError(std::string(name) + " must lie in [0, 1]");
}

struct AmpFlags {
  std::string alpha, beta, gamma, delta;
};

void add_amp_options(CLI::App* app, AmpFlags& a, bool two_qubits) {
  app->add_option("--alpha", a.alpha, "amplitude as a+bi")->required();
  app->add_option("--beta", a.beta, "amplitude as a+bi")->required();
  if (two_qubits) {
    app->add_option("--gamma", a.gamma, "amplitude as a+bi")->required();
    app->add_option("--delta", a.delta, "amplitude as a+bi")->required();
  }
}

Json recover_demo(Complex alpha, Complex beta) {
  Json zc = Json::array();
  const QubitState encoded = encode_z_code(alpha, beta);
  for (std::size_t q : {0u, 1u}) {
    for (const auto& m : z_measure_all(encoded, q)) {
      if (!m.state) continue;
      for (auto circuit : {RecoveryCircuit::StabilizerMeasurement, RecoveryCircuit::RotatedMeasurement}) {
        Json branches = Json::array();
        for (const auto& b : recover_z_measurement(*m.state, q, m.outcome, circuit)) {
          branches.push_back(Json{{"measured", b.measured},
                                  {"probability", round12(b.probability)},
                                  {"fidelity", round12(fidelity(b.state, encoded))}});
        }
        zc.push_back(Json{{"projected_qubit", q},
                          {"outcome", m.outcome},
                          {"probability", round12(m.probability)},
                          {"circuit", circuit == RecoveryCircuit::StabilizerMeasurement ? "stabilizer" : "rotated"},
                          {"branches", branches}});
      }
    }
  }
  const StabilizerCode steane = steane_code();
  const QubitState block = code_state(steane, alpha, beta);
  Json st = Json::array();
  for (const auto& m : z_measure_all(block, 0)) {
    if (!m.state) continue;
    const SteaneRecovery rec = steane_z_erasure_recovery(*m.state, 0);
    Json branches = Json::array();
    for (const auto& b : rec.branches) {
      branches.push_back(Json{{"measured", b.measured},
                              {"probability", round12(b.probability)},
                              {"fidelity", round12(fidelity(b.state, block))}});
    }
    st.push_back(Json{{"qubit", 0},
                      {"outcome", m.outcome},
                      {"probability", round12(m.probability)},
                      {"generator", steane.generators[rec.generator_index].to_string()},
                      {"generators_measured", rec.generators_measured},
                      {"branches", branches}});
  }
  const std::vector<Complex> in{alpha, beta};
  return Json{{"input", complex_list(in)}, {"z_code", zc}, {"steane", st}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-optics quantum computing laboratory", "loqc"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the result to a file instead of standard output");

  std::ostringstream result;

  auto* run = app.add_subcommand("run", "evolve a state through a circuit file");
  std::string circuit_path, state_path, occ_text;
  run->add_option("--circuit", circuit_path, "circuit JSON")->required();
  auto* state_opt = run->add_option("--state", state_path, "input state JSON");
  run->add_option("--occ", occ_text, "input occupation, e.g. 1,0,1")->excludes(state_opt);

  auto* decompose_cmd = app.add_subcommand("decompose", "triangular beam-splitter decomposition of a unitary");
  std::string unitary_path;
  decompose_cmd->add_option("--unitary", unitary_path, "unitary JSON")->required();

  auto* ns = app.add_subcommand("ns", "nonlinear sign gate on a|0> + b|1> + c|2>");
  AmpFlags ns_amps;
  add_amp_options(ns, ns_amps, false);
  ns->add_option("--gamma", ns_amps.gamma, "amplitude as a+bi")->required();

  auto* csign = app.add_subcommand("csign", "post-selected controlled sign gates");
  csign->require_subcommand(1);
  AmpFlags cs_amps;
  bool refined = false;
  auto* klm = csign->add_subcommand("klm", "two nonlinear sign gates, success 1/16");
  auto* knill = csign->add_subcommand("2_27", "four beam splitters, success 2/27");
  auto* tele = csign->add_subcommand("teleported", "CSign applied through two teleportations");
  for (auto* c : {klm, knill, tele}) add_amp_options(c, cs_amps, true);
  knill->add_flag("--refined", refined, "use angles re-solved for exact CSign");

  auto* teleport = app.add_subcommand("teleport", "rail teleportation through t_n");
  unsigned n = 1;
  AmpFlags tp_amps;
  teleport->add_option("--n", n, "resource size")->required()->check(CLI::Range(1u, 3u));
  add_amp_options(teleport, tp_amps, false);

  auto* threshold = app.add_subcommand("threshold", "failure recursion against Monte Carlo, as CSV");
  double f = 0, f_min = 0, f_max = 0, f_step = 0;
  std::uint64_t trials = 100000, seed = 1;
  auto* f_opt = threshold->add_option("--f", f, "single failure probability");
  auto* fmin_opt = threshold->add_option("--f-min", f_min)->excludes(f_opt);
  auto* fmax_opt = threshold->add_option("--f-max", f_max)->excludes(f_opt);
  auto* fstep_opt = threshold->add_option("--f-step", f_step)->excludes(f_opt);
  threshold->add_option("--trials", trials, "Monte Carlo trials per point");
  threshold->add_option("--seed", seed, "random seed");

  auto* erasure = app.add_subcommand("erasure", "Steane-code erasure correctability counts");
  std::size_t k = 0;
  auto* k_opt = erasure->add_option("--k", k, "number of erased qubits")->check(CLI::Range(0, 7));

  auto* demo = app.add_subcommand("recover-demo", "Z-measurement recovery on the two-qubit and Steane codes");
  AmpFlags demo_amps{"0.6", "0.8i", "", ""};
  demo->add_option("--alpha", demo_amps.alpha, "amplitude as a+bi");
  demo->add_option("--beta", demo_amps.beta, "amplitude as a+bi");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      const OpticalCircuit c = circuit_from_json(parse_json(read_file(circuit_path)));
      FockState input(c.n_modes);
      if (!state_path.empty()) {
        input = state_from_json(parse_json(read_file(state_path)));
      } else if (!occ_text.empty()) {
        input = FockState::basis(Occupation(parse_occ(occ_text)));
      } else {
        throw ValidationError("run needs --state or --occ");
      }
      const RunResult r = run_circuit(c, input);
      Json j;
      if (const auto* s = std::get_if<FockState>(&r)) {
        j["output_state"] = state_to_json(*s);
      } else {
        Json outs = Json::array();
        for (const auto& o : std::get<std::vector<MeasurementOutcome>>(r)) outs.push_back(outcome_to_json(o));
        j["outcomes"] = outs;
      }
      result << j.dump(2) << '\n';
    } else if (*decompose_cmd) {
      const ModeUnitary u = unitary_from_json(parse_json(read_file(unitary_path)));
      const DecompositionPlan plan = decompose(u);
      const std::vector<Element> els = compile_to_elements(plan);
      Json ej = Json::array();
      for (const auto& e : els) ej.push_back(element_to_json(e));
      const double rec = (reconstruct(plan).matrix() - u.matrix()).cwiseAbs().maxCoeff();
      if (rec > 1e-9) throw InvariantViolation("decomposition does not reconstruct the unitary");
      result << Json{{"plan", plan_to_json(plan)}, {"elements", ej}}.dump(2) << '\n';
    } else if (*ns) {
      const auto a = normalized_flags({ns_amps.alpha, ns_amps.beta, ns_amps.gamma});
      Json j = gate_result_to_json("ns", ns_gate(a[0], a[1], a[2]));
      j["input"] = complex_list(a);
      result << j.dump(2) << '\n';
    } else if (*csign) {
      const auto q1 = normalized_flags({cs_amps.alpha, cs_amps.beta});
      const auto q2 = normalized_flags({cs_amps.gamma, cs_amps.delta});
      const QubitAmplitudes a1{q1[0], q1[1]}, a2{q2[0], q2[1]};
      Json j;
      if (*klm) {
        j = gate_result_to_json("csign_klm", csign_klm(a1, a2));
      } else if (*knill) {
        const KnillAngles angles = refined ? knill_refined_angles() : knill_rounded_angles();
        j = gate_result_to_json("csign_2_27", csign_knill_2_27(a1, a2, angles));
        const double d = 180.0 / std::numbers::pi;
        j["angles_deg"] = {round12(angles.theta1 * d), round12(angles.theta2 * d), round12(angles.theta3 * d),
                           round12(angles.theta4 * d)};
      } else {
        j = gate_result_to_json("csign_teleported", teleported_csign(a1, a2));
      }
      j["input"] = Json{{"q1", complex_list(q1)}, {"q2", complex_list(q2)}};
      result << j.dump(2) << '\n';
    } else if (*teleport) {
      const auto a = normalized_flags({tp_amps.alpha, tp_amps.beta});
      const auto outcomes = teleport_rail(a[0], a[1], n);
      Json rows = Json::array();
      double success = 0;
      for (const auto& o : outcomes) {
        rows.push_back(teleport_outcome_to_json(o));
        if (o.status == TeleportOutcome::Status::Success) success += o.probability;
      }
      result << Json{{"n", n}, {"input", complex_list(a)}, {"success_probability", round12(success)}, {"outcomes", rows}}.dump(2)
             << '\n';
    } else if (*threshold) {
      std::vector<double> grid;
      if (*f_opt) {
        check_unit(f, "--f");
        grid.push_back(f);
      } else {
        if (!*fmin_opt || !*fmax_opt || !*fstep_opt) throw ValidationError("give --f or all of --f-min, --f-max, --f-step");
        check_unit(f_min, "--f-min");
        check_unit(f_max, "--f-max");
        if (!(f_step > 0) || f_max < f_min) throw ValidationError("need --f-step > 0 and --f-min <= --f-max");
        const auto count = static_cast<std::size_t>(std::floor((f_max - f_min) / f_step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) grid.push_back(std::min(f_max, f_min + static_cast<double>(i) * f_step));
      }
      if (trials == 0) throw ValidationError("--trials must be at least 1");
      result << "f,F_z_analytic,F_z_mc,stderr\n";
      for (double x : grid) {
        const FailureRates r = failure_recursions(x);
        const MonteCarloEstimate mc = monte_carlo_failure(x, trials, seed);
        result << format12(x) << ',' << format12(r.F_z) << ',' << format12(mc.F_z_hat) << ',' << format12(mc.stderr_z)
               << '\n';
      }
    } else if (*erasure) {
      const StabilizerCode code = steane_code();
      if (*k_opt) {
        const auto [good, total] = count_correctable(code, k);
        result << Json{{"k", k}, {"correctable", good}, {"total", total}}.dump(2) << '\n';
      } else {
        Json counts = Json::array();
        for (std::size_t i = 0; i <= code.n; ++i) {
          const auto [good, total] = count_correctable(code, i);
          counts.push_back(Json{{"k", i}, {"correctable", good}, {"total", total}});
        }
        result << Json{{"code", "steane"}, {"counts", counts}}.dump(2) << '\n';
      }
    } else if (*demo) {
      const auto a = normalized_flags({demo_amps.alpha, demo_amps.beta});
      result << recover_demo(a[0], a[1]).dump(2) << '\n';
    }

    if (out_path.empty()) {
      out << result.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw ValidationError("cannot write file " + out_path);
      file << result.str();
      if (!file) throw ValidationError("failed writing file " + out_path);
    }
    return 0;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace loqc
