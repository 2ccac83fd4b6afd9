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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "loqc/cli.hpp"
#include "loqc/errors.hpp"
#include "loqc/serialize.hpp"

namespace loqc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("loqc_test_" + name);
  std::ofstream(p) << text;
  return p;
}

TEST(Format, Rounding) {
  EXPECT_EQ(format12(0.1 + 0.2), "0.3");
  EXPECT_EQ(format12(1e-13), "0");
  EXPECT_EQ(format12(-0.0), "0");
  EXPECT_EQ(format12(-1e-13), "0");
  EXPECT_EQ(format12(2.0 / 27), "0.0740740740741");
  EXPECT_EQ(format12(1e20), "1e+20");
  EXPECT_EQ(round12(0.25), 0.25);
}

TEST(Format, ParseComplex) {
  EXPECT_EQ(parse_complex("1+2i"), Complex(1, 2));
  EXPECT_EQ(parse_complex("1-2i"), Complex(1, -2));
  EXPECT_EQ(parse_complex("-0.5i"), Complex(0, -0.5));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("3"), Complex(3, 0));
  EXPECT_EQ(parse_complex(" 0.6 "), Complex(0.6, 0));
  EXPECT_EQ(parse_complex("1e-3-2.5e2i"), Complex(1e-3, -250));
  EXPECT_EQ(parse_complex("2E+1+i"), Complex(20, 1));
  EXPECT_EQ(parse_complex("1+2j"), Complex(1, 2));
  EXPECT_EQ(parse_complex("0.6 - 0.8i"), Complex(0.6, -0.8));
  for (const char* bad : {"", "abc", "1+", "2ii", "1 2", "i1", "1+2k"}) {
    EXPECT_THROW(parse_complex(bad), ValidationError) << bad;
  }
}

TEST(Json, StateRoundTrip) {
  FockState s(3);
  s.add({1, 0, 2}, Complex(0.6, 0));
  s.add({0, 3, 0}, Complex(0, -0.8));
  const Json j = state_to_json(s);
  EXPECT_EQ(j.at("n_modes"), 3);
  EXPECT_EQ(j.at("terms").size(), 2u);
  const FockState back = state_from_json(j);
  EXPECT_LT(max_abs_difference(s, back), 1e-15);
  EXPECT_THROW(state_from_json(Json{{"n_modes", 2}, {"terms", Json::array({Json{{"occ", {1, 0, 0}}, {"re", 1}, {"im", 0}}})}}),
               ValidationError);
}

TEST(Json, CircuitRoundTripInDegrees) {
  const Json j = parse_json(R"({"n_modes": 3, "elements": [
      {"type": "bs", "modes": [0, 2], "theta_deg": 45, "phi_deg": 90},
      {"type": "ps", "mode": 1, "phi_deg": 180}],
      "detect": {"modes": [2], "postselect": [1]}})");
  const OpticalCircuit c = circuit_from_json(j);
  ASSERT_EQ(c.elements.size(), 2u);
  const auto& bs = std::get<BeamSplitter>(c.elements[0]);
  EXPECT_NEAR(bs.theta, std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(std::get<PhaseShifter>(c.elements[1]).phi, std::numbers::pi, 1e-15);
  ASSERT_TRUE(c.detector && c.detector->postselect);
  const OpticalCircuit again = circuit_from_json(circuit_to_json(c));
  EXPECT_EQ(circuit_to_json(again).dump(), circuit_to_json(c).dump());

  EXPECT_THROW(circuit_from_json(parse_json(R"({"n_modes": 2, "elements": [{"type": "bs", "modes": [0, 5], "theta_deg": 1}]})")),
               ValidationError);
  EXPECT_THROW(circuit_from_json(parse_json(R"({"n_modes": 2, "elements": [{"type": "mirror"}]})")), ValidationError);
  EXPECT_THROW(parse_json("{\"n_modes\": "), ValidationError);
}

TEST(Json, UnitaryChecksUnitarity) {
  const Json good = parse_json(R"({"n": 2, "rows": [[{"re": 0, "im": 0}, {"re": 1, "im": 0}],
                                                   [{"re": 1, "im": 0}, {"re": 0, "im": 0}]]})");
  EXPECT_NO_THROW(unitary_from_json(good));
  Json bad = good;
  bad["rows"][0][0]["re"] = 0.1;
  EXPECT_THROW(unitary_from_json(bad), ValidationError);
  const Eigen::MatrixXcd m = unitary_from_json(good).matrix();
  EXPECT_EQ(matrix_to_json(m), good);
}

TEST(Cli, GateExperiments) {
  CliRun r = cli({"ns", "--alpha", "0.577", "--beta", "0.577", "--gamma", "0.577"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j.at("success_probability").get<double>(), 0.25, 1e-9);

  r = cli({"csign", "klm", "--alpha", "0.5", "--beta", "0.5", "--gamma", "0.5", "--delta", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out).at("success_probability").get<double>(), 1.0 / 16, 1e-9);

  r = cli({"csign", "2_27", "--refined", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out).at("success_probability").get<double>(), 2.0 / 27, 1e-9);

  r = cli({"teleport", "--n", "2", "--alpha", "0.6", "--beta", "0.8i"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_NEAR(j.at("success_probability").get<double>(), 2.0 / 3, 1e-9);
  double total = 0;
  for (const auto& o : j.at("outcomes")) total += o.at("probability").get<double>();
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Cli, ErasureAndThreshold) {
  CliRun r = cli({"erasure", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out), (Json{{"correctable", 28}, {"k", 3}, {"total", 35}}));
  r = cli({"erasure"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("counts").size(), 8u);

  r = cli({"threshold", "--f", "0.5", "--trials", "1000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "f,F_z_analytic,F_z_mc,stderr");
  EXPECT_EQ(row.substr(0, 8), "0.5,0.5,");

  r = cli({"threshold", "--f-min", "0.1", "--f-max", "0.3", "--f-step", "0.1", "--trials", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(Cli, RunAndDecomposeFiles) {
  const fs::path circ = write_temp("hom.json", R"({"n_modes": 2, "elements": [
      {"type": "bs", "modes": [0, 1], "theta_deg": 45}], "detect": {"modes": [0, 1]}})");
  CliRun r = cli({"run", "--circuit", circ.string(), "--occ", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  for (const auto& o : j.at("outcomes")) {
    if (o.at("pattern") == Json{1, 1}) EXPECT_EQ(o.at("probability").get<double>(), 0.0);
  }

  const fs::path u = write_temp("swap.json", R"({"n": 2, "rows": [[{"re": 0, "im": 0}, {"re": 1, "im": 0}],
                                                                 [{"re": 1, "im": 0}, {"re": 0, "im": 0}]]})");
  r = cli({"decompose", "--unitary", u.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out).contains("plan"));

  const fs::path out = fs::temp_directory_path() / "loqc_test_out.json";
  r = cli({"--out", out.string(), "erasure", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  EXPECT_EQ(Json::parse(in).at("correctable"), 7);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({"teleport", "--n", "4", "--alpha", "1", "--beta", "0"}).code, 1);
  EXPECT_EQ(cli({"threshold", "--f", "1.5"}).code, 1);
  EXPECT_EQ(cli({"ns", "--alpha", "x", "--beta", "0", "--gamma", "0"}).code, 1);
  EXPECT_EQ(cli({"ns", "--alpha", "0", "--beta", "0", "--gamma", "0"}).code, 1);
  EXPECT_EQ(cli({"erasure", "--k", "8"}).code, 1);
  EXPECT_EQ(cli({"decompose", "--unitary", "/nonexistent/u.json"}).code, 1);
  const fs::path junk = write_temp("junk.json", "{ not json");
  const CliRun r = cli({"decompose", "--unitary", junk.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  const fs::path nonunitary = write_temp("nonunitary.json", R"({"n": 1, "rows": [[{"re": 2, "im": 0}]]})");
  EXPECT_EQ(cli({"decompose", "--unitary", nonunitary.string()}).code, 1);
}

TEST(Cli, RepeatedInvocationsAreIdentical) {
  const std::vector<std::vector<std::string>> cmds = {
      {"recover-demo"},
      {"threshold", "--f", "0.3", "--trials", "20000", "--seed", "3"},
      {"csign", "teleported", "--alpha", "1", "--beta", "1i", "--gamma", "1", "--delta", "-1"},
  };
  for (const auto& c : cmds) {
    const CliRun a = cli(c), b = cli(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace loqc
