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

#include "loqc/optics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "loqc/errors.hpp"
#include "loqc/reck.hpp"

namespace loqc {

namespace {

double factorial(unsigned n) { return std::tgamma(static_cast<double>(n) + 1.0); }

Complex ipow(Complex base, unsigned e) {
  Complex r = 1.0;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_mode(std::size_t mode, std::size_t n, const char* what) {
  if (mode >= n) {
    throw ValidationError(std::string(what) + " mode " + std::to_string(mode) +
                          " out of range for " + std::to_string(n) + " modes");
  }
}

}  // namespace

Eigen::Matrix2cd beam_splitter_matrix(double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2cd u;
  u << c, -std::polar(s, phi), std::polar(s, -phi), c;
  return u;
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) throw ValidationError("mode unitary must be square and non-empty");
  if (!m_.allFinite()) throw ValidationError("mode unitary has non-finite entries");
  double err = unitarity_error(m_);
  if (err > kTolerance) {
    throw ValidationError("matrix is not unitary (max |U^dag U - I| = " + std::to_string(err) + ")");
  }
}

ModeUnitary ModeUnitary::identity(std::size_t n) {
  return ModeUnitary(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

double ModeUnitary::unitarity_error(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& block, std::span<const std::size_t> modes,
                              std::size_t n) {
  if (static_cast<std::size_t>(block.rows()) != modes.size() || block.rows() != block.cols()) {
    throw ValidationError("block size does not match mode list");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < modes.size(); ++i) {
    check_mode(modes[i], n, "embedded");
    for (std::size_t j = 0; j < modes.size(); ++j) {
      out(static_cast<Eigen::Index>(modes[i]), static_cast<Eigen::Index>(modes[j])) =
          block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

void OpticalCircuit::validate() const {
  if (n_modes == 0) throw ValidationError("circuit needs at least one mode");
  for (const auto& e : elements) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
      check_mode(ps->mode, n_modes, "phase shifter");
    } else {
      const auto& bs = std::get<BeamSplitter>(e);
      check_mode(bs.mode_a, n_modes, "beam splitter");
      check_mode(bs.mode_b, n_modes, "beam splitter");
      if (bs.mode_a == bs.mode_b) throw ValidationError("beam splitter needs two distinct modes");
    }
  }
  if (detector) {
    std::vector<std::size_t> sorted = detector->modes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("detector modes must be distinct");
    }
    for (auto m : sorted) check_mode(m, n_modes, "detector");
    if (detector->postselect && detector->postselect->size() != detector->modes.size()) {
      throw ValidationError("post-selection pattern length does not match detector modes");
    }
  }
}

FockState apply_phase_shifter(const FockState& state, const PhaseShifter& ps) {
  check_mode(ps.mode, state.modes(), "phase shifter");
  FockState out(state.modes());
  for (const auto& [occ, a] : state.terms()) {
    out.add(occ, a * std::polar(1.0, ps.phi * occ[ps.mode]));
  }
  out.prune();
  return out;
}

Complex bs_fock_matrix_element(unsigned m1, unsigned m2, unsigned n1, unsigned n2, double theta,
                               double phi) {
  if (m1 + m2 != n1 + n2) return {};
  // a1^dag -> c a1^dag + e^{-i phi} s a2^dag,  a2^dag -> -e^{i phi} s a1^dag + c a2^dag.
  const Eigen::Matrix2cd u = beam_splitter_matrix(theta, phi);
  const Complex u11 = u(0, 0), u21 = u(1, 0), u12 = u(0, 1), u22 = u(1, 1);
  Complex sum{};
  for (unsigned k = 0; k <= n1; ++k) {
    if (k > m1) break;
    unsigned l = m1 - k;
    if (l > n2) continue;
    sum += binomial(n1, k) * ipow(u11, k) * ipow(u21, n1 - k) * binomial(n2, l) * ipow(u12, l) *
           ipow(u22, n2 - l);
  }
  return sum * std::sqrt(factorial(m1) * factorial(m2) / (factorial(n1) * factorial(n2)));
}

FockState apply_beam_splitter(const FockState& state, const BeamSplitter& bs) {
  check_mode(bs.mode_a, state.modes(), "beam splitter");
  check_mode(bs.mode_b, state.modes(), "beam splitter");
  if (bs.mode_a == bs.mode_b) throw ValidationError("beam splitter needs two distinct modes");
  // Blocks for each two-mode photon total, built on first use.
  std::map<unsigned, Eigen::MatrixXcd> blocks;
  auto block_for = [&](unsigned total) -> const Eigen::MatrixXcd& {
    auto it = blocks.find(total);
    if (it != blocks.end()) return it->second;
    Eigen::MatrixXcd b(total + 1, total + 1);
    for (unsigned m1 = 0; m1 <= total; ++m1) {
      for (unsigned n1 = 0; n1 <= total; ++n1) {
        b(m1, n1) = bs_fock_matrix_element(m1, total - m1, n1, total - n1, bs.theta, bs.phi);
      }
    }
    return blocks.emplace(total, std::move(b)).first->second;
  };
  FockState out(state.modes());
  for (const auto& [occ, a] : state.terms()) {
    const unsigned n1 = occ[bs.mode_a], n2 = occ[bs.mode_b];
    const unsigned total = n1 + n2;
    const auto& b = block_for(total);
    for (unsigned m1 = 0; m1 <= total; ++m1) {
      Complex c = b(m1, n1);
      if (std::abs(c) < kPruneThreshold) continue;
      out.add(occ.with(bs.mode_a, m1).with(bs.mode_b, total - m1), a * c);
    }
  }
  out.prune();
  return out;
}

FockState apply_element(const FockState& state, const Element& e) {
  return std::visit(
      [&](const auto& el) -> FockState {
        if constexpr (std::is_same_v<std::decay_t<decltype(el)>, PhaseShifter>) {
          return apply_phase_shifter(state, el);
        } else {
          return apply_beam_splitter(state, el);
        }
      },
      e);
}

namespace {

void check_photon_numbers(const std::map<unsigned, double>& before, const std::map<unsigned, double>& after) {
  auto weight = [](const std::map<unsigned, double>& d, unsigned n) {
    auto it = d.find(n);
    return it == d.end() ? 0.0 : it->second;
  };
  for (const auto& [n, w] : before) {
    if (std::abs(w - weight(after, n)) > 1e-9) throw InvariantViolation("photon number changed by a linear-optical element");
  }
  for (const auto& [n, w] : after) {
    if (std::abs(w - weight(before, n)) > 1e-9) throw InvariantViolation("photon number changed by a linear-optical element");
  }
}

}  // namespace

FockState apply_elements(const FockState& state, std::span<const Element> elements) {
  FockState cur = state;
  auto dist = cur.photon_number_distribution();
  for (const auto& e : elements) {
    cur = apply_element(cur, e);
    auto next = cur.photon_number_distribution();
    check_photon_numbers(dist, next);
    dist = std::move(next);
  }
  return cur;
}

FockState apply_mode_unitary(const FockState& state, const ModeUnitary& u) {
  if (u.dimension() != state.modes()) throw ValidationError("unitary dimension does not match mode count");
  const auto elements = compile_to_elements(decompose(u));
  return apply_elements(state, elements);
}

Complex permanent(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw ValidationError("permanent of a non-square matrix");
  if (n == 0) return 1.0;
  if (n > 30) throw CapacityError("permanent size too large");
  // Ryser with Gray-code subset updates.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  Complex total{};
  std::uint64_t gray = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < limit; ++k) {
    std::uint64_t next = k ^ (k >> 1);
    std::uint64_t diff = next ^ gray;
    int col = __builtin_ctzll(diff);
    if (next & diff) {
      row_sums += m.col(col);
    } else {
      row_sums -= m.col(col);
    }
    gray = next;
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    int bits = __builtin_popcountll(gray);
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return total;
}

Complex amplitude_permanent(const ModeUnitary& u, const Occupation& in, const Occupation& out) {
  if (in.modes() != u.dimension() || out.modes() != u.dimension()) {
    throw ValidationError("occupation width does not match unitary");
  }
  if (in.total() != out.total()) return {};
  std::vector<Eigen::Index> cols, rows;
  double norm = 1;
  for (std::size_t l = 0; l < in.modes(); ++l) {
    for (unsigned k = 0; k < in[l]; ++k) cols.push_back(static_cast<Eigen::Index>(l));
    norm *= factorial(in[l]);
  }
  for (std::size_t m = 0; m < out.modes(); ++m) {
    for (unsigned k = 0; k < out[m]; ++k) rows.push_back(static_cast<Eigen::Index>(m));
    norm *= factorial(out[m]);
  }
  Eigen::MatrixXcd sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = u.matrix()(rows[i], cols[j]);
  }
  return permanent(sub) / std::sqrt(norm);
}

std::vector<std::size_t> surviving_modes(std::size_t n_modes, std::span<const std::size_t> measured) {
  std::vector<std::size_t> keep;
  for (std::size_t m = 0; m < n_modes; ++m) {
    if (std::find(measured.begin(), measured.end(), m) == measured.end()) keep.push_back(m);
  }
  return keep;
}

namespace {

void check_detector(const FockState& state, const DetectorSpec& detector) {
  OpticalCircuit probe{state.modes(), {}, detector};
  probe.validate();
  if (std::abs(state.norm_squared() - 1.0) > 1e-9) throw ValidationError("measurement needs a normalized state");
}

}  // namespace

std::vector<MeasurementOutcome> measure_modes(const FockState& state, const DetectorSpec& detector) {
  check_detector(state, detector);
  const auto keep = surviving_modes(state.modes(), detector.modes);
  const std::size_t out_modes = std::max<std::size_t>(keep.size(), 1);
  std::map<std::vector<unsigned>, FockState> groups;
  std::vector<unsigned> pattern(detector.modes.size());
  std::vector<unsigned> rest(out_modes, 0);
  for (const auto& [occ, a] : state.terms()) {
    for (std::size_t i = 0; i < detector.modes.size(); ++i) pattern[i] = occ[detector.modes[i]];
    for (std::size_t i = 0; i < keep.size(); ++i) rest[i] = occ[keep[i]];
    groups.try_emplace(pattern, out_modes).first->second.add(Occupation(rest), a);
  }
  std::vector<MeasurementOutcome> outcomes;
  for (auto& [pat, s] : groups) {
    double p = s.norm_squared();
    if (p == 0) continue;
    outcomes.push_back({pat, p, s.normalized()});
  }
  double total = 0;
  for (const auto& o : outcomes) total += o.probability;
  if (std::abs(total - 1.0) > 1e-9) throw InvariantViolation("outcome probabilities do not sum to 1");
  return outcomes;
}

PostSelection post_select(const FockState& state, const DetectorSpec& detector,
                          std::span<const unsigned> pattern) {
  if (pattern.size() != detector.modes.size()) throw ValidationError("pattern length does not match detector modes");
  check_detector(state, detector);
  const auto keep = surviving_modes(state.modes(), detector.modes);
  FockState s(std::max<std::size_t>(keep.size(), 1));
  std::vector<unsigned> rest(s.modes(), 0);
  for (const auto& [occ, a] : state.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.size() && match; ++i) match = occ[detector.modes[i]] == pattern[i];
    if (!match) continue;
    for (std::size_t i = 0; i < keep.size(); ++i) rest[i] = occ[keep[i]];
    s.add(Occupation(rest), a);
  }
  PostSelection out{std::vector<unsigned>(pattern.begin(), pattern.end()), s.norm_squared(), std::nullopt};
  if (out.probability > 0) out.conditional_state = s.normalized();
  return out;
}

RunResult run_circuit(const OpticalCircuit& circuit, const FockState& input) {
  circuit.validate();
  if (input.modes() != circuit.n_modes) {
    throw ValidationError("input has " + std::to_string(input.modes()) + " modes, circuit has " +
                          std::to_string(circuit.n_modes));
  }
  FockState out = apply_elements(input, circuit.elements);
  if (!circuit.detector) return out;
  if (circuit.detector->postselect) {
    return std::vector<MeasurementOutcome>{post_select(out, *circuit.detector, *circuit.detector->postselect)};
  }
  return measure_modes(out, *circuit.detector);
}

}  // namespace loqc
