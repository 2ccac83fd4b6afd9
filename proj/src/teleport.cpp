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

#include "loqc/teleport.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "loqc/errors.hpp"

namespace loqc {

namespace {

constexpr unsigned kMaxRailN = 3;

double snap_phase(double phi) {
  phi = std::remainder(phi, 2 * std::numbers::pi);
  if (phi <= -std::numbers::pi) phi += 2 * std::numbers::pi;
  if (std::abs(phi) < 1e-12) phi = 0.0;
  if (std::abs(phi - std::numbers::pi) < 1e-12) phi = std::numbers::pi;
  return phi;
}

// Input qubit on rails (0, 2n+1) tensored with t_n on modes 1..2n, pushed
// through the measurement network.
FockState rail_evolved(Complex alpha, Complex beta, unsigned n) {
  const std::size_t width = 2 * n + 2;
  FockState in(width);
  const auto& res = t_n_state(n).state;
  for (const auto& [occ, a] : res.terms()) {
    std::vector<unsigned> c(width, 0);
    for (std::size_t i = 0; i < 2 * n; ++i) c[i + 1] = occ[i];
    auto zero = c, one = c;
    zero[width - 1] = 1;
    one[0] = 1;
    in.add(Occupation(zero), alpha * a);
    in.add(Occupation(one), beta * a);
  }
  in.prune();
  std::vector<std::size_t> measured(n + 1);
  std::iota(measured.begin(), measured.end(), 0);
  const ModeUnitary u(embed_matrix(teleport_measurement_unitary(n).matrix(), measured, width));
  return apply_mode_unitary(in, u);
}

DetectorSpec rail_detector(unsigned n) {
  DetectorSpec d;
  d.modes.resize(n + 1);
  std::iota(d.modes.begin(), d.modes.end(), 0);
  return d;
}

unsigned pattern_total(std::span<const unsigned> p) { return std::accumulate(p.begin(), p.end(), 0u); }

// Output qubit inside the conditional state (modes n+1 .. 2n+1 renumbered).
DualRailQubit output_qubit(unsigned n, unsigned k) { return {k - 1, n}; }

// Logical amplitudes of the output qubit. For k < n the second block still
// holds spectator photons; they must form one fixed pattern.
Eigen::VectorXcd output_amplitudes(const FockState& cond, unsigned n, unsigned k) {
  const DualRailQubit q = output_qubit(n, k);
  std::optional<std::vector<unsigned>> spectators;
  for (const auto& [occ, a] : cond.terms()) {
    std::vector<unsigned> rest;
    for (std::size_t m = 0; m < occ.modes(); ++m) {
      if (m != q.one_rail && m != q.zero_rail) rest.push_back(occ[m]);
    }
    if (!spectators) spectators = rest;
    if (*spectators != rest) throw InvariantViolation("spectator modes are entangled with the output qubit");
  }
  const std::size_t keep[] = {q.one_rail, q.zero_rail};
  const DualRailQubit local[1] = {{0, 1}};
  return logical_amplitudes(restrict_modes(cond, keep), local);
}

}  // namespace

ResourceState t_n_state(unsigned n) {
  if (n < 1) throw ValidationError("t_n needs n >= 1");
  ResourceState r{n, FockState(2 * n)};
  const double a = 1.0 / std::sqrt(static_cast<double>(n + 1));
  for (unsigned j = 0; j <= n; ++j) {
    std::vector<unsigned> c(2 * n, 0);
    for (unsigned i = 0; i < j; ++i) c[i] = 1;
    for (unsigned i = j; i < n; ++i) c[n + i] = 1;
    r.state.add(Occupation(c), a);
  }
  return r;
}

ModeUnitary fourier_unitary(std::size_t dim) {
  if (dim < 2) throw ValidationError("Fourier unitary needs dim >= 2");
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(d, d);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      // Reduce k*l first so large products keep full precision.
      const auto kl = static_cast<double>((k * l) % d);
      m(k, l) = std::polar(s, 2 * std::numbers::pi * kl / static_cast<double>(dim));
    }
  }
  return ModeUnitary(m);
}

ModeUnitary teleport_measurement_unitary(unsigned n) {
  if (n == 1) return ModeUnitary(beam_splitter_matrix(std::numbers::pi / 4, 0.0));
  return fourier_unitary(n + 1);
}

PhaseShifter correction_for_outcome(unsigned n, std::span<const unsigned> pattern) {
  if (n < 1 || n > kMaxRailN) throw ValidationError("teleportation supports n in {1, 2, 3}");
  if (pattern.size() != n + 1) throw ValidationError("pattern needs n+1 detector counts");
  const unsigned k = pattern_total(pattern);
  if (k == 0 || k == n + 1) throw NotCorrectable("failure pattern: the qubit was projected in the Z basis");
  // Project the branch onto its alpha and beta parts with a reference input.
  const double r = std::sqrt(0.5);
  FockState evolved = rail_evolved(r, r, n);
  PostSelection ps = post_select(evolved, rail_detector(n), pattern);
  if (!ps.conditional_state) throw NotCorrectable("pattern never occurs");
  const Eigen::VectorXcd v = output_amplitudes(*ps.conditional_state, n, k);
  if (std::abs(v(0)) < 1e-12 || std::abs(v(1)) < 1e-12) throw InvariantViolation("success branch lost a logical component");
  return PhaseShifter{2 * n + 1, snap_phase(std::arg(v(1)) - std::arg(v(0)))};
}

std::vector<TeleportOutcome> teleport_rail(Complex alpha, Complex beta, unsigned n) {
  if (n < 1 || n > kMaxRailN) throw ValidationError("teleportation supports n in {1, 2, 3}");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9) throw ValidationError("input qubit is not normalized");
  FockState evolved = rail_evolved(alpha, beta, n);
  std::vector<TeleportOutcome> out;
  for (auto& o : measure_modes(evolved, rail_detector(n))) {
    TeleportOutcome t;
    t.pattern = o.pattern;
    t.k = pattern_total(o.pattern);
    t.probability = o.probability;
    t.conditional_state = *o.conditional_state;
    if (t.k == 0 || t.k == n + 1) {
      t.status = TeleportOutcome::Status::FailureZ;
      t.projected_value = t.k == 0 ? 0 : 1;
    } else {
      t.status = TeleportOutcome::Status::Success;
      t.output_mode = n + t.k;
      t.correction = correction_for_outcome(n, o.pattern);
      // The correction acts on the alpha rail, index n of the conditional state.
      FockState fixed = apply_phase_shifter(t.conditional_state, PhaseShifter{n, t.correction->phi});
      const Eigen::VectorXcd v = output_amplitudes(fixed, n, t.k);
      t.corrected = {v(0), v(1)};
    }
    out.push_back(std::move(t));
  }
  return out;
}

GateResult teleported_csign(QubitAmplitudes q1, QubitAmplitudes q2) {
  for (const auto& q : {q1, q2}) {
    if (std::abs(std::norm(q[0]) + std::norm(q[1]) - 1.0) > 1e-9) throw ValidationError("input qubit is not normalized");
  }
  constexpr std::size_t n_modes = 8;
  // Resource on (4, 5, 7, 6): CSign applied to two copies of t_1, with the
  // second entries of each pair acting as the outgoing one-rails.
  FockState s(n_modes);
  const std::pair<std::array<unsigned, 4>, double> resource[] = {
      {{1, 0, 1, 0}, 0.5}, {{1, 0, 0, 1}, 0.5}, {{0, 1, 1, 0}, -0.5}, {{0, 1, 0, 1}, 0.5}};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (const auto& [r, a] : resource) {
        std::vector<unsigned> c(n_modes, 0);
        c[4] = r[0];
        c[5] = r[1];
        c[7] = r[2];
        c[6] = r[3];
        c[x ? 0 : 1] = 1;
        c[y ? 2 : 3] = 1;
        s.add(Occupation(c), q1[x] * q2[y] * a);
      }
    }
  }
  s.prune();
  const Element tele[] = {BeamSplitter{0, 4, std::numbers::pi / 4, 0.0}, BeamSplitter{2, 6, std::numbers::pi / 4, 0.0}};
  s = apply_elements(s, tele);

  // Remaining modes 1, 3, 5, 7 -> 0..3.
  const DualRailQubit out_q1{2, 0}, out_q2{3, 1};
  GateResult r;
  r.qubits = {out_q1, out_q2};
  bool have_output = false;
  for (auto& o : measure_modes(s, DetectorSpec{{0, 4, 2, 6}, std::nullopt})) {
    const unsigned k1 = o.pattern[0] + o.pattern[1], k2 = o.pattern[2] + o.pattern[3];
    const bool ok1 = k1 == 1, ok2 = k2 == 1;
    FockState st = *o.conditional_state;
    // Each successful teleport gets its own n = 1 phase correction on its zero rail.
    if (ok1) st = apply_phase_shifter(st, {out_q1.zero_rail, correction_for_outcome(1, std::span(o.pattern).subspan(0, 2)).phi});
    if (ok2) st = apply_phase_shifter(st, {out_q2.zero_rail, correction_for_outcome(1, std::span(o.pattern).subspan(2, 2)).phi});
    if (ok1 && ok2) {
      r.success_probability += o.probability;
      if (!have_output) {
        r.output = st;
        have_output = true;
      } else if (overlap_fidelity(r.output, st) < 1 - 1e-9) {
        throw InvariantViolation("corrected success branches disagree");
      }
      continue;
    }
    FailureOutcome f{o.pattern, o.probability, FailureOutcome::Kind::ZProjection, {}};
    const unsigned ks[2] = {k1, k2};
    for (int i = 0; i < 2; ++i) {
      QubitFate fate;
      if (ks[i] == 1) {
        // The failed partner's resource half selects CSign's Z: k = 0 leaves
        // the resource one-rail occupied.
        const unsigned other = ks[1 - i];
        fate.kind = QubitFate::Kind::Intact;
        fate.needs_z = other == 0;
      } else {
        fate.kind = QubitFate::Kind::ZProjected;
        fate.value = ks[i] == 0 ? 0 : 1;
      }
      f.qubits.push_back(fate);
    }
    r.failure_outcomes.push_back(std::move(f));
  }
  if (!have_output) throw InvariantViolation("teleported CSign never succeeded");
  return r;
}

}  // namespace loqc
