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

#include "loqc/fock.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "loqc/errors.hpp"

namespace loqc {

Occupation::Occupation(std::vector<unsigned> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), 0u)) {}

Occupation::Occupation(std::initializer_list<unsigned> counts)
    : Occupation(std::vector<unsigned>(counts)) {}

Occupation Occupation::with(std::size_t mode, unsigned count) const {
  Occupation out = *this;
  out.total_ = out.total_ - out.counts_.at(mode) + count;
  out.counts_[mode] = count;
  return out;
}

FockState::FockState(std::size_t n_modes) : n_modes_(n_modes) {
  if (n_modes == 0) throw ValidationError("a Fock state needs at least one mode");
}

FockState FockState::basis(const Occupation& occ) {
  FockState s(occ.modes());
  s.add(occ, 1.0);
  return s;
}

FockState FockState::vacuum(std::size_t n_modes) {
  return basis(Occupation(std::vector<unsigned>(n_modes, 0)));
}

Complex FockState::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{} : it->second;
}

void FockState::add(const Occupation& occ, Complex amp) {
  if (occ.modes() != n_modes_) {
    throw ValidationError("occupation has " + std::to_string(occ.modes()) +
                          " modes, state has " + std::to_string(n_modes_));
  }
  if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
    throw ValidationError("non-finite amplitude");
  }
  terms_[occ] += amp;
}

void FockState::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

double FockState::norm_squared() const {
  double s = 0;
  for (const auto& [occ, a] : terms_) s += std::norm(a);
  return s;
}

double FockState::norm() const { return std::sqrt(norm_squared()); }

bool FockState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

FockState FockState::normalized() const {
  double n = norm();
  if (n == 0) throw ValidationError("cannot normalize the zero vector");
  FockState out = *this;
  out *= 1.0 / n;
  return out;
}

std::map<unsigned, double> FockState::photon_number_distribution() const {
  std::map<unsigned, double> dist;
  for (const auto& [occ, a] : terms_) dist[occ.total()] += std::norm(a);
  return dist;
}

FockState& FockState::operator*=(Complex c) {
  for (auto& [occ, a] : terms_) a *= c;
  return *this;
}

FockState& FockState::operator+=(const FockState& other) {
  if (other.n_modes_ != n_modes_) throw ValidationError("mode-count mismatch in sum");
  for (const auto& [occ, a] : other.terms_) terms_[occ] += a;
  return *this;
}

std::uint64_t basis_dimension(std::size_t n_modes, std::size_t n_photons) {
  if (n_modes == 0) throw ValidationError("basis_dimension needs at least one mode");
  // C(n_photons + n_modes - 1, n_photons), built multiplicatively so every
  // intermediate is itself a binomial coefficient.
  const std::uint64_t k = std::min<std::uint64_t>(n_photons, n_modes - 1);
  const std::uint64_t top = static_cast<std::uint64_t>(n_photons) + n_modes - 1;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (top - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("basis dimension overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

void enumerate_rec(std::vector<unsigned>& cur, std::size_t mode, unsigned left,
                   std::vector<Occupation>& out) {
  if (mode + 1 == cur.size()) {
    cur[mode] = left;
    out.emplace_back(cur);
    return;
  }
  for (unsigned k = 0; k <= left; ++k) {
    cur[mode] = k;
    enumerate_rec(cur, mode + 1, left - k, out);
  }
}

}  // namespace

std::vector<Occupation> enumerate_basis(std::size_t n_modes, unsigned n_photons) {
  std::vector<Occupation> out;
  out.reserve(basis_dimension(n_modes, n_photons));
  std::vector<unsigned> cur(n_modes, 0);
  enumerate_rec(cur, 0, n_photons, out);
  return out;
}

FockState fock_basis_state(const Occupation& occ) { return FockState::basis(occ); }

FockState apply_creation(const FockState& state, std::size_t mode) {
  if (mode >= state.modes()) throw ValidationError("creation mode out of range");
  FockState out(state.modes());
  for (const auto& [occ, a] : state.terms()) {
    unsigned n = occ[mode];
    out.add(occ.with(mode, n + 1), a * std::sqrt(static_cast<double>(n + 1)));
  }
  return out;
}

FockState apply_annihilation(const FockState& state, std::size_t mode) {
  if (mode >= state.modes()) throw ValidationError("annihilation mode out of range");
  FockState out(state.modes());
  for (const auto& [occ, a] : state.terms()) {
    unsigned n = occ[mode];
    if (n == 0) continue;
    out.add(occ.with(mode, n - 1), a * std::sqrt(static_cast<double>(n)));
  }
  return out;
}

Complex inner_product(const FockState& a, const FockState& b) {
  if (a.modes() != b.modes()) throw ValidationError("inner product of states with different mode counts");
  Complex s{};
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [occ, amp] : small.terms()) {
    auto it = large.terms().find(occ);
    if (it == large.terms().end()) continue;
    s += (&small == &a) ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return s;
}

FockState tensor(const FockState& a, const FockState& b) {
  FockState out(a.modes() + b.modes());
  std::vector<unsigned> counts;
  for (const auto& [oa, xa] : a.terms()) {
    for (const auto& [ob, xb] : b.terms()) {
      counts.assign(oa.counts().begin(), oa.counts().end());
      counts.insert(counts.end(), ob.counts().begin(), ob.counts().end());
      out.add(Occupation(counts), xa * xb);
    }
  }
  return out;
}

FockState restrict_modes(const FockState& state, std::span<const std::size_t> keep) {
  FockState out(keep.size());
  std::vector<unsigned> counts(keep.size());
  for (const auto& [occ, a] : state.terms()) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] >= state.modes()) throw ValidationError("kept mode out of range");
      counts[i] = occ[keep[i]];
    }
    out.add(Occupation(counts), a);
  }
  return out;
}

double max_abs_difference(const FockState& a, const FockState& b) {
  if (a.modes() != b.modes()) throw ValidationError("mode-count mismatch");
  double m = 0;
  for (const auto& [occ, x] : a.terms()) m = std::max(m, std::abs(x - b.amplitude(occ)));
  for (const auto& [occ, x] : b.terms()) m = std::max(m, std::abs(x - a.amplitude(occ)));
  return m;
}

double overlap_fidelity(const FockState& a, const FockState& b) {
  double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) return 0;
  return std::abs(inner_product(a, b)) / (na * nb);
}

}  // namespace loqc
