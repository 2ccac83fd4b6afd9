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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace loqc {

using Complex = std::complex<double>;

/// Amplitudes with magnitude below this are dropped after every element.
inline constexpr double kPruneThreshold = 1e-14;

/// Photon counts per mode. Ordered lexicographically by counts.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<unsigned> counts);
  Occupation(std::initializer_list<unsigned> counts);

  std::size_t modes() const { return counts_.size(); }
  unsigned total() const { return total_; }
  unsigned operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const unsigned> counts() const { return counts_; }

  /// Copy with one mode's count replaced.
  Occupation with(std::size_t mode, unsigned count) const;

  friend bool operator==(const Occupation& a, const Occupation& b) {
    return a.counts_ == b.counts_;
  }
  friend auto operator<=>(const Occupation& a, const Occupation& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

/// Sparse superposition of occupation vectors over a fixed number of modes.
class FockState {
 public:
  using Terms = std::map<Occupation, Complex>;

  explicit FockState(std::size_t n_modes);

  static FockState basis(const Occupation& occ);
  static FockState vacuum(std::size_t n_modes);

  std::size_t modes() const { return n_modes_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex amplitude(const Occupation& occ) const;

  /// Accumulates amp onto occ. Throws ValidationError on a width mismatch
  /// or a non-finite amplitude.
  void add(const Occupation& occ, Complex amp);

  void prune(double threshold = kPruneThreshold);

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = 1e-10) const;
  FockState normalized() const;

  /// Probability weight per total photon number.
  std::map<unsigned, double> photon_number_distribution() const;

  FockState& operator*=(Complex c);
  FockState& operator+=(const FockState& other);
  friend FockState operator*(Complex c, FockState s) { return s *= c; }
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }

 private:
  std::size_t n_modes_;
  Terms terms_;
};

/// Number of occupation vectors with n_photons spread over n_modes.
std::uint64_t basis_dimension(std::size_t n_modes, std::size_t n_photons);

/// All occupation vectors of the sector, in canonical order.
std::vector<Occupation> enumerate_basis(std::size_t n_modes, unsigned n_photons);

FockState fock_basis_state(const Occupation& occ);
FockState apply_creation(const FockState& state, std::size_t mode);
FockState apply_annihilation(const FockState& state, std::size_t mode);

/// <a|b>, conjugate-linear in a.
Complex inner_product(const FockState& a, const FockState& b);

FockState tensor(const FockState& a, const FockState& b);

/// Keeps only the listed modes (in the listed order). Terms that differ only
/// on dropped modes are summed, so callers should drop modes that hold a
/// single fixed pattern.
FockState restrict_modes(const FockState& state, std::span<const std::size_t> keep);

/// max |a_k - b_k| over the union of supports.
double max_abs_difference(const FockState& a, const FockState& b);

/// |<a|b>| / (|a| |b|).
double overlap_fidelity(const FockState& a, const FockState& b);

}  // namespace loqc
