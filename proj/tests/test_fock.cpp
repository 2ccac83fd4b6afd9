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

#include <cmath>
#include <random>
#include <set>

#include "loqc/errors.hpp"
#include "loqc/fock.hpp"
#include "oracles.hpp"

namespace loqc {
namespace {

constexpr double kTol = 1e-12;

TEST(BasisDimension, StarsAndBars) {
  EXPECT_EQ(basis_dimension(2, 1), 2u);
  EXPECT_EQ(basis_dimension(4, 2), 10u);
  EXPECT_EQ(basis_dimension(3, 3), 10u);
  EXPECT_EQ(basis_dimension(1, 7), 1u);
  EXPECT_EQ(basis_dimension(5, 0), 1u);
}

TEST(BasisDimension, OverflowIsACapacityError) {
  EXPECT_THROW(basis_dimension(200, 200), CapacityError);
  EXPECT_THROW(basis_dimension(0, 1), ValidationError);
}

TEST(BasisDimension, EnumerationMatchesCount) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (unsigned n = 0; n <= 5; ++n) {
      const auto basis = enumerate_basis(m, n);
      EXPECT_EQ(basis.size(), basis_dimension(m, n));
      std::set<Occupation> distinct(basis.begin(), basis.end());
      EXPECT_EQ(distinct.size(), basis.size());
      EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& o : basis) EXPECT_EQ(o.total(), n);
    }
  }
}

TEST(Occupation, CachedTotalMatchesSum) {
  Occupation o{2, 0, 3};
  EXPECT_EQ(o.total(), 5u);
  EXPECT_EQ(o.with(1, 4).total(), 9u);
  EXPECT_EQ(o.with(2, 0).total(), 2u);
}

TEST(FockBasisState, MatchesRepeatedCreation) {
  const FockState vac = FockState::vacuum(1);
  EXPECT_NEAR(std::abs(vac.amplitude({0}) - 1.0), 0, kTol);

  const FockState two = apply_creation(apply_creation(vac, 0), 0);
  EXPECT_NEAR(std::abs(two.amplitude({2}) - std::sqrt(2.0)), 0, kTol);
  EXPECT_LT(max_abs_difference(two.normalized(), fock_basis_state({2})), kTol);

  const FockState s = fock_basis_state({1, 0, 1});
  EXPECT_NEAR(s.norm(), 1.0, kTol);
  EXPECT_EQ(s.size(), 1u);
}

TEST(Creation, Examples) {
  EXPECT_LT(max_abs_difference(apply_creation(fock_basis_state({0}), 0), fock_basis_state({1})), kTol);
  const FockState three = apply_creation(fock_basis_state({2}), 0);
  EXPECT_NEAR(std::abs(three.amplitude({3}) - std::sqrt(3.0)), 0, kTol);

  FockState sup(1);
  sup.add({0}, std::sqrt(0.5));
  sup.add({1}, std::sqrt(0.5));
  FockState want(1);
  want.add({1}, std::sqrt(0.5));
  want.add({2}, 1.0);
  EXPECT_LT(max_abs_difference(apply_creation(sup, 0), want), kTol);
}

TEST(Annihilation, Examples) {
  EXPECT_TRUE(apply_annihilation(fock_basis_state({0}), 0).empty());
  const FockState two = apply_annihilation(fock_basis_state({3}), 0);
  EXPECT_NEAR(std::abs(two.amplitude({2}) - std::sqrt(3.0)), 0, kTol);
  const FockState n = apply_creation(apply_annihilation(fock_basis_state({2}), 0), 0);
  EXPECT_NEAR(std::abs(n.amplitude({2}) - 2.0), 0, kTol);
}

TEST(Creation, OutOfRangeModeRejected) {
  EXPECT_THROW(apply_creation(fock_basis_state({0, 0}), 2), ValidationError);
  EXPECT_THROW(apply_annihilation(fock_basis_state({0, 0}), 5), ValidationError);
}

TEST(Commutator, CreationAnnihilationScaling) {
  std::mt19937_64 rng(11);
  const FockState s = oracle::random_state(enumerate_basis(2, 3), rng);
  const FockState ca = apply_annihilation(apply_creation(s, 0), 0);
  const FockState ac = apply_creation(apply_annihilation(s, 0), 0);
  for (const auto& [occ, a] : s.terms()) {
    EXPECT_NEAR(std::abs(ca.amplitude(occ) - a * static_cast<double>(occ[0] + 1)), 0, kTol);
    EXPECT_NEAR(std::abs(ac.amplitude(occ) - a * static_cast<double>(occ[0])), 0, kTol);
  }
  // [a, a^dag] = 1
  FockState diff = ca;
  diff += Complex(-1) * ac;
  diff.prune();
  EXPECT_LT(max_abs_difference(diff, s), kTol);
}

TEST(InnerProduct, Examples) {
  EXPECT_NEAR(std::abs(inner_product(fock_basis_state({1, 0, 1}), fock_basis_state({1, 0, 1})) - 1.0), 0, kTol);
  EXPECT_EQ(inner_product(fock_basis_state({2}), fock_basis_state({3})), Complex{});
  FockState psi(2);
  psi.add({0, 1}, 0.6);
  psi.add({1, 0}, Complex(0, 0.8));
  EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0, kTol);
  EXPECT_THROW(inner_product(psi, fock_basis_state({1})), ValidationError);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  std::mt19937_64 rng(5);
  const auto basis = enumerate_basis(3, 2);
  const FockState a = oracle::random_state(basis, rng), b = oracle::random_state(basis, rng);
  const Complex c(0.3, -1.7);
  EXPECT_NEAR(std::abs(inner_product(c * a, b) - std::conj(c) * inner_product(a, b)), 0, kTol);
  EXPECT_NEAR(std::abs(inner_product(a, c * b) - c * inner_product(a, b)), 0, kTol);
  const Complex aa = inner_product(a, a);
  EXPECT_NEAR(aa.imag(), 0, kTol);
  EXPECT_GT(aa.real(), 0);
  EXPECT_EQ(inner_product(FockState(3), FockState(3)), Complex{});
}

TEST(Tensor, Examples) {
  EXPECT_LT(max_abs_difference(tensor(fock_basis_state({0, 1}), fock_basis_state({1, 0})), fock_basis_state({0, 1, 1, 0})),
            kTol);
  const Complex al(0.6, 0), be(0, 0.8);
  FockState q(2);
  q.add({0, 1}, al);
  q.add({1, 0}, be);
  FockState want(3);
  want.add({0, 1, 1}, al);
  want.add({1, 0, 1}, be);
  EXPECT_LT(max_abs_difference(tensor(q, fock_basis_state({1})), want), kTol);
}

TEST(Tensor, NormMultiplies) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    FockState a = oracle::random_state(enumerate_basis(2, 2), rng);
    FockState b = oracle::random_state(enumerate_basis(3, 1), rng);
    a *= 1.7;
    b *= 0.4;
    const FockState t = tensor(a, b);
    EXPECT_EQ(t.modes(), 5u);
    EXPECT_NEAR(t.norm(), a.norm() * b.norm(), 1e-12);
  }
}

TEST(FockState, WidthAndFinitenessChecked) {
  FockState s(2);
  EXPECT_THROW(s.add({1, 0, 0}, 1.0), ValidationError);
  EXPECT_THROW(s.add({1, 0}, Complex(NAN, 0)), ValidationError);
  EXPECT_THROW(FockState(0), ValidationError);
  EXPECT_THROW(FockState(2).normalized(), ValidationError);
}

TEST(FockState, PruneDropsDust) {
  FockState s(1);
  s.add({0}, 1.0);
  s.add({1}, 1e-15);
  s.prune();
  EXPECT_EQ(s.size(), 1u);
  for (const auto& [occ, a] : s.terms()) EXPECT_GE(std::abs(a), kPruneThreshold);
}

TEST(FockState, PhotonNumberDistribution) {
  FockState s(2);
  s.add({1, 0}, 0.6);
  s.add({1, 1}, 0.8);
  const auto d = s.photon_number_distribution();
  EXPECT_NEAR(d.at(1), 0.36, kTol);
  EXPECT_NEAR(d.at(2), 0.64, kTol);
}

TEST(RestrictModes, DropsFixedSpectators) {
  FockState s(3);
  s.add({1, 1, 0}, 0.6);
  s.add({0, 1, 1}, 0.8);
  const std::size_t keep[] = {2, 0};
  const FockState r = restrict_modes(s, keep);
  EXPECT_NEAR(std::abs(r.amplitude({0, 1}) - 0.6), 0, kTol);
  EXPECT_NEAR(std::abs(r.amplitude({1, 0}) - 0.8), 0, kTol);
}

}  // namespace
}  // namespace loqc
