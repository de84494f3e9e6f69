// Copyright 2026 The entlab Authors
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

#include "entlab/assisted.hpp"
#include "entlab/entropy.hpp"
#include "oracle.hpp"

using namespace entlab;

namespace {

// Entropy of the subsystems flagged by `mask` over systems A, C1, B, C2, R.
double five_party_entropy(const LabeledState& s, unsigned mask) {
  std::vector<bool> keep(5);
  for (int k = 0; k < 5; ++k) keep[k] = mask & (1u << k);
  return oracle::entropy_bits(oracle::partial_trace(s.matrix(), s.dims(), keep));
}
constexpr unsigned kA = 1, kC1 = 2, kB = 4, kC2 = 8, kR = 16;

}  // namespace

TEST(FivePartyExample, ValuesMatchOracleAndFrozenNumbers) {
  auto s = states::example_ch5();
  ASSERT_EQ(s.labels(), (Labels{"A", "C1", "B", "C2", "R"}));
  const unsigned C = kC1 | kC2;
  double iacb = five_party_entropy(s, kB) - five_party_entropy(s, kA | C | kB);
  double iabc = five_party_entropy(s, kB | C) - five_party_entropy(s, kA | kB | C);
  double iab = five_party_entropy(s, kB) - five_party_entropy(s, kA | kB);
  EXPECT_NEAR(coherent_information(s, {"A", "C1", "C2"}, {"B"}), iacb, 1e-12);
  EXPECT_NEAR(coherent_information(s, {"A"}, {"B", "C1", "C2"}), iabc, 1e-12);
  EXPECT_NEAR(iacb, 0.3991239633071437, 1e-12);
  EXPECT_NEAR(iabc, 0.8112781244591325, 1e-12);
  EXPECT_NEAR(iab, -0.8112781244591325, 1e-12);
  EXPECT_NEAR(von_neumann(s, {"R"}), 0.6008760366928563, 1e-12);
  EXPECT_NEAR(five_party_entropy(s, kR), 0.6008760366928563, 1e-12);
}

TEST(FivePartyExample, LowerBoundUsesTheMinCut) {
  auto s = states::example_ch5();
  auto r = assisted_lower_bound(s, {"A"}, {"B"}, {{"C1", "C2"}});
  EXPECT_NEAR(r.hashing, -0.8112781244591325, 1e-12);
  EXPECT_NEAR(r.L_value, 0.3991239633071437, 1e-12);
  EXPECT_NEAR(r.lower_bound, 0.3991239633071437, 1e-12);
  EXPECT_EQ(r.mincut_mask, 1u);
  EXPECT_TRUE(r.beats_hashing);
  ASSERT_TRUE(r.upper_EA.has_value());
  EXPECT_GE(*r.upper_EA, r.lower_bound);
}

TEST(FivePartyExample, BeatingHashingWitness) {
  auto s = states::example_ch5();
  auto b = beating_hashing(s, {"A"}, {"B"}, {"C1", "C2"});
  EXPECT_TRUE(b.holds);
  EXPECT_NEAR(b.coherent_C_AB, 1.2104020877662762, 1e-12);
  EXPECT_NEAR(b.cond_gap, 2 * 0.8112781244591325, 1e-12);
  EXPECT_GT(b.L_value, b.hashing);
  // A Bell pair with an unrelated helper: I(C>AB) = -S(C) <= 0.
  auto t = tensor(states::bell("phi_plus"), states::max_mixed(2, "C"));
  EXPECT_FALSE(beating_hashing(t, {"A"}, {"B"}, {"C"}).holds);
}

TEST(MincutCoherent, EnumeratesEveryCut) {
  Rng rng = make_rng(kDefaultSeed, 51);
  auto s = random_pure_state({{"A", 2}, {"H1", 2}, {"H2", 2}, {"B", 2}}, rng);
  auto mc = mincut_coherent(s, {"A"}, {"B"}, {{"H1"}, {"H2"}});
  ASSERT_EQ(mc.values.size(), 4u);
  const char* names[2] = {"H1", "H2"};
  for (unsigned mask = 0; mask < 4; ++mask) {
    Labels left = {"A"}, right = {"B"};
    for (int k = 0; k < 2; ++k) (mask & (1u << k) ? left : right).push_back(names[k]);
    double v = coherent_information(s, left, right);
    EXPECT_NEAR(mc.values[mask], v, 1e-12);
    EXPECT_LE(mc.value, v + 1e-12);
  }
}

TEST(EntanglementOfAssistance, GhzGivesOneEbit) {
  auto g = states::ghz({"A", "B", "C"});
  PovmSearchOptions opt;
  opt.restarts = 4;
  opt.steps = 60;
  auto e = eoa_pure(g, {"A"}, {"B"}, {"C"}, opt);
  EXPECT_NEAR(e.asymptotic, 1.0, 1e-12);
  EXPECT_NEAR(e.one_shot, 1.0, 1e-5);  // local search, converges to the X basis
  EXPECT_NEAR(e.basis_value, 0.0, 1e-12);
  EXPECT_LE(e.one_shot, e.asymptotic + 1e-9);
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_NEAR(povm_average_entropy(g, {"A"}, {"B"}, {"C"}, h), 1.0, 1e-12);
}

TEST(EntanglementOfAssistance, UpperBoundsOnMixedStates) {
  auto g = states::ghz({"A", "B", "C"});
  auto u = da_upper_bounds(g, {"A"}, {"B"}, {"C"}, 20);
  EXPECT_NEAR(u.ensemble_bound, 1.0, 1e-12);
  EXPECT_NEAR(u.ea_cap, 1.0, 1e-12);
  Rng rng = make_rng(kDefaultSeed, 52);
  auto m = random_mixed_state({{"A", 2}, {"B", 2}, {"C", 2}}, 2, rng);
  auto v = da_upper_bounds(m, {"A"}, {"B"}, {"C"}, 50);
  EXPECT_LE(v.ensemble_bound, v.spectral_bound + 1e-12);
  EXPECT_EQ(v.ensemble_samples, 51);
  PovmSearchOptions opt;
  opt.restarts = 3;
  opt.steps = 40;
  EXPECT_LE(assisted_hashing_estimate(m, {"A"}, {"B"}, {"C"}, opt), v.ensemble_bound + 1e-9);
}

TEST(EntanglementOfAssistance, ConvexityOnGhzMixture) {
  auto g = states::ghz({"A", "B", "C"});
  auto z = tensor_all({states::basis(2, 0, "A"), states::basis(2, 0, "B"), states::basis(2, 0, "C")});
  PovmSearchOptions opt;
  opt.restarts = 3;
  opt.steps = 40;
  auto c = convexity_check({g, z}, {0.5, 0.5}, {"A"}, {"B"}, {"C"}, opt);
  EXPECT_NEAR(c.average_upper, 0.5, 1e-12);
  EXPECT_TRUE(c.holds);
  EXPECT_LE(c.mixture_lower, c.average_upper + 1e-9);
}

TEST(Repeater, CnotFaultBreaksOnlyTheHierarchicalStrategy) {
  auto s = states::example_ch5();
  std::vector<ChainLink> chain = {{partial_trace(s, {"A", "C1"}), "A", "C1"},
                                  {partial_trace(s, {"B", "C2", "R"}), "C2", "B"}};
  auto before = hierarchical_vs_random(chain, false);
  auto after = hierarchical_vs_random(chain, true);
  ASSERT_EQ(before.link_rates.size(), 2u);
  EXPECT_NEAR(before.link_rates[0], 0.8112781244591325, 1e-12);
  EXPECT_NEAR(before.hierarchical, 0.3991239633071437, 1e-12);
  EXPECT_NEAR(after.link_rates[0], 0.0, 1e-9);
  EXPECT_NEAR(after.hierarchical, 0.0, 1e-9);
  EXPECT_NEAR(after.random_strategy, before.random_strategy, 1e-9);
  EXPECT_NEAR(before.random_strategy, 0.3991239633071437, 1e-12);
}
