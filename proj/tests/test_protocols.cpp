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

#include <bit>
#include <cmath>

#include "entlab/entropy.hpp"
#include "entlab/protocols.hpp"
#include "oracle.hpp"

using namespace entlab;

namespace {

using oracle::cplx;

// Swap by brute force: project C1 C2 of psi^{A C1} (x) psi^{C2 B} onto each Bell
// vector and read the singlet conversion probability 2 lambda_min of the result.
struct SwapOracle {
  double prob[4];
  double singlet[4];
};
SwapOracle swap_oracle(double l1, double l2) {
  Eigen::Vector4cd pair(std::sqrt(l1), 0, 0, std::sqrt(l2));
  const double h = 1 / std::sqrt(2.0);
  Eigen::Vector4cd bells[4] = {{h, 0, 0, h}, {0, h, h, 0}, {h, 0, 0, -h}, {0, h, -h, 0}};
  SwapOracle o{};
  for (int c = 0; c < 4; ++c) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();  // amplitudes on A, B
    for (int a = 0; a < 2; ++a)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int b = 0; b < 2; ++b)
            m(a, b) += std::conj(bells[c](2 * c1 + c2)) * pair(2 * a + c1) * pair(2 * c2 + b);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    double s0 = std::norm(svd.singularValues()(0)), s1 = std::norm(svd.singularValues()(1));
    o.prob[c] = s0 + s1;
    o.singlet[c] = o.prob[c] > 0 ? 2 * std::min(s0, s1) / o.prob[c] : 0;
  }
  return o;
}

int parity_oracle(const std::vector<std::uint8_t>& codes, const std::vector<std::uint64_t>& mask) {
  int par = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    std::size_t hi = 2 * i, lo = 2 * i + 1;
    bool bh = codes[i] & 2, bl = codes[i] & 1;
    par ^= bh && ((mask[hi / 64] >> (hi % 64)) & 1);
    par ^= bl && ((mask[lo / 64] >> (lo % 64)) & 1);
  }
  return par;
}

}  // namespace

TEST(BellCodes, NamesRoundTrip) {
  for (int c = 0; c < 4; ++c) EXPECT_EQ(bell_code_of(bell_code_name(c)), c);
  EXPECT_EQ(bell_code_name(3), "Psi-");
  EXPECT_THROW(bell_code_name(4), std::invalid_argument);
  BellString s{{0, 3, 2}};
  // Phi+ Psi- Phi- packs as 00 11 10.
  auto b = s.bits();
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (1u << 2) | (1u << 3) | (1u << 4));
}

TEST(Swap, RationalBranchesMatchBruteForce) {
  for (auto [n, d] : {std::pair{1, 4}, {1, 3}, {1, 2}, {1, 5}, {2, 7}, {0, 1}}) {
    Rational l2(n, d), l1 = Rational(1) - l2;
    double dl1 = boost::rational_cast<double>(l1), dl2 = boost::rational_cast<double>(l2);
    auto r = entanglement_swap_rational(l1, l2);
    auto o = swap_oracle(dl1, dl2);
    ASSERT_EQ(r.branches.size(), 4u);
    double scp = 0;
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(boost::rational_cast<double>(r.branches[c].probability), o.prob[c], 1e-12);
      if (o.prob[c] > 0) {
        EXPECT_NEAR(boost::rational_cast<double>(r.branches[c].singlet_given_outcome), o.singlet[c], 1e-12);
      }
      scp += o.prob[c] * o.singlet[c];
    }
    EXPECT_NEAR(boost::rational_cast<double>(r.scp), scp, 1e-12);
    EXPECT_EQ(r.scp, 2 * l2);
    auto t = entanglement_swap(dl1, dl2);
    EXPECT_NEAR(t.aggregate.at("scp"), scp, 1e-10);
    EXPECT_NEAR(t.aggregate.at("total_probability"), 1.0, 1e-12);
  }
  EXPECT_THROW(entanglement_swap_rational(Rational(1, 4), Rational(3, 4)), std::invalid_argument);
}

TEST(Hashing, BellDiagonalEntropyIsFrozen) {
  auto s = bell_diagonal_state({0.8, 0.1, 0.05, 0.05});
  EXPECT_NEAR(von_neumann(s.matrix()), oracle::shannon({0.8, 0.1, 0.05, 0.05}), 1e-12);
  EXPECT_NEAR(von_neumann(s.matrix()), 1.0219280948873624, 1e-12);
  // Code 1 is Psi+.
  Vec psi = states::bell("psi_plus").vector();
  auto t = bell_diagonal_state({0, 1, 0, 0});
  EXPECT_NEAR((psi.adjoint() * t.matrix() * psi)(0, 0).real(), 1.0, 1e-12);
}

TEST(Hashing, ReplayReproducesAnnouncedParities) {
  HashingOptions opt;
  opt.decoys = 50;
  opt.record_replay = true;
  auto r = hashing_simulation({0.9, 0.05, 0.03, 0.02}, 100, 0.05, 4, 99, opt);
  for (const auto& tr : r.trials) {
    ASSERT_EQ(tr.masks.size(), static_cast<std::size_t>(r.rounds));
    ASSERT_EQ(tr.hidden.size(), 100u);
    for (int k = 0; k < r.rounds; ++k) {
      EXPECT_EQ(parity_oracle(tr.hidden.codes, tr.masks[k]), tr.parities[k]);
      EXPECT_EQ(masked_parity(tr.hidden.bits(), tr.masks[k]), tr.parities[k]);
    }
  }
}

TEST(Hashing, LowEntropyRunSucceeds) {
  HashingOptions opt;
  opt.decoys = 500;
  const std::vector<double> p = {0.95, 0.03, 0.01, 0.01};
  auto r = hashing_simulation(p, 400, 0.05, 10, 5, opt);
  const double S = oracle::shannon(p);
  EXPECT_EQ(r.rounds, static_cast<int>(std::ceil(400 * (S + 0.1))));
  EXPECT_NEAR(r.yield, (400.0 - r.rounds) / 400, 1e-15);
  EXPECT_NEAR(r.target_yield, 1 - S, 1e-12);
  EXPECT_FALSE(r.infeasible);
  EXPECT_GE(r.success_frequency, 0.8);
  EXPECT_NEAR(r.success_frequency + r.empty_candidate_frequency + r.trace.aggregate.at("collision_frequency"), 1.0,
              1e-12);
  auto again = hashing_simulation(p, 400, 0.05, 10, 5, opt);
  EXPECT_EQ(again.success_frequency, r.success_frequency);
}

TEST(Hashing, DegenerateAndInvalidInputs) {
  auto r = hashing_simulation({1, 0, 0, 0}, 50, 0.05, 3, 1);
  EXPECT_EQ(r.rounds, 0);
  EXPECT_EQ(r.yield, 1.0);
  EXPECT_EQ(r.success_frequency, 1.0);
  EXPECT_THROW(hashing_simulation({0.5, 0.5, 0.1, 0}, 50, 0.05, 1, 1), std::invalid_argument);
  EXPECT_THROW(hashing_simulation({0.5, 0.5, 0}, 50, 0.05, 1, 1), std::invalid_argument);
  EXPECT_THROW(hashing_simulation({1, 0, 0, 0}, 10, 0.05, 1, 1), std::invalid_argument);
  EXPECT_THROW(hashing_simulation({1, 0, 0, 0}, 50, 0.05, 0, 1), std::invalid_argument);
}

TEST(Hashing, MaskedParityMatchesPopcount) {
  Rng rng = make_rng(kDefaultSeed, 61);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint64_t> x = {rng(), rng()}, m = {rng(), rng()};
    int want = (std::popcount(x[0] & m[0]) + std::popcount(x[1] & m[1])) & 1;
    EXPECT_EQ(masked_parity(x, m), want);
  }
}

TEST(SchmidtProjection, ValuesMatchBinomialOracle) {
  const double theta = 0.5;
  const int n = 8;
  auto t = schmidt_projection(theta, n);
  const double c2 = std::cos(theta) * std::cos(theta), s2 = 1 - c2;
  double expected = 0, total = 0;
  for (int k = 0; k <= n; ++k) {
    double pk = oracle::binom(n, k) * std::pow(c2, n - k) * std::pow(s2, k);
    total += pk;
    expected += pk * std::log2(oracle::binom(n, k));
  }
  EXPECT_NEAR(t.aggregate.at("total_probability"), total, 1e-12);
  EXPECT_NEAR(t.aggregate.at("expected_entanglement"), expected, 1e-12);
  EXPECT_NEAR(expected, 3.9693793705277307, 1e-12);
  EXPECT_NEAR(t.aggregate.at("n_entropy"), 6.221981735698892, 1e-12);
  EXPECT_EQ(t.flags.at("sandwich"), "true");
  EXPECT_EQ(t.outcomes.size(), 9u);
  EXPECT_THROW(schmidt_projection(0.0, 4), std::invalid_argument);
  EXPECT_THROW(schmidt_projection(0.5, 65), std::invalid_argument);
}

TEST(SchmidtProjection, ExactBinomials) {
  EXPECT_EQ(binomial_u64(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(binomial_u64(60, 30), 118264581564861424ULL);
  EXPECT_EQ(binomial_u64(10, 11), 0u);
  EXPECT_EQ(binomial_u64(0, 0), 1u);
}
