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

#include "entlab/decoupling.hpp"
#include "entlab/qcore.hpp"
#include "oracle.hpp"

using namespace entlab;

namespace {

double purity_oracle(const Mat& rho) { return (rho * rho).trace().real(); }

// Haar twirl of the partial swap on an L-dimensional block of C^d (x) C^d is
// a I + b F. Matching Tr(X) = L and Tr(X F) = L^2 gives a 2 x 2 linear system,
// solved here exactly by Cramer's rule.
std::pair<Rational, Rational> twirl_oracle(int d, int L) {
  Rational d2(static_cast<std::int64_t>(d) * d), dd(d), tx(L), txf(static_cast<std::int64_t>(L) * L);
  Rational det = d2 * d2 - dd * dd;
  Rational a = (tx * d2 - dd * txf) / det;
  Rational b = (d2 * txf - dd * tx) / det;
  return {a, b};
}

// Purity form of the decoupling bound, evaluated from the naive partial trace.
double delta_oracle(const Mat& psi, const std::vector<int>& dims, const std::vector<int>& sender_idx,
                    const std::vector<int>& K, const std::vector<int>& L, int ref_idx) {
  const unsigned m = static_cast<unsigned>(sender_idx.size());
  double first = 0, inner = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double p1 = 1, p2 = 1;
    std::vector<bool> keep(dims.size(), false);
    keep[ref_idx] = true;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        p1 *= static_cast<double>(L[i]) / (dims[sender_idx[i]] * K[i]);
        p2 *= static_cast<double>(L[i]) / K[i];
        keep[sender_idx[i]] = true;
      }
    first += p1;
    inner += p2 * purity_oracle(oracle::partial_trace(psi, dims, keep));
  }
  return 2 * first + 2 * std::sqrt(dims[ref_idx] * inner);
}

}  // namespace

TEST(Twirl, CoefficientsMatchExactOracle) {
  for (int d = 2; d <= 7; ++d)
    for (int L = 1; L <= d; ++L) {
      auto [a, b] = twirl_oracle(d, L);
      EXPECT_EQ(twirl_r(d, L), a) << d << "," << L;
      EXPECT_EQ(twirl_s(d, L), b) << d << "," << L;
    }
  EXPECT_EQ(twirl_r(4, 2), Rational(1, 15));
  EXPECT_EQ(twirl_s(4, 2), Rational(7, 30));
}

TEST(Twirl, MonteCarloAverageConverges) {
  auto rep = twirl_average_check(3, 2, 4000, kDefaultSeed);
  EXPECT_LT(rep.max_deviation, 1e-2);
  EXPECT_LT(rep.sym_trace_error, 1e-12);
  EXPECT_LT(rep.swap_split_error, 1e-12);
  EXPECT_THROW(twirl_average_check(3, 4, 10, 1), std::invalid_argument);
}

TEST(Twirl, SingleUnitaryAverageIsMaximallyMixed) {
  Rng rng = make_rng(kDefaultSeed, 31);
  auto s = random_mixed_state({{"A", 2}, {"R", 2}}, 2, rng);
  EXPECT_LT(haar_single_average_deviation(s.matrix(), 2, 4000, 7), 2e-2);
}

TEST(Purity, SwapTrickMatchesDirectPurity) {
  Rng rng = make_rng(kDefaultSeed, 32);
  for (int i = 0; i < 10; ++i) {
    auto s = random_mixed_state({{"A", 2}, {"B", 3}}, 1 + i % 4, rng);
    EXPECT_NEAR(purity_swap_trick(s.matrix()), purity_oracle(s.matrix()), 1e-12);
    EXPECT_NEAR(purity(s, {"A"}), purity_oracle(oracle::partial_trace(s.matrix(), {2, 3}, {true, false})),
                1e-12);
  }
}

TEST(DecouplingBound, TwoSenderValueIsFrozen) {
  auto s = states::two_sender_example();
  InstrumentSpec spec;
  spec.senders = {{{"C1"}, 1, 1}, {{"C2"}, 2, 1}};
  double d = decoupling_bound_purity(s, spec, {"R"});
  EXPECT_NEAR(d, delta_oracle(s.matrix(), {2, 4, 2}, {0, 1}, {1, 2}, {1, 1}, 2), 1e-12);
  // 11/8 + 2 sqrt 2
  EXPECT_NEAR(d, 4.20342712474619, 1e-12);
}

TEST(DecouplingBound, MatchesOracleOnRandomStates) {
  Rng rng = make_rng(kDefaultSeed, 33);
  for (int i = 0; i < 5; ++i) {
    auto s = random_pure_state({{"C1", 2}, {"C2", 3}, {"R", 2}}, rng);
    InstrumentSpec spec;
    spec.senders = {{{"C1"}, 2, 1 + i % 2}, {{"C2"}, 3, 2}};
    EXPECT_NEAR(decoupling_bound_purity(s, spec, {"R"}),
                delta_oracle(s.matrix(), {2, 3, 2}, {0, 1}, {2, 3}, {1 + i % 2, 2}, 2), 1e-12);
  }
}

TEST(DecouplingSimulation, NonVacuousBenchmarkRespectsBound) {
  Rng rng = make_rng(kDefaultSeed, 34);
  auto s = random_pure_state({{"C", 16}, {"R", 2}}, rng);
  InstrumentSpec spec;
  spec.senders = {{{"C"}, 8, 1}};
  spec.samples = 40;
  auto r = simulate_random_instrument(s, spec, {"R"});
  EXPECT_NEAR(r.analytic_bound, 2.0 / 128 + 1.0, 1e-12);
  EXPECT_FALSE(r.vacuous);
  EXPECT_LE(r.empirical_Q + 2 * r.stderr_Q, r.analytic_bound);
  EXPECT_LT(r.max_prob_error, 1e-10);
  EXPECT_EQ(r.samples, 40);
}

TEST(DecouplingSimulation, DeterministicForFixedSeed) {
  auto s = states::two_sender_example();
  InstrumentSpec spec;
  spec.senders = {{{"C1"}, 1, 1}, {{"C2"}, 2, 1}};
  spec.samples = 20;
  auto a = simulate_random_instrument(s, spec, {"R"});
  auto b = simulate_random_instrument(s, spec, {"R"});
  EXPECT_EQ(a.empirical_Q, b.empirical_Q);
  EXPECT_TRUE(a.vacuous);
}

TEST(DecouplingSpec, InvalidSpecsAreRejected) {
  auto s = states::two_sender_example();
  InstrumentSpec spec;
  spec.senders = {{{"C1"}, 1, 1}, {{"C1"}, 1, 1}};
  EXPECT_THROW(validate_spec(s, spec, {"R"}), std::invalid_argument);
  spec.senders = {{{"C1"}, 1, 3}};
  EXPECT_THROW(validate_spec(s, spec, {"R"}), std::invalid_argument);
  spec.senders = {{{"C1"}, 1, 1}};
  EXPECT_THROW(validate_spec(s, spec, {"C1"}), std::invalid_argument);
  spec.senders = {{{"Z"}, 1, 1}};
  EXPECT_THROW(validate_spec(s, spec, {"R"}), std::exception);
  spec.senders = {{{"C1"}, 0, 1}};
  EXPECT_THROW(validate_spec(s, spec, {"R"}), std::invalid_argument);
}
