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

#include "entlab/entropy.hpp"
#include "entlab/qcore.hpp"
#include "entlab/state_spec.hpp"
#include "oracle.hpp"

using namespace entlab;

TEST(States, BellPhiPlusIsPureWithMaximallyMixedMarginals) {
  auto s = states::bell("phi_plus");
  EXPECT_TRUE(s.is_pure());
  EXPECT_NEAR(s.trace(), 1.0, 1e-12);
  Mat a = reduced_matrix(s, {"A"});
  EXPECT_LT((a - Mat::Identity(2, 2) / 2.0).norm(), 1e-12);
}

TEST(States, WernerHasSingletFidelityF) {
  auto w = states::werner(0.85);
  Vec singlet = states::bell("psi_minus").vector();
  double f = (singlet.adjoint() * w.matrix() * singlet)(0, 0).real();
  EXPECT_NEAR(f, 0.85, 1e-12);
}

TEST(States, GhzMarginalIsClassical) {
  auto g = states::ghz({"A", "B", "C"});
  Mat ab = reduced_matrix(g, {"A", "B"});
  EXPECT_NEAR(ab(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(ab(3, 3).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(ab(0, 3)), 0.0, 1e-12);
}

TEST(States, EmbezzlingStateCoefficients) {
  auto e = states::embezzle(4);
  auto sd = schmidt(e, {"A"});
  const double h = states::harmonic(4);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(sd.coefficients[j], std::sqrt(1.0 / ((j + 1) * h)), 1e-12);
}

TEST(States, RejectsInvalidMatrices) {
  Mat nonherm(2, 2);
  nonherm << 0.5, 0.3, 0.0, 0.5;
  EXPECT_THROW(LabeledState::from_matrix({{"A", 2}}, nonherm), std::exception);
  Mat neg(2, 2);
  neg << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(LabeledState::from_matrix({{"A", 2}}, neg), std::exception);
  Mat half = Mat::Identity(2, 2) / 4.0;
  EXPECT_THROW(LabeledState::from_matrix({{"A", 2}}, half), std::exception);
  EXPECT_NO_THROW(LabeledState::from_matrix({{"A", 2}}, half, NormMode::subnormalized));
  EXPECT_THROW(LabeledState::from_matrix({{"A", 3}}, half), std::exception);
}

TEST(PartialTrace, MatchesNaiveOracleForEverySubset) {
  Rng rng = make_rng(kDefaultSeed, 11);
  auto s = random_mixed_state({{"A", 2}, {"B", 3}, {"C", 2}}, 3, rng);
  const Labels all = {"A", "B", "C"};
  for (unsigned mask = 1; mask < 8; ++mask) {
    Labels keep;
    std::vector<bool> flags(3);
    for (int k = 0; k < 3; ++k)
      if (mask & (1u << k)) {
        keep.push_back(all[k]);
        flags[k] = true;
      }
    Mat got = reduced_matrix(s, keep);
    Mat want = oracle::partial_trace(s.matrix(), {2, 3, 2}, flags);
    EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12) << "mask " << mask;
  }
}

TEST(PartialTrace, PureVectorPathAgreesWithDensityPath) {
  Rng rng = make_rng(kDefaultSeed, 12);
  auto s = random_pure_state({{"A", 2}, {"B", 3}, {"C", 2}}, rng);
  auto dense = LabeledState::from_matrix(s.systems(), s.matrix());
  for (const Labels& keep : {Labels{"A"}, Labels{"B", "C"}, Labels{"A", "C"}})
    EXPECT_LT((reduced_matrix(s, keep) - reduced_matrix(dense, keep)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Reorder, RoundTripAndTensorLayout) {
  auto a = states::basis(2, 1, "A");
  auto b = states::basis(3, 2, "B");
  auto ab = tensor(a, b);
  EXPECT_EQ(ab.dims(), (std::vector<int>{2, 3}));
  EXPECT_NEAR(std::abs(ab.vector()(1 * 3 + 2)), 1.0, 1e-15);
  auto ba = reorder(ab, {"B", "A"});
  EXPECT_NEAR(std::abs(ba.vector()(2 * 2 + 1)), 1.0, 1e-15);
  EXPECT_LT((reorder(ba, {"A", "B"}).vector() - ab.vector()).norm(), 1e-15);
  EXPECT_THROW(reorder(ab, {"A"}), std::exception);
}

TEST(Purify, RoundTripRecoversState) {
  Rng rng = make_rng(kDefaultSeed, 13);
  auto s = random_mixed_state({{"A", 3}, {"B", 2}}, 2, rng);
  auto p = purify(s, "P");
  EXPECT_TRUE(p.is_pure());
  EXPECT_LT((reduced_matrix(p, {"A", "B"}) - s.matrix()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_THROW(purify(s, "A"), std::exception);
}

TEST(Schmidt, CoefficientsOfSchmidtPair) {
  auto s = states::schmidt_pair({0.7, 0.3});
  auto sd = schmidt(s, {"A"});
  ASSERT_EQ(sd.coefficients.size(), 2u);
  EXPECT_NEAR(sd.coefficients[0], std::sqrt(0.7), 1e-12);
  EXPECT_NEAR(sd.coefficients[1], std::sqrt(0.3), 1e-12);
}

TEST(Distances, OrthogonalAndIdenticalStates) {
  Mat z0 = ket_bra(states::basis(2, 0).vector());
  Mat z1 = ket_bra(states::basis(2, 1).vector());
  auto r = distances(z0, z1);
  EXPECT_NEAR(r.fidelity, 0.0, 1e-7);
  EXPECT_NEAR(r.trace_distance, 1.0, 1e-12);
  EXPECT_NEAR(r.purified_distance, 1.0, 1e-6);
  auto q = distances(z0, z0);
  EXPECT_NEAR(q.fidelity, 1.0, 1e-7);
  EXPECT_NEAR(q.trace_distance, 0.0, 1e-12);
}

TEST(Distances, FidelityOfPureAndMixed) {
  // F(|0><0|, I/2) = 1/sqrt(2).
  Mat z0 = ket_bra(states::basis(2, 0).vector());
  EXPECT_NEAR(fidelity(z0, maximally_mixed(2)), 1.0 / std::sqrt(2.0), 1e-7);
}

TEST(ApplyLocal, CnotOnBasisStates) {
  auto s = tensor(states::basis(2, 1, "A"), states::basis(2, 0, "B"));
  auto t = apply_local(s, {"A", "B"}, states::cnot());
  EXPECT_NEAR(std::abs(t.vector()(3)), 1.0, 1e-15);
  // Target listed first: control is B = 0, nothing happens.
  auto u = apply_local(s, {"B", "A"}, states::cnot());
  EXPECT_NEAR(std::abs(u.vector()(2)), 1.0, 1e-15);
}

TEST(Haar, UnitaryAndFirstMoment) {
  Rng rng = make_rng(kDefaultSeed, 14);
  Mat acc = Mat::Zero(4, 4);
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    Mat u = haar_unitary(4, rng);
    if (i < 5) EXPECT_TRUE(is_unitary(u));
    acc += u.col(0) * u.col(0).adjoint();
  }
  acc /= static_cast<double>(n);
  EXPECT_LT((acc - Mat::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 5e-3);
}

TEST(Swap, OperatorSquaresToIdentity) {
  Mat f = swap_operator(3);
  EXPECT_LT((f * f - Mat::Identity(9, 9)).norm(), 1e-14);
  EXPECT_NEAR(f.trace().real(), 3.0, 1e-14);
}

TEST(StateSpec, ConstructorFile) {
  auto s = build_state(nlohmann::json::parse(R"({"kind":"constructor","name":"bell_phi_plus"})"));
  EXPECT_LT((s.vector() - states::bell("phi_plus").vector()).norm(), 1e-15);
}

TEST(StateSpec, ExplicitMatrixIsPureProjector) {
  auto s = build_state(nlohmann::json::parse(R"({"state":{"kind":"mixed","matrix":[[1,0],[0,0]]}})"));
  EXPECT_TRUE(s.is_pure());
  EXPECT_EQ(s.dim(), 2);
}

TEST(StateSpec, FivePartyReferenceEntropy) {
  auto s = build_state(nlohmann::json::parse(R"({"state":{"name":"example_ch5"}})"));
  EXPECT_NEAR(von_neumann(s, {"R"}), 0.601, 1e-3);
}

TEST(StateSpec, LabelsReplacedBySystemsField) {
  auto s = build_state(nlohmann::json::parse(
      R"({"systems":[{"label":"X","dim":2},{"label":"Y","dim":2}],"state":{"name":"bell_psi_minus"}})"));
  EXPECT_EQ(s.labels(), (Labels{"X", "Y"}));
}

TEST(StateSpec, DiagnosticsNameTheField) {
  try {
    build_state(nlohmann::json::parse(R"({"state":{"kind":"mixed","matrix":[[1,0],[0]]}})"));
    FAIL() << "expected an error";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("matrix[1]"), std::string::npos) << e.what();
  }
  try {
    build_state(nlohmann::json::parse(R"({"state":{"kind":"mixed","matrix":[[1.5,0],[0,-0.5]]}})"));
    FAIL() << "expected an error";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("state.matrix"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build_state(nlohmann::json::parse(R"({"state":{"name":"nope"}})")), std::exception);
}

TEST(StateSpec, JsonRoundTrip) {
  Rng rng = make_rng(kDefaultSeed, 15);
  auto s = random_mixed_state({{"A", 2}, {"B", 2}}, 2, rng);
  auto back = build_state(state_to_json(s));
  EXPECT_LT((back.matrix() - s.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  auto p = random_pure_state({{"A", 3}}, rng);
  auto pb = build_state(state_to_json(p));
  EXPECT_LT((pb.matrix() - p.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}
