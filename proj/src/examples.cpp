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

#include "entlab/examples.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/linalg.hpp"

namespace entlab {

LabeledState three_sender_fine(int d, const std::vector<double>& theta) {
  auto phi1 = states::max_entangled(d, "C1", "C2a");
  auto th = states::schmidt_pair(theta, "C2b", "C3b");
  auto phi2 = states::max_entangled(d, "C3a", "R");
  return reorder(tensor_all({phi1, th, phi2}), {"C1", "C2a", "C2b", "C3a", "C3b", "R"});
}

std::vector<Party> three_sender_parties() { return {{"C1"}, {"C2a", "C2b"}, {"C3a", "C3b"}}; }

AffineMinEntropies fit_three_sender_min_entropies() {
  const int pts[4][2] = {{2, 2}, {4, 2}, {2, 4}, {4, 4}};
  auto parties = three_sender_parties();
  // Values H[p][mask].
  std::vector<std::vector<double>> H(4, std::vector<double>(8, 0.0));
  for (int p = 0; p < 4; ++p) {
    const int d = pts[p][0], D = pts[p][1];
    auto s = three_sender_fine(d, std::vector<double>(D, 1.0 / D));
    Mat sigma = reduced_matrix(s, {"R"});
    for (unsigned mask = 1; mask < 8; ++mask)
      H[p][mask] = min_entropy_of_marginal(s, party_union(parties, mask), {"R"}, sigma);
  }
  AffineMinEntropies fit;
  fit.alpha.assign(8, 0.0);
  fit.beta.assign(8, 0.0);
  RMat X(4, 2);
  for (int p = 0; p < 4; ++p) {
    X(p, 0) = std::log2(pts[p][0]);
    X(p, 1) = std::log2(pts[p][1]);
  }
  for (unsigned mask = 1; mask < 8; ++mask) {
    RVec y(4);
    for (int p = 0; p < 4; ++p) y(p) = H[p][mask];
    RVec coef = X.colPivHouseholderQr().solve(y);
    fit.alpha[mask] = coef(0);
    fit.beta[mask] = coef(1);
    fit.fit_residual = std::max(fit.fit_residual, (X * coef - y).cwiseAbs().maxCoeff());
  }
  return fit;
}

SeparationAnalysis three_sender_separation(double eps, const AffineMinEntropies& fit) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("three_sender_separation: eps in (0,1)");
  SeparationAnalysis a;
  a.eps = eps;
  a.constant = one_shot_constant(3, CostConstants{eps, false});
  auto rhs = [&](unsigned mask, double L) {
    return -(fit.alpha[mask] + eps * fit.beta[mask]) * L + a.constant;
  };
  a.threshold_log_d = 0.0;
  for (unsigned mask : {1u, 2u, 3u}) {
    double slope = fit.alpha[mask] + eps * fit.beta[mask];
    double t = slope > 0 ? a.constant / slope : std::numeric_limits<double>::infinity();
    a.threshold_log_d = std::max(a.threshold_log_d, t);
  }
  auto region_at = [&](double L) {
    RegionSpec r;
    r.kind = RegionKind::one_shot_cost;
    r.parties = {"C1", "C2", "C3"};
    for (unsigned mask = 1; mask < 8; ++mask) r.constraints.push_back({mask, {}, rhs(mask, L)});
    return r;
  };
  a.log_d_above = 1.02 * a.threshold_log_d;
  a.log_d_below = 0.98 * a.threshold_log_d;
  {
    const double L = a.log_d_above;
    double t = std::max({rhs(1, L), rhs(2, L), rhs(3, L) / 2});
    double e3 = -std::numeric_limits<double>::infinity();
    for (unsigned mask = 4; mask < 8; ++mask) {
      double others = ((mask & 1) ? t : 0.0) + ((mask & 2) ? t : 0.0);
      e3 = std::max(e3, rhs(mask, L) - others);
    }
    a.witness = {t, t, e3 + 1.0};
    auto m = region_membership(region_at(L), a.witness);
    a.feasible_above = t < 0 && m.verdict != Membership::outside;
  }
  {
    const double L = a.log_d_below;
    a.infeasible_below = !(rhs(1, L) < 0 && rhs(2, L) < 0 && rhs(3, L) < 0);
  }
  return a;
}

double sequential_E2_bound(double log_d, double eps) {
  const double delta = sequential_delta(3, eps);
  // S(C2 | C1 R) = -(1 - eps) log d; C2 has dimension d^{1+eps}.
  const double S_cond = -(1.0 - eps) * log_d;
  return -renes_plugin(S_cond, (1.0 + eps) * log_d, delta) + sequential_constant(3, eps);
}

double sequential_E1_bound(double log_d, double eps) {
  const double delta = sequential_delta(3, eps);
  // Truncation with k = ceil(d (1 - 2 delta)): H_max >= 2 log(k - 1) - log d.
  double log_km1;
  if (log_d <= 50) {
    double d = std::exp2(log_d);
    double km1 = std::ceil(d * (1 - 2 * delta) - 1e-12) - 1.0;
    if (km1 <= 0) return -std::numeric_limits<double>::infinity();
    log_km1 = std::log2(km1);
  } else {
    // k - 1 >= d (1 - 2 delta) - 1.
    log_km1 = log_d + std::log2(1 - 2 * delta - std::exp2(-log_d));
  }
  return 2 * log_km1 - log_d + sequential_constant(3, eps);
}

OverlapInstance overlap_instance(int d, int dc2, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat cols(dc2, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < dc2; ++i) cols(i, j) = cplx(g(rng), g(rng));
    cols.col(j).normalize();
  }
  OverlapInstance inst;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) inst.alpha = std::max(inst.alpha, std::abs(cols.col(j).dot(cols.col(k))));
  inst.state = states::example_overlap(cols);
  return inst;
}

double overlap_neg_hmin_dense(const LabeledState& s) {
  const int d = s.dim_of({"C1"});
  Mat rho = reduced_matrix(s, {"C1", "R"});
  Mat sigma = kron(Mat::Identity(d, d), reduced_matrix(s, {"R"}));
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(rho, sigma, Eigen::EigenvaluesOnly);
  if (ges.info() != Eigen::Success) throw std::runtime_error("generalized eigensolve failed");
  return std::log2(ges.eigenvalues().maxCoeff());
}

}  // namespace entlab
