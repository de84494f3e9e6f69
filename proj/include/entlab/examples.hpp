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

#pragma once

#include <cstdint>
#include <vector>

#include "entlab/qcore.hpp"
#include "entlab/regions.hpp"

namespace entlab {

// Three-sender state with every factor kept as its own system:
// Phi_d^{C1 C2a} (x) theta^{C2b C3b} (x) Phi_d^{C3a R}, systems C1, C2a, C2b, C3a, C3b, R.
LabeledState three_sender_fine(int d, const std::vector<double>& theta);
// Senders {C1}, {C2a, C2b}, {C3a, C3b}.
std::vector<Party> three_sender_parties();

// Min-entropies H_min(psi^{TR}|psi^R) of the three-sender state are affine in
// (log d, log D) when theta is maximally entangled of dimension D:
// H_T = alpha_T log d + beta_T log D. Coefficients are fitted from solver values
// at small (d, D) and the fit residual is reported.
struct AffineMinEntropies {
  std::vector<double> alpha;  // indexed by sender mask, entry 0 unused
  std::vector<double> beta;
  double fit_residual = 0;
};
AffineMinEntropies fit_three_sender_min_entropies();

struct SeparationAnalysis {
  double eps = 0;
  double constant = 0;         // one-shot additive constant for m = 3
  double threshold_log_d = 0;  // negative (E1, E2) admissible iff log d exceeds this
  bool feasible_above = false; // witness point with E1, E2 < 0 lies in the region
  bool infeasible_below = false;
  CostVector witness;          // at 1.02 * threshold
  double log_d_above = 0, log_d_below = 0;
};

// One-shot cost region of the three-sender state with D = d^eps, evaluated
// symbolically in log d from the fitted coefficients.
SeparationAnalysis three_sender_separation(double eps, const AffineMinEntropies& fit);

// Closed-form lower bounds on the sequential first-mover costs for D = d^eps:
// ordering C3, C2, C1 bounds E'_2; ordering C3, C1, C2 bounds E'_1.
double sequential_E2_bound(double log_d, double eps);
double sequential_E1_bound(double log_d, double eps);

// (1/sqrt H_d) sum_j j^{-1/2} |j>^{C1} |psi_j>^{C2} |j>^R with Gaussian random psi_j
// in dimension dc2; alpha is the largest pairwise overlap of the drawn vectors.
struct OverlapInstance {
  LabeledState state;
  double alpha = 0;
};
OverlapInstance overlap_instance(int d, int dc2, Rng& rng);

// -H_min(psi^{C1R}|psi^R) by a dense generalized eigensolve of
// psi^{C1R} x = lambda (I (x) psi^R) x.
double overlap_neg_hmin_dense(const LabeledState& s);

}  // namespace entlab
