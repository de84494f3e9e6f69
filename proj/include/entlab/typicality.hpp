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
#include <optional>
#include <vector>

#include "entlab/qcore.hpp"

namespace entlab {

// Sum over the support of |log p(x)|; makes the per-string probability bounds hold
// for every delta-typical string.
double typicality_constant(const std::vector<double>& p);

// |N(x)/n - p(x)| <= delta for every letter and N(x) = 0 off the support.
bool is_typical_counts(const std::vector<int>& counts, const std::vector<double>& p, double delta);

struct TypicalSet {
  int d = 0;
  int n = 0;
  double delta = 0;
  double c = 0;
  double H = 0;
  double cardinality = 0;
  double log2_cardinality = 0;
  double total_probability = 0;
  double log2_min_prob = 0;  // over members
  double log2_max_prob = 0;
  double min_prob = 0;
  double max_prob = 0;
  std::size_t type_classes = 0;
  // Typicality sandwiches with eps = 1 - total_probability.
  bool prob_bounds_hold = false;
  bool card_upper_holds = false;
  bool card_lower_holds = false;
  std::optional<std::vector<std::vector<int>>> members;
};

// Enumerates typical type classes. Members are materialized only on request and
// only when d^n <= 10^7.
TypicalSet typical_set(const std::vector<double>& p, int n, double delta, bool materialize = false);

struct ProjectorReport {
  int dim = 0;
  double rank = 0;  // Tr Pi
  double mass = 0;  // Tr(psi^{(x)n} Pi)
  double eps = 0;   // 1 - mass
  double S = 0;
  double c = 0;
  double eig_lower = 0, eig_upper = 0;  // 2^{-n(S +- c delta)}
  double typical_eig_min = 0, typical_eig_max = 0;
  bool eigen_sandwich = false;
  double trace_lower = 0, trace_upper = 0;
  bool trace_sandwich = false;
  double purity = 0, purity_bound = 0;
  bool purity_holds = false;
  double gentle_distance = 0, gentle_bound = 0;
  bool gentle_holds = false;
  double hoeffding_bound = 0;
  bool hoeffding_holds = false;
  bool dense_checked = false;  // dense projector built in the computational basis
  double dense_gentle_distance = 0;
  double dense_mass = 0;
  bool all_hold() const {
    return eigen_sandwich && trace_sandwich && purity_holds && gentle_holds && hoeffding_holds;
  }
};

ProjectorReport typical_projector_checks(const LabeledState& s, int n, double delta);

// Dense typical projector of rho^{(x)n} in the computational basis (d^n <= 4096).
Mat typical_projector(const Mat& rho, int n, double delta);

struct GentleCheck {
  double mass = 0;  // Tr[X rho]
  double eps = 0;
  double distance = 0;  // || sqrt(X) rho sqrt(X) - rho ||_1
  double bound = 0;     // 2 sqrt(eps)
  bool holds = false;
};

GentleCheck gentle_measurement_check(const Mat& rho, const Mat& X);

struct UnionBoundCheck {
  double min_gap = 0;  // min eigenvalue of (x)Pi_i - (sum Pi_i - (k-1) I)
  bool holds = false;
  int dim = 0;
};

// Projectors onto delta-typical subspaces of diagonal states, one per system.
UnionBoundCheck union_bound_check(const std::vector<std::vector<double>>& spectra, int n,
                                  double delta);

struct MixedStateBounds {
  double c = 0;
  double eps = 0;        // c exp(-2 s1 delta1^2)
  double s2 = 0;
  double n = 0;          // s1 * s2
  double nu = 0;         // trace-distance bound
  double upsilon = 0;    // eta(eps) log(d1 d2) + 3 delta2 / s1
  double log2_purity_joint = 0;  // log2 of the joint purity bound
  double log2_purity_1 = 0;
  double log2_purity_2 = 0;
  double log2_rank_1 = 0;
  double log2_rank_2 = 0;
};

// Evaluates the double-blocking bound formulas for psi^{C1C2} without simulation.
MixedStateBounds mixedstate_bounds(const LabeledState& s, const Labels& C1, const Labels& C2,
                                   double s1, double delta1, double delta2,
                                   std::optional<double> c = std::nullopt);

}  // namespace entlab
