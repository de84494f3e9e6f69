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

#include <optional>
#include <string>
#include <vector>

#include "entlab/qcore.hpp"

namespace entlab {

// A party owns one or more labeled systems.
using Party = Labels;
std::vector<Party> singletons(const Labels& labels);

enum class RegionKind { asymptotic_merge, split_transfer, one_shot_cost, sequential_cost };

struct Constraint {
  unsigned mask = 0;
  Labels subset;  // party names in the subset
  double rhs = 0;
};

struct RegionSpec {
  std::vector<std::string> parties;
  std::vector<Constraint> constraints;
  RegionKind kind = RegionKind::asymptotic_merge;
};

using CostVector = std::vector<double>;

enum class Membership { inside, boundary, outside };
std::string to_string(Membership m);
std::string to_string(RegionKind k);

struct MembershipResult {
  Membership verdict = Membership::inside;
  std::vector<unsigned> violated;
  std::vector<unsigned> tight;
};

std::string party_name(const Party& p);
Labels party_union(const std::vector<Party>& parties, unsigned mask);

RegionSpec merging_rate_region(const LabeledState& s, const std::vector<Party>& senders,
                               const Labels& receiver_side);
// S(T) - S(Tbar B) computed through a purification of s; agrees with the rhs of
// merging_rate_region for every subset.
double merging_rhs_via_purification(const LabeledState& s, const std::vector<Party>& senders,
                                    const Labels& receiver_side, unsigned mask);

std::pair<RegionSpec, RegionSpec> split_transfer_region(const LabeledState& s,
                                                        const std::vector<Party>& T,
                                                        const std::vector<Party>& Tbar,
                                                        const Labels& A, const Labels& B);

struct CostConstants {
  double eps = 0.1;
  bool intro_form = false;  // +12 instead of +2m+8
};
double one_shot_constant(int m, const CostConstants& c);
RegionSpec one_shot_cost_region(const LabeledState& s, const std::vector<Party>& senders,
                                const Labels& reference, const CostConstants& c);

struct SequentialEntry {
  std::string sender;
  Labels relative_reference;
  double delta = 0;          // smoothing parameter eps^2 / (52 m^2)
  double constant = 0;       // 4 log(2m/eps) + 2 log 13
  double hmin_relative = 0;  // H_min(psi^{C_i Rt} | psi^{Rt})
  std::optional<double> hmin_conditional;  // H_min(C_i | Rt) from the cone program
  double S_cond = 0;                       // S(C_i | Rt)
  double renes_upper = 0;                  // plug-in upper bound on the smooth H_min
  double cost_bound_renes = 0;             // -renes_upper + constant
  std::optional<double> cost_bound_truncation;  // via duality and the truncation lemma
  std::optional<double> cost_bound_unsmoothed;  // -hmin_conditional + constant (not a valid bound)
  double cost_bound = 0;  // the value used for acceptance: max of the certified bounds
};

struct SequentialCost {
  std::vector<std::string> ordering;
  std::vector<SequentialEntry> entries;  // in ordering order
  CostVector lower_bounds;               // indexed like `senders`
};

double sequential_delta(int m, double eps);
double sequential_constant(int m, double eps);
// 8 delta log d_C + 2 h2(2 delta) added to S_cond (log dimension of the smoothed system).
double renes_plugin(double S_cond, double log_dim, double delta);

SequentialCost sequential_cost(const LabeledState& s, const std::vector<Party>& senders,
                               const Labels& reference, const std::vector<int>& ordering,
                               double eps);

struct MinCut {
  double value = 0;
  unsigned mask = 0;
  Labels argmin;  // party names
  std::vector<double> values;  // S(A u T) indexed by helper mask
};

MinCut min_cut_entanglement(const LabeledState& s, const Labels& A, const Labels& B,
                            const std::vector<Party>& helpers);

MembershipResult region_membership(const RegionSpec& region, const CostVector& point,
                                   double tol = 1e-9);

// Tie-break order for cuts: fewer parties first, then lexicographic index lists.
bool cut_precedes(unsigned a, unsigned b);

}  // namespace entlab
