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
#include <string>
#include <vector>

#include "entlab/qcore.hpp"
#include "entlab/regions.hpp"

namespace entlab {

struct AssistReport {
  double hashing = 0;          // I(A>B)
  double L_value = 0;          // min-cut coherent information (L for one helper)
  double lower_bound = 0;      // max(hashing, L_value)
  double mincut_coherent = 0;
  Labels mincut_arg;           // helper parties on Alice's side of the minimizing cut
  unsigned mincut_mask = 0;
  std::vector<double> cut_values;  // I(A u T > B u Tbar) indexed by helper mask
  std::optional<double> upper_EA;  // min{S(A), S(B)} of rho^{AB}
  bool beats_hashing = false;
  std::vector<Labels> zero_entropy_cuts;  // helper subsets Y with S(Y | Ybar B) = 0
};

struct MincutCoherent {
  double value = 0;
  unsigned mask = 0;
  Labels argmin;
  std::vector<double> values;
};

// I(A u T > B u Tbar) minimized over subsets T of the helpers.
MincutCoherent mincut_coherent(const LabeledState& s, const Labels& A, const Labels& B,
                               const std::vector<Party>& helpers);

AssistReport assisted_lower_bound(const LabeledState& s, const Labels& A, const Labels& B,
                                  const std::vector<Party>& helpers);

struct BeatingHashing {
  bool holds = false;
  double coherent_C_AB = 0;  // I(C>AB)
  double cond_gap = 0;       // S(A|B) - S(A|BC)
  double L_value = 0;
  double hashing = 0;
};

BeatingHashing beating_hashing(const LabeledState& s, const Labels& A, const Labels& B,
                               const Labels& C);

struct PovmSearchOptions {
  int restarts = 24;
  int steps = 150;
  std::uint64_t seed = kDefaultSeed;
};

struct EoaPure {
  double asymptotic = 0;  // min{S(A), S(B)}
  double one_shot = 0;    // best average S(A) found over rank-one POVMs on C
  double basis_value = 0; // computational-basis measurement on C
  int evaluations = 0;
};

EoaPure eoa_pure(const LabeledState& s, const Labels& A, const Labels& B, const Labels& C,
                 const PovmSearchOptions& opt = {});

// Average entanglement of the post-measurement pure states when C (of dimension
// dC) is measured with the rank-one POVM given by the rows of the isometry W.
double povm_average_entropy(const LabeledState& s, const Labels& A, const Labels& B,
                            const Labels& C, const Mat& W);

struct DaUpperBounds {
  double ensemble_bound = 0;  // best found inf over decompositions of sum p_i min{S(A)_i, S(B)_i}
  double spectral_bound = 0;  // same quantity on the spectral decomposition
  int ensemble_samples = 0;
  std::optional<double> ea_marginal_estimate;  // searched E_A(rho^{AB}); rank(rho^{AB}) <= 8
  double ea_cap = 0;                // min{S(A), S(B)} of rho^{AB}
};

DaUpperBounds da_upper_bounds(const LabeledState& s, const Labels& A, const Labels& B,
                              const Labels& C, int rotations = 200,
                              std::uint64_t seed = kDefaultSeed);

// Lower estimate of D_A for a mixed state: best average hashing rate
// (max{0, I(A>B), I(B>A)}) found over rank-one POVMs on C.
double assisted_hashing_estimate(const LabeledState& s, const Labels& A, const Labels& B,
                                 const Labels& C, const PovmSearchOptions& opt = {});

struct ConvexityCheck {
  double mixture_lower = 0;  // lower estimate of D_A of the mixture
  double average_upper = 0;  // sum_i p_i min{S(A), S(B)} over the pure members
  bool holds = false;
};

ConvexityCheck convexity_check(const std::vector<LabeledState>& pure_members,
                               const std::vector<double>& probs, const Labels& A,
                               const Labels& B, const Labels& C,
                               const PovmSearchOptions& opt = {});

struct ChainLink {
  LabeledState state;
  std::string left;
  std::string right;
};

struct ChainComparison {
  std::vector<double> link_rates;  // I(left > right) per link
  double hierarchical = 0;  // min over links of max{0, link rate}
  double random_strategy = 0;  // assisted lower bound on the composed state
  AssistReport report;
  LabeledState composed;
};

// Composes the links, treats every intermediate node as one helper and, when
// inject_cnot is set, applies the CNOT with control on the first helper's
// incoming register and target on its outgoing register.
ChainComparison hierarchical_vs_random(const std::vector<ChainLink>& chain, bool inject_cnot);

}  // namespace entlab
