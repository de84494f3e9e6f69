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

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entlab/qcore.hpp"

namespace entlab {

using Rational = boost::rational<std::int64_t>;

struct Sender {
  Labels systems;  // the sender's share C_i (may span several labeled systems)
  int K = 1;       // ancilla dimension (maximally entangled with the receiver)
  int L = 1;       // output rank of each partial isometry
};

struct InstrumentSpec {
  std::vector<Sender> senders;
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
  int dim_cap = 4096;
};

struct DecouplingResult {
  double empirical_Q = 0;  // mean over samples of sum_J p_J ||psi_J - tau (x) psi^R||_1
  double stderr_Q = 0;
  double analytic_bound = 0;                 // Delta_I (purity form)
  std::optional<double> minentropy_bound;    // same accounting with the min-entropy form
  double empirical_raw = 0;  // mean of sum over full blocks of ||omega_J - (L/dK) tau (x) psi^R||_1
  double stderr_raw = 0;
  std::optional<double> raw_bound;  // min-entropy bound on empirical_raw
  double remainder_mass = 0;        // mean probability of outcomes hitting a remainder block
  double max_prob_error = 0;        // max over samples of |sum_J p_J - 1|
  int samples = 0;
  int outcomes = 0;
  bool vacuous = false;  // analytic bound >= 2, the trivial value of Q
};

double purity(const LabeledState& s, const Labels& part);
double purity(const Mat& rho);
// Tr[(rho (x) rho) F] with the swap F built explicitly.
double purity_swap_trick(const Mat& rho);

int sender_dim(const LabeledState& s, const Sender& snd);
void validate_spec(const LabeledState& s, const InstrumentSpec& spec, const Labels& reference);

double decoupling_bound_purity(const LabeledState& s, const InstrumentSpec& spec,
                               const Labels& reference);
// Bound on the full-block raw sum from the min-entropy form, sigma on the reference.
double decoupling_raw_bound_minentropy(const LabeledState& s, const InstrumentSpec& spec,
                                       const Labels& reference, const Mat& sigma);
// Q-level bound: remainder accounting plus twice the raw bound.
double decoupling_bound_minentropy(const LabeledState& s, const InstrumentSpec& spec,
                                   const Labels& reference, const Mat& sigma);
// Experimental: per-subset optimized sigma (unproven form). Never used as a bound.
double decoupling_bound_conjectured(const LabeledState& s, const InstrumentSpec& spec,
                                    const Labels& reference);

DecouplingResult simulate_random_instrument(const LabeledState& s, const InstrumentSpec& spec,
                                            const Labels& reference);

struct SplitTransferResult {
  DecouplingResult first;   // senders in T, reference Tbar u B u R
  DecouplingResult second;  // senders in Tbar, reference T u A u R
  double merging_error_surrogate = 0;  // 2 sqrt(Delta1) + 2 sqrt(Delta2)
};

SplitTransferResult split_transfer_errors(const LabeledState& s, const InstrumentSpec& spec_T,
                                          const InstrumentSpec& spec_Tbar, const Labels& A,
                                          const Labels& B);

struct TwirlReport {
  int d = 0, L = 0, samples = 0;
  Rational r, s;
  double max_deviation = 0;
  double sym_trace_error = 0;   // |Tr Pi_sym - d(d+1)/2|
  double swap_split_error = 0;  // max |F - (Pi_sym - Pi_anti)|
};

Rational twirl_r(int d, int L);
Rational twirl_s(int d, int L);
TwirlReport twirl_average_check(int d, int L, int samples, std::uint64_t seed);

// Max entrywise deviation of the Haar average of (U (x) I) rho (U (x) I)^dagger
// from tau (x) rho^R, for rho on A (x) R with A of dimension dA.
double haar_single_average_deviation(const Mat& rho, int dA, int samples, std::uint64_t seed);

}  // namespace entlab
