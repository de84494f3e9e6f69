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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "entlab/qcore.hpp"

namespace entlab {

using Rational = boost::rational<std::int64_t>;

struct TraceOutcome {
  std::string label;
  double probability = 0;
  std::optional<LabeledState> post_state;
  std::string register_value;
  std::map<std::string, double> stats;
};

struct ProtocolTrace {
  std::vector<TraceOutcome> outcomes;
  std::map<std::string, double> aggregate;
  std::map<std::string, std::string> flags;
};

// Two-bit codes: 00 = Phi+, 01 = Psi+, 10 = Phi-, 11 = Psi-.
struct BellString {
  std::vector<std::uint8_t> codes;
  std::size_t size() const { return codes.size(); }
  std::vector<std::uint64_t> bits() const;  // 2n bits packed, code i at bits 2i (high), 2i+1 (low)
};

std::string bell_code_name(int code);
int bell_code_of(const std::string& name);

struct SwapBranchRational {
  std::string label;
  Rational probability;
  Rational singlet_given_outcome;
};

struct SwapRational {
  std::vector<SwapBranchRational> branches;  // in code order 00, 01, 10, 11
  Rational scp;
};

// Exact enumeration for rational Schmidt probabilities.
SwapRational entanglement_swap_rational(Rational lambda1, Rational lambda2);

// Numerical protocol: Bell measurement of C1C2 on (psi^{AC1} (x) psi^{C2B}) with
// psi = sqrt(l1)|00> + sqrt(l2)|11>, followed by correction or Procrustean filtering.
ProtocolTrace entanglement_swap(double lambda1, double lambda2);

// Bell-diagonal code probabilities in code order (Phi+, Psi+, Phi-, Psi-).
LabeledState bell_diagonal_state(const std::vector<double>& p);

struct HashingOptions {
  int decoys = 10000;
  bool record_replay = false;  // keep hash masks for replay checks (small n)
};

struct HashingTrial {
  bool hidden_typical = false;
  bool success = false;
  int surviving_decoys = 0;
  int rounds_to_unique = -1;  // first round after which no decoy survived
  std::vector<std::vector<std::uint64_t>> masks;  // only with record_replay
  std::vector<std::uint8_t> parities;             // only with record_replay
  BellString hidden;                              // only with record_replay
};

struct HashingResult {
  ProtocolTrace trace;
  std::vector<HashingTrial> trials;
  double entropy = 0;  // S(AB) of the Bell-diagonal state
  int rounds = 0;
  double success_frequency = 0;
  double empty_candidate_frequency = 0;
  double yield = 0;
  double target_yield = 0;  // 1 - S(AB)
  bool infeasible = false;
};

HashingResult hashing_simulation(const std::vector<double>& p, int n, double delta, int trials,
                                 std::uint64_t seed, const HashingOptions& opt = {});

// Parity of the masked bits of a packed string.
int masked_parity(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& mask);

ProtocolTrace schmidt_projection(double theta, int n);

// Exact binomial coefficient for n <= 64.
std::uint64_t binomial_u64(int n, int k);

}  // namespace entlab
