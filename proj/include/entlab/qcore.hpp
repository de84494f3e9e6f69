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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "entlab/linalg.hpp"
#include "entlab/rng.hpp"

namespace entlab {

using Labels = std::vector<std::string>;

struct System {
  std::string label;
  int dim = 1;
  bool operator==(const System&) const = default;
};

enum class NormMode { normalized, subnormalized };

// Multipartite density operator with named subsystems. Pure states keep their
// state vector and only materialize the density matrix on demand.
class LabeledState {
 public:
  LabeledState();
  static LabeledState from_matrix(std::vector<System> systems, const Mat& m,
                                  NormMode mode = NormMode::normalized);
  static LabeledState from_vector(std::vector<System> systems, const Vec& v,
                                  NormMode mode = NormMode::normalized);

  const std::vector<System>& systems() const;
  Labels labels() const;
  std::vector<int> dims() const;
  int dim() const;
  int dim_of(const Labels& part) const;
  int index_of(const std::string& label) const;
  bool has(const std::string& label) const;

  bool is_pure() const;
  bool has_vector() const;
  const Vec& vector() const;
  const Mat& matrix() const;
  double trace() const;
  NormMode norm_mode() const;
  // Smallest eigenvalue seen when the state was validated (0 for vector states).
  double min_eigenvalue() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct SchmidtData {
  std::vector<double> coefficients;  // non-increasing
  Mat left_vectors;
  Mat right_vectors;
};

struct DistanceReport {
  double fidelity = 0;
  double generalized_fidelity = 0;
  double trace_distance = 0;
  double generalized_trace_distance = 0;
  double purified_distance = 0;
};

// Linear offsets of every multi-index of the listed systems (first listed is
// most significant) inside the full row-major index of a state.
std::vector<std::size_t> subset_offsets(const std::vector<int>& dims,
                                        const std::vector<int>& subset);
std::vector<int> resolve_labels(const LabeledState& s, const Labels& part);
Labels complement(const LabeledState& s, const Labels& part);

LabeledState tensor(const LabeledState& a, const LabeledState& b);
LabeledState tensor_all(const std::vector<LabeledState>& parts);
// Reduced state on `keep`; kept systems stay in the order they appear in s.
LabeledState partial_trace(const LabeledState& s, const Labels& keep);
Mat reduced_matrix(const LabeledState& s, const Labels& keep);
// Same state with systems listed in `order` (a permutation of the labels).
LabeledState reorder(const LabeledState& s, const Labels& order);
LabeledState relabel(const LabeledState& s, const std::string& from, const std::string& to);
LabeledState purify(const LabeledState& s, const std::string& ref_label);
SchmidtData schmidt(const LabeledState& s, const Labels& left);
DistanceReport distances(const LabeledState& a, const LabeledState& b);
DistanceReport distances(const Mat& a, const Mat& b);
double fidelity(const Mat& a, const Mat& b);

// Applies op (square, acting on the listed systems in the listed order).
LabeledState apply_local(const LabeledState& s, const Labels& targets, const Mat& op);

Mat haar_unitary(int dim, Rng& rng);
Vec random_unit_vector(int dim, Rng& rng);
LabeledState random_pure_state(std::vector<System> systems, Rng& rng);
// Induced measure: trace over an environment of dimension env_dim.
LabeledState random_mixed_state(std::vector<System> systems, int env_dim, Rng& rng);

Mat ket_bra(const Vec& v);
Mat maximally_mixed(int d);
Mat swap_operator(int d);

namespace states {
LabeledState bell(const std::string& which, const std::string& a = "A",
                  const std::string& b = "B");
LabeledState ghz(const Labels& parties);
LabeledState werner(double F, const std::string& a = "A", const std::string& b = "B");
LabeledState max_entangled(int d, const std::string& a = "A", const std::string& b = "B");
LabeledState max_mixed(int d, const std::string& a = "A");
double harmonic(int d);
LabeledState embezzle(int d, const std::string& a = "A", const std::string& b = "B");
LabeledState schmidt_pair(const std::vector<double>& lambdas, const std::string& a = "A",
                          const std::string& b = "B");
LabeledState basis(int d, int k, const std::string& a = "A");
// psi^{AC1} (x) psi^{BC2R}, systems ordered A, C1, B, C2, R.
LabeledState example_ch5();
// Example with two maximally entangled pairs of dimension d and an extra pure
// bipartite state of Schmidt spectrum `theta` shared by C2 and C3. Systems: C1 (d),
// C2 (d*k), C3 (d*k), R (d), where k = theta.size().
LabeledState example_three_sender(int d, const std::vector<double>& theta);
// (1/sqrt H_d) sum_j j^{-1/2} |j>^{C1} |psi_j>^{C2} |j>^R with the given psi_j columns.
LabeledState example_overlap(const Mat& psi_columns);
LabeledState two_sender_example();
Mat cnot();
}  // namespace states

}  // namespace entlab
