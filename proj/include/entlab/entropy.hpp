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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entlab/qcore.hpp"

namespace entlab {

struct EntropyReport {
  double S = 0;  // S(A u B)
  std::map<std::string, double> cond;
  std::map<std::string, double> coherent;
  std::map<std::string, double> mutual;
  std::optional<double> hmin_rel;   // H_min(rho^{AB} | rho^B)
  std::optional<double> h2_rel;     // H_2(rho^{AB} | rho^B)
  std::optional<double> hmax_cond;  // H_max(A|B)
  std::optional<double> h0;         // H_0(A)
};

struct ConeProgramResult {
  double optimum = 0;  // min Tr sigma over I (x) sigma >= rho
  double hmin = 0;     // -log optimum
  Mat certificate;     // sigma / Tr sigma
  Mat sigma;           // unnormalized optimizer
  int iterations = 0;
  double residual = 0;  // relative certified duality gap
  double dual_value = 0;
  double feasibility = 0;  // smallest eigenvalue of I (x) sigma - rho
  bool converged = false;
};

struct ConeOptions {
  double tol = 1e-10;
  int max_newton = 400;
};

// Thrown when rho has weight outside the support of I (x) sigma.
struct SupportViolation : std::domain_error {
  using std::domain_error::domain_error;
};

std::string join_labels(const Labels& l);

double von_neumann(const Mat& rho);
double von_neumann(const LabeledState& s, const Labels& part);
std::vector<double> marginal_spectrum(const LabeledState& s, const Labels& part);
double conditional_entropy(const LabeledState& s, const Labels& part, const Labels& given);
double coherent_information(const LabeledState& s, const Labels& from, const Labels& to);
double mutual_information(const LabeledState& s, const Labels& a, const Labels& b);

// H_min(rho^{AB} | sigma^B) for rho on A (x) B with A of dimension dA.
double min_entropy_relative(const Mat& rho, int dA, const Mat& sigma);
// Pure rho = |psi><psi| on A (x) B.
double min_entropy_relative_pure(const Vec& psi, int dA, const Mat& sigma);
// rho on A u B, sigma on B: A is everything in rho not present in sigma.
double min_entropy_relative(const LabeledState& rho, const LabeledState& sigma);
// H_min of the marginal of s on A u B relative to sigma on B (systems of B in the
// listed order). Uses a low-rank factor of the marginal when s is pure.
double min_entropy_of_marginal(const LabeledState& s, const Labels& A, const Labels& B,
                               const Mat& sigma);

ConeProgramResult conditional_min_entropy(const Mat& rho, int dA, const ConeOptions& opt = {});
ConeProgramResult conditional_min_entropy(const LabeledState& rho, const Labels& cond,
                                          const ConeOptions& opt = {});

double min_entropy(const Mat& rho);
double collision_entropy(const Mat& rho, int dA, const Mat& sigma);
double collision_entropy(const LabeledState& rho, const LabeledState& sigma);
double collision_entropy_of_marginal(const LabeledState& s, const Labels& A, const Labels& B,
                                     const Mat& sigma);
double max_entropy(const Mat& rho);  // 2 log Tr sqrt(rho)
double conditional_max_entropy(const LabeledState& rho, const Labels& cond,
                               const ConeOptions& opt = {});
double h0(const Mat& rho);

EntropyReport entropy_report(const LabeledState& s, const Labels& a, const Labels& b,
                             bool one_shot = true);

// Truncation lower bound on the eps-smooth max-entropy of a spectrum; returns
// -infinity when the empty sum is feasible.
double smooth_max_lower_bound(std::vector<double> spectrum, double eps);
double fannes_eta(double x);
double fannes_bound(int d, double eps);
// S_cond + 8 delta (eps + 1) log d + 2 h2(2 delta).
double renes_smoothing_bound(double S_cond, double d, double delta, double eps);

}  // namespace entlab
