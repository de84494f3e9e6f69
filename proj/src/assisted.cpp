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

#include "entlab/assisted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

namespace {

Labels cat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Labels union_of(const std::vector<Party>& parties, unsigned mask) {
  Labels out;
  for (std::size_t i = 0; i < parties.size(); ++i)
    if (mask & (1u << i)) out = cat(out, parties[i]);
  return out;
}

Labels names_of(const std::vector<Party>& parties, unsigned mask) {
  Labels out;
  for (std::size_t i = 0; i < parties.size(); ++i)
    if (mask & (1u << i)) out.push_back(party_name(parties[i]));
  return out;
}

// Entropy of a Schmidt-coefficient vector given as singular values.
double entropy_of_singular(const RVec& sv) {
  double norm2 = sv.squaredNorm();
  if (norm2 <= 0) return 0.0;
  double h = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) h -= xlog2x(sv(i) * sv(i) / norm2);
  return h;
}

// S(A) of a pure vector on A (x) B (row-major, A most significant).
double pure_entropy(const Vec& v, int dA, int dB) {
  Mat m(dA, dB);
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b) m(a, b) = v(a * dB + b);
  Eigen::JacobiSVD<Mat> svd(m);
  return entropy_of_singular(svd.singularValues());
}

// S(A) and S(B) of a pure vector on A (x) B (x) C.
std::pair<double, double> pure_AB_entropies(const Vec& v, int dA, int dB, int dC) {
  double sa = pure_entropy(v, dA, dB * dC);
  Mat rb = Mat::Zero(dB, dB);
  for (int a = 0; a < dA; ++a)
    for (int c = 0; c < dC; ++c)
      for (int b = 0; b < dB; ++b)
        for (int b2 = 0; b2 < dB; ++b2)
          rb(b, b2) += v((a * dB + b) * dC + c) * std::conj(v((a * dB + b2) * dC + c));
  double norm = rb.trace().real();
  double sb = norm > 0 ? von_neumann(rb / norm) : 0.0;
  return {sa, sb};
}

Mat trace_first(const Mat& rho, int d1, int d2) {
  Mat out = Mat::Zero(d2, d2);
  for (int a = 0; a < d1; ++a) out += rho.block(a * d2, a * d2, d2, d2);
  return out;
}

Mat trace_second(const Mat& rho, int d1, int d2) {
  Mat out(d1, d1);
  for (int a = 0; a < d1; ++a)
    for (int a2 = 0; a2 < d1; ++a2) out(a, a2) = rho.block(a * d2, a2 * d2, d2, d2).trace();
  return out;
}

// exp(i t H) for Hermitian H.
Mat unitary_step(const Mat& H, double t) {
  auto e = hermitian_eigen(H);
  Vec ph(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) ph(i) = std::polar(1.0, t * e.values(i));
  return e.vectors * ph.asDiagonal() * e.vectors.adjoint();
}

Mat random_hermitian(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat h(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) h(i, j) = cplx(g(rng), g(rng));
  Mat out = (h + h.adjoint()) * 0.5;
  return out / out.norm();
}

// Maximizes f over n-outcome rank-one POVMs on a dC-dimensional system. Each POVM
// is the first dC columns of an n x n unitary; candidates are random unitaries
// refined by accepted local steps, plus the computational basis.
template <class F>
std::pair<double, int> povm_search(int dC, F&& f, const PovmSearchOptions& opt) {
  const int n = dC * dC;
  Mat basis = Mat::Zero(n, dC);
  basis.topRows(dC) = Mat::Identity(dC, dC);
  double base = f(basis);
  auto runs = parallel_map<double>(static_cast<std::size_t>(opt.restarts), [&](std::size_t r) {
    Rng rng = make_rng(opt.seed, r);
    Mat U = r == 0 ? Mat(Mat::Identity(n, n)) : haar_unitary(n, rng);
    double best = f(U.leftCols(dC));
    double step = 0.5;
    for (int k = 0; k < opt.steps && step > 1e-6; ++k) {
      Mat cand = U * unitary_step(random_hermitian(n, rng), step);
      double v = f(cand.leftCols(dC));
      if (v > best) {
        best = v;
        U = cand;
        step = std::min(1.0, step * 1.2);
      } else {
        step *= 0.8;
      }
    }
    return best;
  });
  double best = base;
  for (double v : runs) best = std::max(best, v);
  return {best, 1 + opt.restarts * (opt.steps + 1)};
}

struct Arranged {
  Vec v;
  int dA = 1, dB = 1, dC = 1;
};

Arranged arrange_pure(const LabeledState& s, const Labels& A, const Labels& B, const Labels& C) {
  Labels all = cat(cat(A, B), C);
  if (static_cast<int>(all.size()) != static_cast<int>(s.systems().size()))
    throw std::invalid_argument("A, B and C must cover every system of the state");
  if (!s.is_pure()) throw std::invalid_argument("expected a pure state on ABC");
  LabeledState r = reorder(s, all);
  Arranged out;
  out.dA = s.dim_of(A);
  out.dB = s.dim_of(B);
  out.dC = s.dim_of(C);
  if (r.has_vector()) {
    out.v = r.vector();
  } else {
    auto e = hermitian_eigen(r.matrix());
    out.v = e.vectors.col(e.vectors.cols() - 1) * std::sqrt(std::max(0.0, e.values(e.values.size() - 1)));
  }
  return out;
}

// Rows x of W give the unnormalized post-measurement vectors sum_c W(x,c) psi(ab,c).
double average_pure_entropy(const Arranged& a, const Mat& W) {
  const int dAB = a.dA * a.dB;
  Mat M(a.dC, dAB);
  for (int ab = 0; ab < dAB; ++ab)
    for (int c = 0; c < a.dC; ++c) M(c, ab) = a.v(ab * a.dC + c);
  Mat phi = W * M;
  double total = 0.0;
  for (Eigen::Index x = 0; x < phi.rows(); ++x) {
    Vec row = phi.row(x).transpose();
    double p = row.squaredNorm();
    if (p < 1e-15) continue;
    total += p * pure_entropy(row, a.dA, a.dB);
  }
  return total;
}

}  // namespace

MincutCoherent mincut_coherent(const LabeledState& s, const Labels& A, const Labels& B,
                               const std::vector<Party>& helpers) {
  if (helpers.size() > 16) throw std::invalid_argument("mincut_coherent: at most 16 helpers");
  const unsigned m = static_cast<unsigned>(helpers.size());
  const unsigned full = (1u << m) - 1;
  const double s_all = von_neumann(s, cat(cat(A, B), union_of(helpers, full)));
  MincutCoherent out;
  out.values = parallel_map<double>(std::size_t{1} << m, [&](std::size_t mask) {
    Labels to = cat(B, union_of(helpers, full & ~static_cast<unsigned>(mask)));
    return von_neumann(s, to) - s_all;
  });
  out.value = out.values[0];
  out.mask = 0;
  for (unsigned mask = 1; mask <= full && m > 0; ++mask) {
    double v = out.values[mask];
    if (v < out.value - 1e-12 || (std::abs(v - out.value) <= 1e-12 && cut_precedes(mask, out.mask))) {
      out.value = std::min(out.value, v);
      out.mask = mask;
    }
  }
  out.argmin = names_of(helpers, out.mask);
  return out;
}

AssistReport assisted_lower_bound(const LabeledState& s, const Labels& A, const Labels& B,
                                  const std::vector<Party>& helpers) {
  AssistReport r;
  r.hashing = coherent_information(s, A, B);
  if (!helpers.empty()) {
    auto mc = mincut_coherent(s, A, B, helpers);
    r.mincut_coherent = mc.value;
    r.mincut_arg = mc.argmin;
    r.mincut_mask = mc.mask;
    r.cut_values = mc.values;
    r.L_value = mc.value;
    r.lower_bound = std::max(r.hashing, r.L_value);
    const unsigned m = static_cast<unsigned>(helpers.size());
    const unsigned full = (1u << m) - 1;
    for (unsigned y = 1; y <= full; ++y) {
      Labels given = cat(union_of(helpers, full & ~y), B);
      if (std::abs(conditional_entropy(s, union_of(helpers, y), given)) <= 1e-9)
        r.zero_entropy_cuts.push_back(names_of(helpers, y));
    }
    r.beats_hashing = r.L_value > r.hashing + 1e-12 &&
                      beating_hashing(s, A, B, union_of(helpers, full)).holds;
  } else {
    r.L_value = r.hashing;
    r.mincut_coherent = r.hashing;
    r.cut_values = {r.hashing};
    r.lower_bound = r.hashing;
  }
  r.upper_EA = std::min(von_neumann(s, A), von_neumann(s, B));
  return r;
}

BeatingHashing beating_hashing(const LabeledState& s, const Labels& A, const Labels& B,
                               const Labels& C) {
  BeatingHashing out;
  out.coherent_C_AB = coherent_information(s, C, cat(A, B));
  out.cond_gap = conditional_entropy(s, A, B) - conditional_entropy(s, A, cat(B, C));
  out.hashing = coherent_information(s, A, B);
  out.L_value = std::min(coherent_information(s, cat(A, C), B), coherent_information(s, A, cat(B, C)));
  out.holds = out.coherent_C_AB > 1e-10 && out.cond_gap > 1e-10;
  return out;
}

double povm_average_entropy(const LabeledState& s, const Labels& A, const Labels& B,
                            const Labels& C, const Mat& W) {
  auto a = arrange_pure(s, A, B, C);
  if (W.cols() != a.dC) throw std::invalid_argument("povm_average_entropy: W has wrong width");
  return average_pure_entropy(a, W);
}

EoaPure eoa_pure(const LabeledState& s, const Labels& A, const Labels& B, const Labels& C,
                 const PovmSearchOptions& opt) {
  auto a = arrange_pure(s, A, B, C);
  if (a.dC > 8) throw std::invalid_argument("eoa_pure: helper dimension above 8");
  EoaPure out;
  out.asymptotic = std::min(von_neumann(s, A), von_neumann(s, B));
  Mat basis = Mat::Identity(a.dC, a.dC);
  out.basis_value = average_pure_entropy(a, basis);
  auto [best, evals] = povm_search(a.dC, [&](const Mat& W) { return average_pure_entropy(a, W); }, opt);
  out.one_shot = std::max(best, out.basis_value);
  out.evaluations = evals + 1;
  return out;
}

DaUpperBounds da_upper_bounds(const LabeledState& s, const Labels& A, const Labels& B,
                              const Labels& C, int rotations, std::uint64_t seed) {
  Labels all = cat(cat(A, B), C);
  const int dA = s.dim_of(A), dB = s.dim_of(B), dC = s.dim_of(C);
  Mat rho = reduced_matrix(reorder(partial_trace(s, all), all), all);
  auto e = hermitian_eigen(rho);
  std::vector<Vec> u;
  for (Eigen::Index k = e.values.size() - 1; k >= 0; --k)
    if (e.values(k) > 1e-12) u.push_back(e.vectors.col(k) * std::sqrt(e.values(k)));
  const int r = static_cast<int>(u.size());
  const int dim = dA * dB * dC;

  auto ensemble_value = [&](const Mat& V) {
    // Members psi_i = sum_k V(i,k) u_k; V has orthonormal columns.
    double total = 0.0;
    for (Eigen::Index i = 0; i < V.rows(); ++i) {
      Vec psi = Vec::Zero(dim);
      for (int k = 0; k < r; ++k) psi += V(i, k) * u[k];
      double p = psi.squaredNorm();
      if (p < 1e-15) continue;
      auto [sa, sb] = pure_AB_entropies(psi / std::sqrt(p), dA, dB, dC);
      total += p * std::min(sa, sb);
    }
    return total;
  };

  DaUpperBounds out;
  out.spectral_bound = ensemble_value(Mat::Identity(r, r));
  auto vals = parallel_map<double>(static_cast<std::size_t>(rotations), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    int n = (i % 2 == 0) ? r : 2 * r;
    Mat U = haar_unitary(n, rng);
    return ensemble_value(U.leftCols(r));
  });
  out.ensemble_bound = out.spectral_bound;
  for (double v : vals) out.ensemble_bound = std::min(out.ensemble_bound, v);
  out.ensemble_samples = rotations + 1;

  LabeledState ab = partial_trace(s, cat(A, B));
  out.ea_cap = std::min(von_neumann(ab, A), von_neumann(ab, B));
  auto eab = hermitian_eigen(reduced_matrix(reorder(ab, cat(A, B)), cat(A, B)));
  int rank = 0;
  for (Eigen::Index k = 0; k < eab.values.size(); ++k)
    if (eab.values(k) > 1e-12) ++rank;
  if (rank <= 8) {
    std::string pur = "__purifier";
    LabeledState p = purify(reorder(ab, cat(A, B)), pur);
    auto eo = eoa_pure(p, A, B, {pur}, PovmSearchOptions{16, 120, seed});
    out.ea_marginal_estimate = eo.one_shot;
  }
  return out;
}

double assisted_hashing_estimate(const LabeledState& s, const Labels& A, const Labels& B,
                                 const Labels& C, const PovmSearchOptions& opt) {
  Labels all = cat(cat(A, B), C);
  const int dA = s.dim_of(A), dB = s.dim_of(B), dC = s.dim_of(C);
  if (dC > 8) throw std::invalid_argument("assisted_hashing_estimate: helper dimension above 8");
  Mat rho = reduced_matrix(reorder(partial_trace(s, all), all), all);
  const int dAB = dA * dB;
  auto f = [&](const Mat& W) {
    double total = 0.0;
    for (Eigen::Index x = 0; x < W.rows(); ++x) {
      // K = I_AB (x) w_x with w_x the row x of W.
      Mat K = Mat::Zero(dAB, dAB * dC);
      for (int ab = 0; ab < dAB; ++ab)
        for (int c = 0; c < dC; ++c) K(ab, ab * dC + c) = W(x, c);
      Mat post = K * rho * K.adjoint();
      double p = post.trace().real();
      if (p < 1e-14) continue;
      post = symmetrize(post / p);
      double sab = von_neumann(post);
      double ia = von_neumann(trace_first(post, dA, dB)) - sab;
      double ib = von_neumann(trace_second(post, dA, dB)) - sab;
      total += p * std::max({0.0, ia, ib});
    }
    return total;
  };
  return povm_search(dC, f, opt).first;
}

ConvexityCheck convexity_check(const std::vector<LabeledState>& pure_members,
                               const std::vector<double>& probs, const Labels& A,
                               const Labels& B, const Labels& C, const PovmSearchOptions& opt) {
  if (pure_members.empty() || pure_members.size() != probs.size())
    throw std::invalid_argument("convexity_check: members and probabilities differ in size");
  const auto& sys = pure_members.front().systems();
  Mat mix = Mat::Zero(pure_members.front().dim(), pure_members.front().dim());
  ConvexityCheck out;
  for (std::size_t i = 0; i < pure_members.size(); ++i) {
    if (pure_members[i].systems() != sys) throw std::invalid_argument("convexity_check: system mismatch");
    mix += probs[i] * pure_members[i].matrix();
    out.average_upper +=
        probs[i] * std::min(von_neumann(pure_members[i], A), von_neumann(pure_members[i], B));
  }
  LabeledState m = LabeledState::from_matrix(sys, mix);
  out.mixture_lower = assisted_hashing_estimate(m, A, B, C, opt);
  out.holds = out.mixture_lower <= out.average_upper + 1e-9;
  return out;
}

ChainComparison hierarchical_vs_random(const std::vector<ChainLink>& chain, bool inject_cnot) {
  if (chain.empty()) throw std::invalid_argument("hierarchical_vs_random: empty chain");
  std::vector<LabeledState> parts;
  for (const auto& l : chain) {
    if (!l.state.has(l.left) || !l.state.has(l.right))
      throw std::invalid_argument("link does not contain " + l.left + " and " + l.right);
    parts.push_back(l.state);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    int d1 = chain[i].state.dim_of({chain[i].right});
    int d2 = chain[i + 1].state.dim_of({chain[i + 1].left});
    if (inject_cnot && i == 0 && (d1 != 2 || d2 != 2))
      throw std::invalid_argument("CNOT needs qubit registers at the first helper");
  }
  ChainComparison out;
  out.composed = tensor_all(parts);
  std::vector<Party> helpers;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    helpers.push_back({chain[i].right, chain[i + 1].left});
  if (inject_cnot) {
    if (helpers.empty()) throw std::invalid_argument("CNOT needs an intermediate node");
    out.composed = apply_local(out.composed, helpers.front(), states::cnot());
  }
  out.hierarchical = std::numeric_limits<double>::infinity();
  for (const auto& l : chain) {
    double rate = coherent_information(out.composed, {l.left}, {l.right});
    out.link_rates.push_back(rate);
    // Each link is distilled by hashing, which yields max{0, I(left > right)}.
    out.hierarchical = std::min(out.hierarchical, std::max(0.0, rate));
  }
  out.report = assisted_lower_bound(out.composed, {chain.front().left}, {chain.back().right}, helpers);
  out.random_strategy = out.report.lower_bound;
  return out;
}

}  // namespace entlab
