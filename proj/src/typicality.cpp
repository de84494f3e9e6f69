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

#include "entlab/typicality.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "entlab/entropy.hpp"

namespace entlab {

namespace {

constexpr double kSupportCut = 1e-12;

std::vector<double> clean_distribution(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw std::invalid_argument("negative probability");
    sum += std::max(0.0, x);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");
  std::vector<double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] > kSupportCut ? p[i] / sum : 0.0;
  return q;
}

struct TypeClass {
  std::vector<int> counts;
  double log2_count = 0;  // log2 of the number of strings of this type
  double log2_prob = 0;   // log2 of p^n of one string
};

// Calls f for every typical type.
void for_each_type(const std::vector<double>& p, int n, double delta,
                   const std::function<void(const TypeClass&)>& f) {
  const int d = static_cast<int>(p.size());
  std::vector<int> lo(d), hi(d);
  for (int x = 0; x < d; ++x) {
    if (p[x] == 0.0) {
      lo[x] = hi[x] = 0;
    } else {
      lo[x] = std::max(0, static_cast<int>(std::ceil(n * (p[x] - delta) - 1e-9)));
      hi[x] = std::min(n, static_cast<int>(std::floor(n * (p[x] + delta) + 1e-9)));
    }
  }
  const double lgn = std::lgamma(n + 1.0);
  TypeClass t;
  t.counts.assign(d, 0);
  std::size_t visited = 0;
  std::function<void(int, int)> rec = [&](int x, int left) {
    if (x == d - 1) {
      if (left < lo[x] || left > hi[x]) return;
      t.counts[x] = left;
      if (++visited > 10000000) throw std::runtime_error("typical_set: more than 1e7 type classes");
      double lc = lgn, lp = 0.0;
      for (int y = 0; y < d; ++y) {
        lc -= std::lgamma(t.counts[y] + 1.0);
        if (t.counts[y] > 0) lp += t.counts[y] * std::log2(p[y]);
      }
      t.log2_count = lc / std::log(2.0);
      t.log2_prob = lp;
      f(t);
      return;
    }
    for (int k = lo[x]; k <= std::min(hi[x], left); ++k) {
      t.counts[x] = k;
      rec(x + 1, left - k);
    }
  };
  rec(0, n);
}

double log2_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double m = std::max(a, b);
  return m + std::log2(std::exp2(a - m) + std::exp2(b - m));
}

}  // namespace

double typicality_constant(const std::vector<double>& p) {
  double c = 0.0;
  for (double x : p)
    if (x > kSupportCut) c += std::abs(std::log2(x));
  return c;
}

bool is_typical_counts(const std::vector<int>& counts, const std::vector<double>& p, double delta) {
  if (counts.size() != p.size()) throw std::invalid_argument("is_typical_counts: size mismatch");
  long n = 0;
  for (int k : counts) n += k;
  if (n == 0) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] <= kSupportCut && counts[x] != 0) return false;
    if (std::abs(static_cast<double>(counts[x]) / n - p[x]) > delta + 1e-12) return false;
  }
  return true;
}

TypicalSet typical_set(const std::vector<double>& p_in, int n, double delta, bool materialize) {
  if (n < 1) throw std::invalid_argument("typical_set: n must be positive");
  if (delta < 0) throw std::invalid_argument("typical_set: delta must be non-negative");
  auto p = clean_distribution(p_in);
  TypicalSet ts;
  ts.d = static_cast<int>(p.size());
  ts.n = n;
  ts.delta = delta;
  ts.c = typicality_constant(p);
  ts.H = shannon_entropy(p);
  const double ninf = -std::numeric_limits<double>::infinity();
  double log2_card = ninf, log2_mass = ninf;
  ts.log2_min_prob = std::numeric_limits<double>::infinity();
  ts.log2_max_prob = ninf;
  for_each_type(p, n, delta, [&](const TypeClass& t) {
    ++ts.type_classes;
    log2_card = log2_add(log2_card, t.log2_count);
    log2_mass = log2_add(log2_mass, t.log2_count + t.log2_prob);
    ts.log2_min_prob = std::min(ts.log2_min_prob, t.log2_prob);
    ts.log2_max_prob = std::max(ts.log2_max_prob, t.log2_prob);
  });
  ts.log2_cardinality = log2_card;
  ts.cardinality = std::exp2(log2_card);
  ts.total_probability = std::exp2(log2_mass);
  ts.min_prob = std::exp2(ts.log2_min_prob);
  ts.max_prob = std::exp2(ts.log2_max_prob);
  const double tol = 1e-9 * std::max(1.0, static_cast<double>(n));
  if (ts.type_classes == 0) {
    ts.prob_bounds_hold = ts.card_upper_holds = ts.card_lower_holds = true;
  } else {
    ts.prob_bounds_hold = ts.log2_min_prob >= -n * (ts.H + ts.c * delta) - tol &&
                          ts.log2_max_prob <= -n * (ts.H - ts.c * delta) + tol;
    ts.card_upper_holds = log2_card <= n * (ts.H + ts.c * delta) + tol;
    // (1 - eps) = total probability.
    ts.card_lower_holds = log2_card >= log2_mass + n * (ts.H - ts.c * delta) - tol;
  }
  if (materialize) {
    double total = std::pow(static_cast<double>(ts.d), n);
    if (total > 1e7) throw std::invalid_argument("typical_set: d^n exceeds 1e7, cannot materialize");
    std::vector<std::vector<int>> members;
    std::vector<int> x(n, 0), counts(ts.d, 0);
    counts[0] = n;
    const long long N = static_cast<long long>(total);
    for (long long idx = 0; idx < N; ++idx) {
      if (is_typical_counts(counts, p, delta)) members.push_back(x);
      // Increment the base-d odometer (last position fastest).
      for (int pos = n - 1; pos >= 0; --pos) {
        --counts[x[pos]];
        if (++x[pos] < ts.d) {
          ++counts[x[pos]];
          break;
        }
        x[pos] = 0;
        ++counts[0];
      }
    }
    ts.members = std::move(members);
  }
  return ts;
}

Mat typical_projector(const Mat& rho, int n, double delta) {
  const int d = static_cast<int>(rho.rows());
  double total = std::pow(static_cast<double>(d), n);
  if (total > 1024) throw std::invalid_argument("typical_projector: d^n above 1024");
  auto e = hermitian_eigen(rho);
  std::vector<double> p(d);
  for (int i = 0; i < d; ++i) p[i] = std::max(0.0, e.values(i));
  double sum = 0.0;
  for (double x : p) sum += x;
  for (double& x : p) x /= sum;
  for (double& x : p)
    if (x <= kSupportCut) x = 0.0;
  const int N = static_cast<int>(total);
  Mat V = Mat::Identity(1, 1);
  for (int k = 0; k < n; ++k) V = kron(V, e.vectors);
  RVec ind = RVec::Zero(N);
  std::vector<int> counts(d);
  for (int idx = 0; idx < N; ++idx) {
    std::fill(counts.begin(), counts.end(), 0);
    int r = idx;
    for (int k = 0; k < n; ++k) {
      ++counts[r % d];
      r /= d;
    }
    if (is_typical_counts(counts, p, delta)) ind(idx) = 1.0;
  }
  return V * ind.cast<cplx>().asDiagonal() * V.adjoint();
}

ProjectorReport typical_projector_checks(const LabeledState& s, int n, double delta) {
  if (s.systems().size() != 1) throw std::invalid_argument("typical_projector_checks: need one system");
  const int d = s.dim();
  if (std::pow(static_cast<double>(d), n) > 4096)
    throw std::invalid_argument("typical_projector_checks: d^n above 4096");
  const Mat& rho = s.matrix();
  auto ev = hermitian_eigenvalues(rho);
  std::vector<double> p(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) sum += std::max(0.0, ev(i));
  for (int i = 0; i < d; ++i) p[i] = std::max(0.0, ev(i)) / sum;
  for (double& x : p)
    if (x <= kSupportCut) x = 0.0;
  ProjectorReport r;
  r.dim = static_cast<int>(std::pow(static_cast<double>(d), n));
  r.S = shannon_entropy(p);
  r.c = typicality_constant(p);
  double rank = 0.0, mass = 0.0, sq = 0.0;
  double emin = std::numeric_limits<double>::infinity(), emax = 0.0;
  for_each_type(p, n, delta, [&](const TypeClass& t) {
    double cnt = std::exp2(t.log2_count), pr = std::exp2(t.log2_prob);
    rank += cnt;
    mass += cnt * pr;
    sq += cnt * pr * pr;
    emin = std::min(emin, pr);
    emax = std::max(emax, pr);
  });
  const double tol = 1e-12;
  r.rank = std::round(rank);
  r.mass = mass;
  r.eps = std::max(0.0, 1.0 - mass);
  r.eig_lower = std::exp2(-n * (r.S + r.c * delta));
  r.eig_upper = std::exp2(-n * (r.S - r.c * delta));
  r.typical_eig_min = rank > 0 ? emin : 0.0;
  r.typical_eig_max = emax;
  r.eigen_sandwich = rank == 0 || (emin >= r.eig_lower * (1 - 1e-9) && emax <= r.eig_upper * (1 + 1e-9));
  r.trace_lower = (1 - r.eps) * std::exp2(n * (r.S - r.c * delta));
  r.trace_upper = std::exp2(n * (r.S + r.c * delta));
  r.trace_sandwich = r.rank >= r.trace_lower * (1 - 1e-9) - tol && r.rank <= r.trace_upper * (1 + 1e-9);
  r.purity = mass > 0 ? sq / (mass * mass) : 0.0;
  r.purity_bound = mass > 0 ? std::exp2(-n * (r.S - 3 * r.c * delta)) / ((1 - r.eps) * (1 - r.eps))
                            : std::numeric_limits<double>::infinity();
  r.purity_holds = r.purity <= r.purity_bound * (1 + 1e-9);
  // Pi commutes with psi^{(x)n}: the gentle-measurement distance is the atypical mass.
  r.gentle_distance = r.eps;
  r.gentle_bound = 2 * std::sqrt(r.eps);
  r.gentle_holds = r.gentle_distance <= r.gentle_bound + tol;
  r.hoeffding_bound = 1 - 2.0 * d * std::exp(-2.0 * n * delta * delta);
  r.hoeffding_holds = mass >= r.hoeffding_bound - tol;
  if (r.dim <= 256) {
    Mat Pi = typical_projector(rho, n, delta);
    Mat big = Mat::Identity(1, 1);
    for (int k = 0; k < n; ++k) big = kron(big, rho);
    Mat pp = Pi * big * Pi;
    r.dense_mass = (big * Pi).trace().real();
    r.dense_gentle_distance = trace_norm(pp - big);
    r.dense_checked = true;
    r.gentle_holds = r.gentle_holds && r.dense_gentle_distance <= 2 * std::sqrt(std::max(0.0, 1 - r.dense_mass)) + 1e-9;
  }
  return r;
}

GentleCheck gentle_measurement_check(const Mat& rho, const Mat& X) {
  GentleCheck g;
  Mat sx = psd_sqrt(X);
  g.mass = (X * rho).trace().real();
  g.eps = std::max(0.0, 1.0 - g.mass);
  g.distance = trace_norm(sx * rho * sx - rho);
  g.bound = 2 * std::sqrt(g.eps);
  g.holds = g.distance <= g.bound + 1e-9;
  return g;
}

UnionBoundCheck union_bound_check(const std::vector<std::vector<double>>& spectra, int n,
                                  double delta) {
  if (spectra.empty()) throw std::invalid_argument("union_bound_check: no systems");
  std::vector<std::vector<double>> ind;
  double total = 1.0;
  for (const auto& sp : spectra) {
    auto p = clean_distribution(sp);
    const int d = static_cast<int>(p.size());
    const int N = static_cast<int>(std::pow(static_cast<double>(d), n));
    total *= N;
    if (total > (1 << 20)) throw std::invalid_argument("union_bound_check: dimension above 2^20");
    std::vector<double> v(N, 0.0);
    std::vector<int> counts(d);
    for (int idx = 0; idx < N; ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      int r = idx;
      for (int k = 0; k < n; ++k) {
        ++counts[r % d];
        r /= d;
      }
      v[idx] = is_typical_counts(counts, p, delta) ? 1.0 : 0.0;
    }
    ind.push_back(std::move(v));
  }
  const int k = static_cast<int>(ind.size());
  UnionBoundCheck out;
  out.dim = static_cast<int>(total);
  out.min_gap = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(k, 0);
  for (int flat = 0; flat < out.dim; ++flat) {
    double prod = 1.0, sum = 0.0;
    for (int i = 0; i < k; ++i) {
      prod *= ind[i][idx[i]];
      sum += ind[i][idx[i]];
    }
    out.min_gap = std::min(out.min_gap, prod - (sum - (k - 1)));
    for (int i = k - 1; i >= 0; --i) {
      if (++idx[i] < ind[i].size()) break;
      idx[i] = 0;
    }
  }
  out.holds = out.min_gap >= -1e-12;
  return out;
}

MixedStateBounds mixedstate_bounds(const LabeledState& s, const Labels& C1, const Labels& C2,
                                   double s1, double delta1, double delta2, std::optional<double> c) {
  if (s1 <= 0 || delta1 <= 0 || delta2 <= 0)
    throw std::invalid_argument("mixedstate_bounds: s1, delta1 and delta2 must be positive");
  Labels both = C1;
  both.insert(both.end(), C2.begin(), C2.end());
  const double d1 = s.dim_of(C1), d2 = s.dim_of(C2);
  const double S12 = von_neumann(s, both), S1 = von_neumann(s, C1), S2 = von_neumann(s, C2);
  MixedStateBounds b;
  b.c = c.value_or(2.0 * (d1 + d2));
  const double lc = std::log(b.c);
  const double decay = std::exp(-s1 * delta1 * delta1);
  b.eps = b.c * std::exp(-2.0 * s1 * delta1 * delta1);
  b.s2 = (s1 * (2.0 * delta1 * delta1 + lc) - lc) / (2.0 * delta2 * delta2);
  b.n = s1 * b.s2;
  b.nu = 4.0 * std::sqrt(b.c) * decay +
         (s1 * (2.0 * delta1 * delta1 + lc) - lc) / (delta2 * delta2) * std::sqrt(b.c) * decay;
  b.upsilon = fannes_eta(b.eps) * std::log2(d1 * d2) + 3.0 * delta2 / s1;
  const double pre = b.eps < 1.0 ? -2.0 * std::log2(1.0 - b.eps) : std::numeric_limits<double>::infinity();
  b.log2_purity_joint = pre - b.n * (S12 - b.upsilon);
  b.log2_purity_1 = pre - b.n * (S1 - 3.0 * delta1);
  b.log2_purity_2 = pre - b.n * (S2 - 3.0 * delta1);
  b.log2_rank_1 = b.n * (S1 + delta1);
  b.log2_rank_2 = b.n * (S2 + delta1);
  return b;
}

}  // namespace entlab
