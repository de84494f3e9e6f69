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

#include "entlab/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

namespace {

Mat ordered_reduced(const LabeledState& s, const Labels& order) {
  if (order.empty()) return Mat::Identity(1, 1) * s.trace();
  LabeledState r = partial_trace(s, order);
  if (r.labels() != order) r = reorder(r, order);
  return r.matrix();
}

Labels subset_labels(const InstrumentSpec& spec, unsigned mask) {
  Labels out;
  for (std::size_t i = 0; i < spec.senders.size(); ++i)
    if (mask & (1u << i))
      out.insert(out.end(), spec.senders[i].systems.begin(), spec.senders[i].systems.end());
  return out;
}

struct Layout {
  std::vector<int> dc, k, l, n, rem;  // per sender
  int dR = 1;
  int D = 1;
};

Layout layout_of(const LabeledState& s, const InstrumentSpec& spec, const Labels& reference) {
  Layout lay;
  for (const auto& snd : spec.senders) {
    int d = sender_dim(s, snd);
    lay.dc.push_back(d);
    lay.k.push_back(snd.K);
    lay.l.push_back(snd.L);
    lay.n.push_back(d * snd.K / snd.L);
    lay.rem.push_back(d * snd.K - (d * snd.K / snd.L) * snd.L);
    lay.D *= d * snd.K;
  }
  lay.dR = reference.empty() ? 1 : s.dim_of(reference);
  lay.D *= lay.dR;
  return lay;
}

// psi^{C_M R} (x) tau^{K_M}, ordered C1 K1 C2 K2 ... R.
Mat arranged_state(const LabeledState& s, const InstrumentSpec& spec, const Labels& reference,
                   const Layout& lay) {
  Labels order;
  for (const auto& snd : spec.senders) order.insert(order.end(), snd.systems.begin(), snd.systems.end());
  order.insert(order.end(), reference.begin(), reference.end());
  Mat psi = ordered_reduced(s, order);
  const int m = static_cast<int>(spec.senders.size());
  const int D = lay.D;
  // Decompose a full index into (c_i, k_i) per sender and r.
  std::vector<int> c_index(D), k_index(D);
  std::vector<int> k_weight(D);
  for (int x = 0; x < D; ++x) {
    int rem = x;
    int r = rem % lay.dR;
    rem /= lay.dR;
    int cidx = 0, kidx = 0, cstride = 1, kstride = 1;
    std::vector<int> cs(m), ks(m);
    for (int i = m - 1; i >= 0; --i) {
      int block = rem % (lay.dc[i] * lay.k[i]);
      rem /= lay.dc[i] * lay.k[i];
      cs[i] = block / lay.k[i];
      ks[i] = block % lay.k[i];
    }
    for (int i = m - 1; i >= 0; --i) {
      cidx += cs[i] * cstride;
      cstride *= lay.dc[i];
      kidx += ks[i] * kstride;
      kstride *= lay.k[i];
    }
    c_index[x] = cidx * lay.dR + r;
    k_index[x] = kidx;
  }
  double kprod = 1.0;
  for (int kk : lay.k) kprod *= kk;
  Mat out = Mat::Zero(D, D);
  for (int x = 0; x < D; ++x)
    for (int y = 0; y < D; ++y)
      if (k_index[x] == k_index[y]) out(x, y) = psi(c_index[x], c_index[y]) / kprod;
  return out;
}

double log2d(double x) { return std::log2(x); }

}  // namespace

double purity(const Mat& rho) { return (rho * rho).trace().real(); }

double purity(const LabeledState& s, const Labels& part) {
  if (part.empty()) return s.trace() * s.trace();
  if (s.has_vector()) {
    Labels rest = complement(s, part);
    if (s.dim_of(rest) < s.dim_of(part)) {
      Mat r = rest.empty() ? Mat::Identity(1, 1) * s.trace() : reduced_matrix(s, rest);
      return purity(r);
    }
  }
  return purity(reduced_matrix(s, part));
}

double purity_swap_trick(const Mat& rho) {
  const int d = static_cast<int>(rho.rows());
  if (d > 32) throw std::invalid_argument("purity_swap_trick: dimension too large for explicit swap");
  Mat rr = kron(rho, rho);
  return (rr * swap_operator(d)).trace().real();
}

int sender_dim(const LabeledState& s, const Sender& snd) { return s.dim_of(snd.systems); }

void validate_spec(const LabeledState& s, const InstrumentSpec& spec, const Labels& reference) {
  std::set<std::string> used;
  for (const auto& snd : spec.senders) {
    if (snd.systems.empty()) throw std::invalid_argument("sender without systems");
    if (snd.K < 1 || snd.L < 1) throw std::invalid_argument("K and L must be positive");
    for (const auto& l : snd.systems) {
      s.index_of(l);
      if (!used.insert(l).second) throw std::invalid_argument("system assigned twice: " + l);
    }
    int d = sender_dim(s, snd);
    if (snd.L > d * snd.K) throw std::invalid_argument("L exceeds d_C * K for a sender");
  }
  for (const auto& l : reference) {
    s.index_of(l);
    if (used.count(l)) throw std::invalid_argument("reference overlaps a sender: " + l);
  }
  if (spec.senders.size() > 16) throw std::invalid_argument("too many senders");
}

double decoupling_bound_purity(const LabeledState& s, const InstrumentSpec& spec,
                               const Labels& reference) {
  validate_spec(s, spec, reference);
  const unsigned m = static_cast<unsigned>(spec.senders.size());
  Layout lay = layout_of(s, spec, reference);
  double first = 0.0, inner = 0.0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double p1 = 1.0, p2 = 1.0;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        p1 *= static_cast<double>(lay.l[i]) / (lay.dc[i] * lay.k[i]);
        p2 *= static_cast<double>(lay.l[i]) / lay.k[i];
      }
    first += p1;
    Labels rt = reference;
    Labels t = subset_labels(spec, mask);
    rt.insert(rt.end(), t.begin(), t.end());
    inner += p2 * purity(s, rt);
  }
  return 2.0 * first + 2.0 * std::sqrt(lay.dR * inner);
}

double decoupling_raw_bound_minentropy(const LabeledState& s, const InstrumentSpec& spec,
                                       const Labels& reference, const Mat& sigma) {
  validate_spec(s, spec, reference);
  const unsigned m = static_cast<unsigned>(spec.senders.size());
  Layout lay = layout_of(s, spec, reference);
  double pref = 1.0;
  for (unsigned i = 0; i < m; ++i)
    pref *= static_cast<double>(lay.n[i]) * lay.l[i] / (lay.dc[i] * lay.k[i]);
  double acc = 0.0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double logK = 0.0, logL = 0.0;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        logK += log2d(lay.k[i]);
        logL += log2d(lay.l[i]);
      }
    double h = reference.empty()
                   ? min_entropy(ordered_reduced(s, subset_labels(spec, mask)))
                   : min_entropy_of_marginal(s, subset_labels(spec, mask), reference, sigma);
    acc += std::exp2(-(h + logK - logL));
  }
  return pref * std::sqrt(acc);
}

double decoupling_bound_minentropy(const LabeledState& s, const InstrumentSpec& spec,
                                   const Labels& reference, const Mat& sigma) {
  const unsigned m = static_cast<unsigned>(spec.senders.size());
  Layout lay = layout_of(s, spec, reference);
  double first = 0.0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double p1 = 1.0;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) p1 *= static_cast<double>(lay.l[i]) / (lay.dc[i] * lay.k[i]);
    first += p1;
  }
  return 2.0 * first + 2.0 * decoupling_raw_bound_minentropy(s, spec, reference, sigma);
}

double decoupling_bound_conjectured(const LabeledState& s, const InstrumentSpec& spec,
                                    const Labels& reference) {
  validate_spec(s, spec, reference);
  const unsigned m = static_cast<unsigned>(spec.senders.size());
  Layout lay = layout_of(s, spec, reference);
  double pref = 1.0;
  for (unsigned i = 0; i < m; ++i)
    pref *= static_cast<double>(lay.n[i]) * lay.l[i] / (lay.dc[i] * lay.k[i]);
  double acc = 0.0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double logK = 0.0, logL = 0.0;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        logK += log2d(lay.k[i]);
        logL += log2d(lay.l[i]);
      }
    Labels t = subset_labels(spec, mask);
    Labels order = t;
    order.insert(order.end(), reference.begin(), reference.end());
    Mat rho = ordered_reduced(s, order);
    double h = conditional_min_entropy(rho, s.dim_of(t)).hmin;
    acc += std::exp2(-(h + logK - logL));
  }
  return pref * std::sqrt(acc);
}

DecouplingResult simulate_random_instrument(const LabeledState& s, const InstrumentSpec& spec,
                                            const Labels& reference) {
  validate_spec(s, spec, reference);
  if (s.norm_mode() != NormMode::normalized) throw std::domain_error("input state must be normalized");
  if (spec.samples < 1) throw std::invalid_argument("samples must be positive");
  Layout lay = layout_of(s, spec, reference);
  if (lay.D > spec.dim_cap)
    throw std::invalid_argument("total simulated dimension " + std::to_string(lay.D) +
                                " exceeds the cap " + std::to_string(spec.dim_cap));
  const int m = static_cast<int>(spec.senders.size());
  Mat rho = arranged_state(s, spec, reference, lay);
  Mat psiR = reference.empty() ? Mat::Identity(1, 1) : ordered_reduced(s, reference);

  // Outcome enumeration: per sender, blocks 0..N_i-1 plus an optional remainder block N_i.
  std::vector<int> nblocks(m);
  for (int i = 0; i < m; ++i) nblocks[i] = lay.n[i] + (lay.rem[i] > 0 ? 1 : 0);
  int total_outcomes = 1;
  for (int b : nblocks) total_outcomes *= b;

  struct Outcome {
    std::vector<int> idx;
    bool remainder = false;
    int rank = 1;
  };
  std::vector<Outcome> outcomes(total_outcomes);
  for (int o = 0; o < total_outcomes; ++o) {
    std::vector<int> js(m);
    int rem = o;
    for (int i = m - 1; i >= 0; --i) {
      js[i] = rem % nblocks[i];
      rem /= nblocks[i];
    }
    // Row ranges of each block inside sender i's C_i K_i space.
    std::vector<std::vector<int>> rows(m);
    bool remainder = false;
    for (int i = 0; i < m; ++i) {
      int start = js[i] * lay.l[i];
      int len = js[i] < lay.n[i] ? lay.l[i] : lay.rem[i];
      if (js[i] >= lay.n[i]) remainder = true;
      for (int t = 0; t < len; ++t) rows[i].push_back(start + t);
    }
    std::vector<int> idx{0};
    for (int i = 0; i < m; ++i) {
      std::vector<int> next;
      for (int base : idx)
        for (int r : rows[i]) next.push_back(base * lay.dc[i] * lay.k[i] + r);
      idx.swap(next);
    }
    std::vector<int> full;
    for (int base : idx)
      for (int r = 0; r < lay.dR; ++r) full.push_back(base * lay.dR + r);
    outcomes[o].idx = full;
    outcomes[o].remainder = remainder;
    outcomes[o].rank = static_cast<int>(idx.size());
  }

  double prefactor = 1.0;  // 1 / (d_C K)
  for (int i = 0; i < m; ++i) prefactor /= lay.dc[i] * lay.k[i];

  struct SampleOut {
    double q = 0, raw = 0, rem_mass = 0, prob_err = 0;
  };
  auto run = [&](std::size_t sample) {
    Rng rng = make_rng(spec.seed, sample);
    std::vector<Mat> us;
    for (int i = 0; i < m; ++i) us.push_back(haar_unitary(lay.dc[i] * lay.k[i], rng));
    us.push_back(Mat::Identity(lay.dR, lay.dR));
    Mat w = kron_all(us);
    Mat rp = w * rho * w.adjoint();
    SampleOut out;
    double ptotal = 0.0;
    for (const auto& oc : outcomes) {
      const int n = static_cast<int>(oc.idx.size());
      Mat om(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) om(a, b) = rp(oc.idx[a], oc.idx[b]);
      double p = om.trace().real();
      ptotal += p;
      if (oc.remainder) {
        out.q += 2.0 * p;
        out.rem_mass += p;
        continue;
      }
      Mat tau_psi = kron(Mat::Identity(oc.rank, oc.rank), psiR);
      out.raw += trace_norm(om - prefactor * tau_psi);
      if (p < 1e-14) continue;
      out.q += trace_norm(om - (p / oc.rank) * tau_psi);
    }
    out.prob_err = std::abs(ptotal - 1.0);
    return out;
  };
  auto per = parallel_map<SampleOut>(static_cast<std::size_t>(spec.samples), run);

  DecouplingResult res;
  res.samples = spec.samples;
  res.outcomes = total_outcomes;
  double sq = 0, sq2 = 0, sr = 0, sr2 = 0, rm = 0;
  for (const auto& o : per) {
    sq += o.q;
    sq2 += o.q * o.q;
    sr += o.raw;
    sr2 += o.raw * o.raw;
    rm += o.rem_mass;
    res.max_prob_error = std::max(res.max_prob_error, o.prob_err);
  }
  const double ns = spec.samples;
  res.empirical_Q = sq / ns;
  res.empirical_raw = sr / ns;
  res.remainder_mass = rm / ns;
  if (spec.samples > 1) {
    res.stderr_Q = std::sqrt(std::max(0.0, (sq2 / ns - res.empirical_Q * res.empirical_Q)) * ns / (ns - 1) / ns);
    res.stderr_raw = std::sqrt(std::max(0.0, (sr2 / ns - res.empirical_raw * res.empirical_raw)) * ns / (ns - 1) / ns);
  }
  res.analytic_bound = decoupling_bound_purity(s, spec, reference);
  res.vacuous = res.analytic_bound >= 2.0;
  try {
    res.raw_bound = decoupling_raw_bound_minentropy(s, spec, reference, psiR);
    res.minentropy_bound = decoupling_bound_minentropy(s, spec, reference, psiR);
  } catch (const SupportViolation&) {
  }
  return res;
}

SplitTransferResult split_transfer_errors(const LabeledState& s, const InstrumentSpec& spec_T,
                                          const InstrumentSpec& spec_Tbar, const Labels& A,
                                          const Labels& B) {
  std::set<std::string> t, tb;
  for (const auto& snd : spec_T.senders) t.insert(snd.systems.begin(), snd.systems.end());
  for (const auto& snd : spec_Tbar.senders) tb.insert(snd.systems.begin(), snd.systems.end());
  for (const auto& l : t)
    if (tb.count(l)) throw std::invalid_argument("T and Tbar overlap on " + l);
  std::set<std::string> ab(A.begin(), A.end());
  ab.insert(B.begin(), B.end());
  for (const auto& l : ab)
    if (t.count(l) || tb.count(l)) throw std::invalid_argument("receiver label assigned to a sender: " + l);
  Labels rest;
  for (const auto& l : s.labels())
    if (!t.count(l) && !tb.count(l) && !ab.count(l)) rest.push_back(l);
  auto build_ref = [&](const std::set<std::string>& other, const Labels& side) {
    Labels ref;
    for (const auto& l : s.labels())
      if (other.count(l)) ref.push_back(l);
    ref.insert(ref.end(), side.begin(), side.end());
    ref.insert(ref.end(), rest.begin(), rest.end());
    return ref;
  };
  SplitTransferResult out;
  if (!spec_T.senders.empty()) out.first = simulate_random_instrument(s, spec_T, build_ref(tb, B));
  if (!spec_Tbar.senders.empty()) out.second = simulate_random_instrument(s, spec_Tbar, build_ref(t, A));
  out.merging_error_surrogate =
      2.0 * std::sqrt(out.first.analytic_bound) + 2.0 * std::sqrt(out.second.analytic_bound);
  return out;
}

Rational twirl_r(int d, int L) {
  return Rational(static_cast<std::int64_t>(L) * (d - L),
                  static_cast<std::int64_t>(d) * (static_cast<std::int64_t>(d) * d - 1));
}

Rational twirl_s(int d, int L) {
  return Rational(static_cast<std::int64_t>(L) * (static_cast<std::int64_t>(L) * d - 1),
                  static_cast<std::int64_t>(d) * (static_cast<std::int64_t>(d) * d - 1));
}

TwirlReport twirl_average_check(int d, int L, int samples, std::uint64_t seed) {
  if (d < 2 || L < 1 || L > d) throw std::invalid_argument("twirl: need d >= 2 and 1 <= L <= d");
  if (samples < 1) throw std::invalid_argument("twirl: samples must be positive");
  TwirlReport rep;
  rep.d = d;
  rep.L = L;
  rep.samples = samples;
  rep.r = twirl_r(d, L);
  rep.s = twirl_s(d, L);
  const int n = d * d;
  Mat f1 = Mat::Zero(n, n);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) f1(i * d + j, j * d + i) = 1.0;
  Mat f = swap_operator(d);

  const std::size_t chunks = 64;
  auto part = parallel_map<Mat>(chunks, [&](std::size_t c) {
    Mat acc = Mat::Zero(n, n);
    for (std::size_t k = c; k < static_cast<std::size_t>(samples); k += chunks) {
      Rng rng = make_rng(seed, k);
      Mat u = haar_unitary(d, rng);
      Mat uu = kron(u, u);
      acc += uu.adjoint() * f1 * uu;
    }
    return acc;
  });
  Mat mean = Mat::Zero(n, n);
  for (const auto& p : part) mean += p;
  mean /= static_cast<double>(samples);
  double r = boost::rational_cast<double>(rep.r);
  double s = boost::rational_cast<double>(rep.s);
  Mat target = r * Mat::Identity(n, n) + s * f;
  rep.max_deviation = (mean - target).cwiseAbs().maxCoeff();
  Mat psym = (Mat::Identity(n, n) + f) * 0.5;
  Mat panti = (Mat::Identity(n, n) - f) * 0.5;
  rep.sym_trace_error = std::abs(psym.trace().real() - d * (d + 1) / 2.0);
  rep.swap_split_error = (f - (psym - panti)).cwiseAbs().maxCoeff();
  return rep;
}

double haar_single_average_deviation(const Mat& rho, int dA, int samples, std::uint64_t seed) {
  const int n = static_cast<int>(rho.rows());
  const int dR = n / dA;
  Mat rhoR = Mat::Zero(dR, dR);
  for (int a = 0; a < dA; ++a) rhoR += rho.block(a * dR, a * dR, dR, dR);
  Mat target = kron(maximally_mixed(dA), rhoR);
  const std::size_t chunks = 64;
  auto part = parallel_map<Mat>(chunks, [&](std::size_t c) {
    Mat acc = Mat::Zero(n, n);
    for (std::size_t k = c; k < static_cast<std::size_t>(samples); k += chunks) {
      Rng rng = make_rng(seed, k);
      Mat w = kron(haar_unitary(dA, rng), Mat::Identity(dR, dR));
      acc += w * rho * w.adjoint();
    }
    return acc;
  });
  Mat mean = Mat::Zero(n, n);
  for (const auto& p : part) mean += p;
  mean /= static_cast<double>(samples);
  return (mean - target).cwiseAbs().maxCoeff();
}

}  // namespace entlab
