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

#include "entlab/protocols.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

namespace {

const char* kBellNames[4] = {"Phi+", "Psi+", "Phi-", "Psi-"};

Vec bell_vector(int code) {
  const double r = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(4);
  switch (code) {
    case 0: v(0) = r; v(3) = r; break;
    case 1: v(1) = r; v(2) = r; break;
    case 2: v(0) = r; v(3) = -r; break;
    default: v(1) = r; v(2) = -r; break;
  }
  return v;
}

void check_lambdas(double l1, double l2) {
  if (!(l1 >= l2 && l2 >= 0 && std::abs(l1 + l2 - 1.0) <= 1e-12))
    throw std::invalid_argument("need lambda1 >= lambda2 >= 0 and lambda1 + lambda2 = 1");
}

}  // namespace

std::vector<std::uint64_t> BellString::bits() const {
  std::vector<std::uint64_t> out((2 * codes.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    std::size_t hi = 2 * i, lo = 2 * i + 1;
    if (codes[i] & 2) out[hi / 64] |= std::uint64_t{1} << (hi % 64);
    if (codes[i] & 1) out[lo / 64] |= std::uint64_t{1} << (lo % 64);
  }
  return out;
}

std::string bell_code_name(int code) {
  if (code < 0 || code > 3) throw std::invalid_argument("Bell code out of range");
  return kBellNames[code];
}

int bell_code_of(const std::string& name) {
  for (int c = 0; c < 4; ++c)
    if (name == kBellNames[c]) return c;
  throw std::invalid_argument("unknown Bell state " + name);
}

SwapRational entanglement_swap_rational(Rational l1, Rational l2) {
  if (!(l1 >= l2 && l2 >= Rational(0) && l1 + l2 == Rational(1)))
    throw std::invalid_argument("need lambda1 >= lambda2 >= 0 and lambda1 + lambda2 = 1");
  SwapRational out;
  Rational sq = l1 * l1 + l2 * l2;
  Rational filt = Rational(2) * l2 * l2 / sq;
  for (int code = 0; code < 4; ++code) {
    SwapBranchRational b;
    b.label = std::string(code & 2 ? "1" : "0") + (code & 1 ? "1" : "0");
    bool psi = code & 1;
    b.probability = psi ? l1 * l2 : sq / Rational(2);
    b.singlet_given_outcome = psi ? Rational(1) : filt;
    out.scp += b.probability * b.singlet_given_outcome;
    out.branches.push_back(b);
  }
  return out;
}

ProtocolTrace entanglement_swap(double l1, double l2) {
  check_lambdas(l1, l2);
  // Systems A, C1, C2, B.
  auto left = states::schmidt_pair({l1, l2}, "A", "C1");
  auto right = states::schmidt_pair({l1, l2}, "C2", "B");
  auto full = tensor(left, right);
  const Vec& v = full.vector();
  Vec singlet = bell_vector(3);
  Mat Z = Mat::Zero(2, 2), X = Mat::Zero(2, 2);
  Z(0, 0) = 1; Z(1, 1) = -1;
  X(0, 1) = 1; X(1, 0) = 1;
  Mat corrections[4] = {X * Z, Z, X, Mat::Identity(2, 2)};

  ProtocolTrace trace;
  double scp = 0.0, total = 0.0;
  for (int code = 0; code < 4; ++code) {
    Vec bell = bell_vector(code);
    // <bell|_{C1C2} applied to |v>; index (a, c1, c2, b).
    Vec ab = Vec::Zero(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 4; ++c) ab(a * 2 + b) += std::conj(bell(c)) * v(a * 8 + c * 2 + b);
    double p = ab.squaredNorm();
    total += p;
    TraceOutcome o;
    o.label = std::string(code & 2 ? "1" : "0") + (code & 1 ? "1" : "0");
    o.register_value = bell_code_name(code);
    o.probability = p;
    if (p < 1e-15) {
      trace.outcomes.push_back(o);
      continue;
    }
    Vec post = ab / std::sqrt(p);
    o.post_state = LabeledState::from_vector({{"A", 2}, {"B", 2}}, post);
    double success = 1.0;
    Vec filtered = post;
    if (!(code & 1)) {
      // Procrustean filter M0 on B.
      Mat M0 = Mat::Zero(2, 2);
      M0(0, 0) = l1 > 0 ? l2 / l1 : 0.0;
      M0(1, 1) = 1.0;
      filtered = kron(Mat::Identity(2, 2), M0) * post;
      success = filtered.squaredNorm();
      o.stats["procrustean_success"] = success;
      if (success > 1e-15) filtered /= std::sqrt(success);
    }
    Vec corrected = kron(Mat::Identity(2, 2), corrections[code]) * filtered;
    o.stats["singlet_fidelity"] = success > 1e-15 ? std::norm(singlet.dot(corrected)) : 0.0;
    o.stats["singlet_probability"] = success;
    scp += p * success;
    trace.outcomes.push_back(o);
  }
  trace.aggregate["scp"] = scp;
  trace.aggregate["scp_optimal"] = 2.0 * l2;
  trace.aggregate["total_probability"] = total;
  return trace;
}

LabeledState bell_diagonal_state(const std::vector<double>& p) {
  if (p.size() != 4) throw std::invalid_argument("Bell-diagonal state needs 4 probabilities");
  Mat m = Mat::Zero(4, 4);
  for (int c = 0; c < 4; ++c) m += p[c] * ket_bra(bell_vector(c));
  return LabeledState::from_matrix({{"A", 2}, {"B", 2}}, m);
}

int masked_parity(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& mask) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < x.size(); ++w) acc ^= x[w] & mask[w];
  return std::popcount(acc) & 1;
}

namespace {

struct LetterSampler {
  std::uint64_t thresh[4];
  explicit LetterSampler(const std::vector<double>& p) {
    double cum = 0.0;
    for (int c = 0; c < 4; ++c) {
      cum += p[c];
      double t = std::ldexp(std::min(cum, 1.0), 32);
      thresh[c] = c == 3 || cum >= 1.0 ? (std::uint64_t{1} << 32) : static_cast<std::uint64_t>(t);
    }
  }
  int draw(std::uint64_t u32) const {
    for (int c = 0; c < 4; ++c)
      if (u32 < thresh[c]) return c;
    return 3;
  }
};

bool typical_counts(const int* counts, const std::vector<double>& p, int n, double delta) {
  for (int c = 0; c < 4; ++c) {
    if (p[c] == 0.0 && counts[c] != 0) return false;
    if (std::abs(static_cast<double>(counts[c]) / n - p[c]) > delta + 1e-12) return false;
  }
  return true;
}

// Draws n letters ~ p; returns the packed string and whether it is typical.
bool draw_string(Rng& rng, const LetterSampler& ls, const std::vector<double>& p, int n,
                 double delta, std::vector<std::uint64_t>& bits, std::vector<std::uint8_t>* codes) {
  std::fill(bits.begin(), bits.end(), 0);
  int counts[4] = {0, 0, 0, 0};
  if (codes) codes->resize(n);
  for (int i = 0; i < n; i += 2) {
    std::uint64_t r = rng();
    for (int h = 0; h < 2 && i + h < n; ++h) {
      int c = ls.draw(h == 0 ? (r >> 32) : (r & 0xFFFFFFFFULL));
      int idx = i + h;
      ++counts[c];
      if (codes) (*codes)[idx] = static_cast<std::uint8_t>(c);
      std::size_t hi = 2 * static_cast<std::size_t>(idx), lo = hi + 1;
      if (c & 2) bits[hi / 64] |= std::uint64_t{1} << (hi % 64);
      if (c & 1) bits[lo / 64] |= std::uint64_t{1} << (lo % 64);
    }
  }
  return typical_counts(counts, p, n, delta);
}

}  // namespace

HashingResult hashing_simulation(const std::vector<double>& p, int n, double delta, int trials,
                                 std::uint64_t seed, const HashingOptions& opt) {
  if (p.size() != 4) throw std::invalid_argument("hashing: need 4 Bell probabilities");
  double sum = 0.0;
  for (double x : p) {
    if (x < 0) throw std::invalid_argument("hashing: negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("hashing: probabilities must sum to 1");
  if (n < 1 || n > 5000) throw std::invalid_argument("hashing: need 1 <= n <= 5000");
  if (trials < 1) throw std::invalid_argument("hashing: need at least one trial");
  if (delta <= 0 || n * delta < 1.0)
    throw std::invalid_argument("hashing: n too small for delta (need n * delta >= 1)");

  HashingResult res;
  res.entropy = von_neumann(bell_diagonal_state(p).matrix());
  int support = 0;
  for (double x : p) support += x > 0;
  // A single-letter support leaves one typical string: nothing to hash.
  const bool singleton = support == 1;
  res.rounds = singleton ? 0 : static_cast<int>(std::ceil(n * (res.entropy + 2 * delta) - 1e-9));
  res.yield = static_cast<double>(n - res.rounds) / n;
  res.target_yield = 1.0 - res.entropy;
  res.infeasible = res.entropy >= 1.0 || res.rounds >= n;

  const std::size_t words = (2 * static_cast<std::size_t>(n) + 63) / 64;
  const std::uint64_t tail_mask =
      (2 * n) % 64 == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ((2 * n) % 64)) - 1);
  LetterSampler ls(p);

  res.trials = parallel_map<HashingTrial>(static_cast<std::size_t>(trials), [&](std::size_t t) {
    Rng rng = make_rng(seed, t);
    HashingTrial tr;
    std::vector<std::uint64_t> hidden(words);
    std::vector<std::uint8_t> codes;
    tr.hidden_typical = draw_string(rng, ls, p, n, delta, hidden, opt.record_replay ? &codes : nullptr);
    if (opt.record_replay) tr.hidden.codes = codes;
    std::vector<std::vector<std::uint64_t>> decoys;
    if (!singleton) {
      decoys.reserve(opt.decoys);
      std::vector<std::uint64_t> buf(words);
      long attempts = 0;
      while (static_cast<int>(decoys.size()) < opt.decoys) {
        if (++attempts > 100L * opt.decoys + 1000)
          throw std::runtime_error("hashing: typical decoy sampling did not converge");
        if (!draw_string(rng, ls, p, n, delta, buf, nullptr)) continue;
        if (buf == hidden) continue;
        decoys.push_back(buf);
      }
    }
    std::vector<std::uint64_t> mask(words);
    std::vector<std::size_t> alive(decoys.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    if (alive.empty()) tr.rounds_to_unique = 0;
    for (int r = 0; r < res.rounds; ++r) {
      for (auto& w : mask) w = rng();
      mask.back() &= tail_mask;
      int par = masked_parity(hidden, mask);
      if (opt.record_replay) {
        tr.masks.push_back(mask);
        tr.parities.push_back(static_cast<std::uint8_t>(par));
      }
      if (!alive.empty()) {
        std::size_t keep = 0;
        for (std::size_t i : alive)
          if (masked_parity(decoys[i], mask) == par) alive[keep++] = i;
        alive.resize(keep);
        if (alive.empty()) tr.rounds_to_unique = r + 1;
      }
    }
    tr.surviving_decoys = static_cast<int>(alive.size());
    tr.success = tr.hidden_typical && alive.empty();
    return tr;
  });

  int successes = 0, empty = 0;
  for (std::size_t t = 0; t < res.trials.size(); ++t) {
    const auto& tr = res.trials[t];
    successes += tr.success;
    empty += !tr.hidden_typical;
    TraceOutcome o;
    o.label = "trial " + std::to_string(t);
    o.probability = 1.0 / trials;
    o.register_value = !tr.hidden_typical ? "empty_candidate" : (tr.success ? "success" : "collision");
    o.stats["surviving_decoys"] = tr.surviving_decoys;
    o.stats["rounds_to_unique"] = tr.rounds_to_unique;
    res.trace.outcomes.push_back(o);
  }
  res.success_frequency = static_cast<double>(successes) / trials;
  res.empty_candidate_frequency = static_cast<double>(empty) / trials;
  auto& ag = res.trace.aggregate;
  ag["entropy"] = res.entropy;
  ag["rounds"] = res.rounds;
  ag["success_frequency"] = res.success_frequency;
  ag["empty_candidate_frequency"] = res.empty_candidate_frequency;
  ag["collision_frequency"] = 1.0 - res.success_frequency - res.empty_candidate_frequency;
  ag["yield"] = res.yield;
  ag["target_yield"] = res.target_yield;
  ag["decoys"] = singleton ? 0 : opt.decoys;
  res.trace.flags["infeasible"] = res.infeasible ? "true" : "false";
  return res;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > 64) throw std::invalid_argument("binomial_u64: need 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(c);
}

ProtocolTrace schmidt_projection(double theta, int n) {
  if (!(theta > 0 && theta < std::numbers::pi / 2))
    throw std::invalid_argument("schmidt_projection: theta must lie in (0, pi/2)");
  if (n < 1 || n > 64) throw std::invalid_argument("schmidt_projection: need 1 <= n <= 64");
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  ProtocolTrace trace;
  double total = 0.0, expected = 0.0, hp = 0.0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t rank = binomial_u64(n, k);
    double logc = std::log2(static_cast<double>(rank));
    double logp = logc + (n - k) * std::log2(c2) + k * std::log2(s2);
    double pk = std::exp2(logp);
    TraceOutcome o;
    o.label = "k=" + std::to_string(k);
    o.probability = pk;
    o.register_value = std::to_string(rank);
    o.stats["rank"] = static_cast<double>(rank);
    o.stats["log_rank"] = logc;
    trace.outcomes.push_back(o);
    total += pk;
    expected += pk * logc;
    if (pk > 0) hp -= pk * std::log2(pk);
  }
  double nE = n * binary_entropy(c2);
  auto& ag = trace.aggregate;
  ag["total_probability"] = total;
  ag["expected_entanglement"] = expected;
  ag["n_entropy"] = nE;
  ag["outcome_entropy"] = hp;
  ag["gap"] = nE - expected;
  bool sandwich = expected <= nE + 1e-9 && nE <= hp + expected + 1e-9;
  trace.flags["sandwich"] = sandwich ? "true" : "false";
  return trace;
}

}  // namespace entlab
