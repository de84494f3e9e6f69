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

#include "entlab/regions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "entlab/entropy.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

std::vector<Party> singletons(const Labels& labels) {
  std::vector<Party> out;
  for (const auto& l : labels) out.push_back({l});
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::asymptotic_merge: return "asymptotic_merge";
    case RegionKind::split_transfer: return "split_transfer";
    case RegionKind::one_shot_cost: return "one_shot_cost";
    case RegionKind::sequential_cost: return "sequential_cost";
  }
  return "?";
}

std::string party_name(const Party& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "+";
    out += p[i];
  }
  return out;
}

Labels party_union(const std::vector<Party>& parties, unsigned mask) {
  Labels out;
  for (std::size_t i = 0; i < parties.size(); ++i)
    if (mask & (1u << i)) out.insert(out.end(), parties[i].begin(), parties[i].end());
  return out;
}

namespace {

Labels cat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Labels subset_names(const std::vector<Party>& parties, unsigned mask) {
  Labels out;
  for (std::size_t i = 0; i < parties.size(); ++i)
    if (mask & (1u << i)) out.push_back(party_name(parties[i]));
  return out;
}

void check_parties(const LabeledState& s, const std::vector<Party>& parties, const Labels& other,
                   std::size_t cap) {
  if (parties.size() > cap) throw std::invalid_argument("too many parties for subset enumeration");
  std::set<std::string> seen;
  for (const auto& p : parties) {
    if (p.empty()) throw std::invalid_argument("empty party");
    for (const auto& l : p) {
      s.index_of(l);
      if (!seen.insert(l).second) throw std::invalid_argument("label assigned twice: " + l);
    }
  }
  for (const auto& l : other) {
    s.index_of(l);
    if (seen.count(l)) throw std::invalid_argument("label overlaps a party: " + l);
  }
}

std::vector<std::string> names_of(const std::vector<Party>& parties) {
  std::vector<std::string> out;
  for (const auto& p : parties) out.push_back(party_name(p));
  return out;
}

}  // namespace

RegionSpec merging_rate_region(const LabeledState& s, const std::vector<Party>& senders,
                               const Labels& receiver_side) {
  check_parties(s, senders, receiver_side, 16);
  const unsigned m = static_cast<unsigned>(senders.size());
  const unsigned full = (1u << m) - 1;
  RegionSpec r;
  r.kind = RegionKind::asymptotic_merge;
  r.parties = names_of(senders);
  double s_all = von_neumann(s, cat(party_union(senders, full), receiver_side));
  auto rhs = parallel_map<double>(full, [&](std::size_t k) {
    unsigned mask = static_cast<unsigned>(k + 1);
    return s_all - von_neumann(s, cat(party_union(senders, full & ~mask), receiver_side));
  });
  for (unsigned mask = 1; mask <= full; ++mask)
    r.constraints.push_back({mask, subset_names(senders, mask), rhs[mask - 1]});
  return r;
}

double merging_rhs_via_purification(const LabeledState& s, const std::vector<Party>& senders,
                                    const Labels& receiver_side, unsigned mask) {
  const unsigned m = static_cast<unsigned>(senders.size());
  const unsigned full = (1u << m) - 1;
  LabeledState pure = s.is_pure() ? s : purify(s, "__ref");
  Labels inside = cat(party_union(senders, full), receiver_side);
  Labels ref = complement(pure, inside);
  double s_ref = von_neumann(pure, ref);
  return s_ref - von_neumann(pure, cat(party_union(senders, full & ~mask), receiver_side));
}

std::pair<RegionSpec, RegionSpec> split_transfer_region(const LabeledState& s,
                                                        const std::vector<Party>& T,
                                                        const std::vector<Party>& Tbar,
                                                        const Labels& A, const Labels& B) {
  std::vector<Party> all = T;
  all.insert(all.end(), Tbar.begin(), Tbar.end());
  check_parties(s, all, cat(A, B), 32);
  auto side = [&](const std::vector<Party>& group, const Labels& receiver) {
    RegionSpec r;
    r.kind = RegionKind::split_transfer;
    r.parties = names_of(group);
    const unsigned m = static_cast<unsigned>(group.size());
    if (m == 0) return r;
    if (m > 16) throw std::invalid_argument("split_transfer_region: too many parties");
    const unsigned full = (1u << m) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
      Labels x = party_union(group, mask);
      Labels xbar_a = cat(party_union(group, full & ~mask), receiver);
      r.constraints.push_back({mask, subset_names(group, mask), conditional_entropy(s, x, xbar_a)});
    }
    return r;
  };
  return {side(T, A), side(Tbar, B)};
}

double one_shot_constant(int m, const CostConstants& c) {
  if (!(c.eps > 0.0)) throw std::invalid_argument("eps must be positive");
  return 4.0 * std::log2(1.0 / c.eps) + (c.intro_form ? 12.0 : 2.0 * m + 8.0);
}

RegionSpec one_shot_cost_region(const LabeledState& s, const std::vector<Party>& senders,
                                const Labels& reference, const CostConstants& c) {
  check_parties(s, senders, reference, 12);
  const unsigned m = static_cast<unsigned>(senders.size());
  const unsigned full = (1u << m) - 1;
  RegionSpec r;
  r.kind = RegionKind::one_shot_cost;
  r.parties = names_of(senders);
  const double k = one_shot_constant(static_cast<int>(m), c);
  Mat psiR = reference.empty() ? Mat::Identity(1, 1) : reorder(partial_trace(s, reference), reference).matrix();
  auto rhs = parallel_map<double>(full, [&](std::size_t idx) {
    unsigned mask = static_cast<unsigned>(idx + 1);
    Labels t = party_union(senders, mask);
    double h = reference.empty() ? min_entropy(reduced_matrix(s, t))
                                 : min_entropy_of_marginal(s, t, reference, psiR);
    return -h + k;
  });
  for (unsigned mask = 1; mask <= full; ++mask)
    r.constraints.push_back({mask, subset_names(senders, mask), rhs[mask - 1]});
  return r;
}

double sequential_delta(int m, double eps) { return eps * eps / (52.0 * m * m); }

double sequential_constant(int m, double eps) {
  return 4.0 * std::log2(2.0 * m / eps) + 2.0 * std::log2(13.0);
}

double renes_plugin(double S_cond, double log_dim, double delta) {
  return S_cond + 8.0 * delta * log_dim + 2.0 * binary_entropy(2.0 * delta);
}

SequentialCost sequential_cost(const LabeledState& s, const std::vector<Party>& senders,
                               const Labels& reference, const std::vector<int>& ordering,
                               double eps) {
  check_parties(s, senders, reference, 12);
  const int m = static_cast<int>(senders.size());
  {
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i)
      if (static_cast<int>(sorted.size()) != m || sorted[i] != i)
        throw std::invalid_argument("ordering is not a permutation of the senders");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  SequentialCost out;
  out.lower_bounds.assign(m, 0.0);
  for (int k = 0; k < m; ++k) out.ordering.push_back(party_name(senders[ordering[k]]));
  const double delta = sequential_delta(m, eps);
  const double constant = sequential_constant(m, eps);
  for (int k = 0; k < m; ++k) {
    const Party& ci = senders[ordering[k]];
    Labels rt = reference;
    for (int j = k + 1; j < m; ++j) rt = cat(rt, senders[ordering[j]]);
    SequentialEntry e;
    e.sender = party_name(ci);
    e.relative_reference = rt;
    e.delta = delta;
    e.constant = constant;
    Mat sigma = rt.empty() ? Mat::Identity(1, 1) : reorder(partial_trace(s, rt), rt).matrix();
    e.hmin_relative = rt.empty() ? min_entropy(reduced_matrix(s, ci))
                                 : min_entropy_of_marginal(s, ci, rt, sigma);
    const int dci = s.dim_of(ci);
    const int drt = rt.empty() ? 1 : s.dim_of(rt);
    if (drt <= 16 && dci * drt <= 512) {
      Labels order = cat(ci, rt);
      Mat rho = reorder(partial_trace(s, order), order).matrix();
      e.hmin_conditional = conditional_min_entropy(rho, dci).hmin;
      e.cost_bound_unsmoothed = -*e.hmin_conditional + constant;
    }
    e.S_cond = conditional_entropy(s, ci, rt);
    e.renes_upper = renes_plugin(e.S_cond, std::log2(static_cast<double>(dci)), delta);
    e.cost_bound_renes = -e.renes_upper + constant;
    e.cost_bound = e.cost_bound_renes;
    // Look for X within Rt with psi^{C_i X} pure: then H^d_min(C_i|Rt) <= -H^d_max(C_i).
    if (rt.size() <= 12) {
      const unsigned nr = static_cast<unsigned>(rt.size());
      for (unsigned mask = 0; mask < (1u << nr); ++mask) {
        Labels x = ci;
        for (unsigned j = 0; j < nr; ++j)
          if (mask & (1u << j)) x.push_back(rt[j]);
        if (s.dim_of(x) > 4096) continue;
        double p = [&] {
          LabeledState r = partial_trace(s, x);
          return r.is_pure() ? 1.0 : 0.0;
        }();
        if (p == 1.0) {
          double hmax_lb = smooth_max_lower_bound(marginal_spectrum(s, ci), delta);
          e.cost_bound_truncation = hmax_lb + constant;
          e.cost_bound = std::max(e.cost_bound, *e.cost_bound_truncation);
          break;
        }
      }
    }
    out.lower_bounds[ordering[k]] = e.cost_bound;
    out.entries.push_back(e);
  }
  return out;
}

bool cut_precedes(unsigned a, unsigned b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on the increasing index lists.
  for (int i = 0; i < 32; ++i) {
    bool ia = a & (1u << i), ib = b & (1u << i);
    if (ia != ib) return ia;
  }
  return false;
}

MinCut min_cut_entanglement(const LabeledState& s, const Labels& A, const Labels& B,
                            const std::vector<Party>& helpers) {
  check_parties(s, helpers, cat(A, B), 20);
  const unsigned m = static_cast<unsigned>(helpers.size());
  auto vals = parallel_map<double>(1u << m, [&](std::size_t mask) {
    return von_neumann(s, cat(A, party_union(helpers, static_cast<unsigned>(mask))));
  });
  MinCut best;
  best.value = vals[0];
  best.mask = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double v = vals[mask];
    if (v < best.value - 1e-12 || (std::abs(v - best.value) <= 1e-12 && cut_precedes(mask, best.mask))) {
      best.value = std::min(best.value, v);
      best.mask = mask;
    }
  }
  best.argmin = subset_names(helpers, best.mask);
  best.values = std::move(vals);
  return best;
}

MembershipResult region_membership(const RegionSpec& region, const CostVector& point, double tol) {
  if (point.size() != region.parties.size())
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " entries, region has " +
                                std::to_string(region.parties.size()) + " parties");
  MembershipResult res;
  for (const auto& c : region.constraints) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (c.mask & (1u << i)) lhs += point[i];
    double slack = lhs - c.rhs;
    if (slack < -tol) res.violated.push_back(c.mask);
    else if (slack <= tol) res.tight.push_back(c.mask);
  }
  if (!res.violated.empty()) res.verdict = Membership::outside;
  else if (!res.tight.empty()) res.verdict = Membership::boundary;
  else res.verdict = Membership::inside;
  return res;
}

}  // namespace entlab
