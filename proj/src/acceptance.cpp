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

#include "entlab/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "entlab/assisted.hpp"
#include "entlab/decoupling.hpp"
#include "entlab/entropy.hpp"
#include "entlab/examples.hpp"
#include "entlab/linalg.hpp"
#include "entlab/parallel.hpp"
#include "entlab/protocols.hpp"
#include "entlab/qcore.hpp"
#include "entlab/regions.hpp"
#include "entlab/typicality.hpp"

namespace entlab {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string rat(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Records lhs <= rhs + tol checks for one suite.
class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { s_.name = std::move(name); }
  void le(double lhs, double rhs, double tol) {
    double excess = lhs - rhs;
    if (!(excess <= tol)) {  // NaN counts as a violation
      ++bad_;
      s_.worst_excess = std::max(s_.worst_excess, std::isnan(excess) ? INFINITY : excess);
    }
  }
  void near(double a, double b, double tol) { le(std::abs(a - b), 0.0, tol); }
  void truth(bool ok) {
    if (!ok) ++bad_;
  }
  // Call once per instance; an instance with any failed check is a violation.
  void end_instance() {
    ++s_.instances;
    if (bad_ > 0) ++s_.violations;
    bad_ = 0;
  }
  PropertySuite result() const { return s_; }

 private:
  PropertySuite s_;
  int bad_ = 0;
};

std::vector<System> random_systems(Rng& rng, int count, int dmin, int dmax, const std::string& prefix) {
  std::uniform_int_distribution<int> dd(dmin, dmax);
  std::vector<System> sys;
  for (int i = 0; i < count; ++i) sys.push_back({prefix + std::to_string(i), dd(rng)});
  return sys;
}

LabeledState random_state(Rng& rng, std::vector<System> sys, bool allow_pure = true) {
  std::uniform_int_distribution<int> env(allow_pure ? 1 : 2, 6);
  return random_mixed_state(std::move(sys), env(rng), rng);
}

Mat random_density(int d, Rng& rng) {
  return random_mixed_state({{"X", d}}, d, rng).matrix();
}

Mat random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cplx(g(rng), g(rng));
  return (m + m.adjoint()) / 2.0;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

using SuiteFn = std::function<PropertySuite(std::uint64_t, int)>;

PropertySuite suite_state_invariants(std::uint64_t seed, int n) {
  SuiteRecorder rec("labeled-state invariants");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    auto s = random_state(rng, random_systems(rng, 3, 2, 3, "S"));
    const Mat& m = s.matrix();
    rec.le(max_antihermitian(m), 0.0, 1e-10);
    rec.le(-lambda_min(m), 0.0, 1e-10);
    rec.near(m.trace().real(), 1.0, 1e-10);
    for (const auto& l : s.labels()) rec.near(partial_trace(s, {l}).trace(), 1.0, 1e-10);
    auto p = purify(s, "P");
    rec.truth(p.is_pure());
    rec.le(max_abs(reduced_matrix(p, s.labels()) - m), 0.0, 1e-10);
    Labels rev = s.labels();
    std::reverse(rev.begin(), rev.end());
    rec.le(max_abs(reorder(reorder(s, rev), s.labels()).matrix() - m), 0.0, 1e-14);
    // Schmidt symmetry on the purification.
    auto a = marginal_spectrum(p, {"P"});
    auto b = marginal_spectrum(p, s.labels());
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
      rec.near(k < a.size() ? a[k] : 0.0, k < b.size() ? b[k] : 0.0, 1e-9);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_subadditivity(std::uint64_t seed, int n) {
  SuiteRecorder rec("subadditivity");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    auto s = random_state(rng, random_systems(rng, 3, 2, 3, "S"));
    auto L = s.labels();
    for (unsigned mask = 1; mask < 7; ++mask) {
      Labels x, y;
      for (int k = 0; k < 3; ++k) (mask & (1u << k) ? x : y).push_back(L[k]);
      Labels xy = L;
      double sxy = von_neumann(s, xy), sx = von_neumann(s, x), sy = von_neumann(s, y);
      rec.le(sxy, sx + sy, 1e-9);
      rec.le(std::abs(sx - sy), sxy, 1e-9);  // Araki-Lieb
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        rec.le(von_neumann(s, {L[a], L[b]}), von_neumann(s, {L[a]}) + von_neumann(s, {L[b]}), 1e-9);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_ssa_vn(std::uint64_t seed, int n) {
  SuiteRecorder rec("strong subadditivity (von Neumann)");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    auto s = random_state(rng, random_systems(rng, 3, 2, 3, "S"));
    auto L = s.labels();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        int c = 3 - a - b;
        rec.le(coherent_information(s, {L[a]}, {L[b]}),
               coherent_information(s, {L[a]}, {L[b], L[c]}), 1e-9);
      }
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_ssa_hmin(std::uint64_t seed, int n) {
  SuiteRecorder rec("strong subadditivity (min-entropy)");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<int> dd(1, 3);
    int d1 = dd(rng) + 1, d2 = dd(rng) + 1;
    int dr = std::uniform_int_distribution<int>(2, d1 * d2)(rng);
    auto s = random_pure_state({{"T1", d1}, {"T2", d2}, {"R", dr}}, rng);
    Mat sigma = reduced_matrix(s, {"R"});
    for (Labels T : {Labels{"T1"}, Labels{"T2"}, Labels{"T1", "T2"}}) {
      double cond = min_entropy_of_marginal(s, T, {"R"}, sigma);
      rec.le(cond, min_entropy(reduced_matrix(s, T)), 1e-9);
    }
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_hmin_h2(std::uint64_t seed, int n) {
  SuiteRecorder rec("H_min <= H_2");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<int> dd(2, 3);
    int da = dd(rng), db = dd(rng);
    auto s = random_state(rng, {{"A", da}, {"B", db}}, false);
    Mat sigma = (i % 2 == 0) ? reduced_matrix(s, {"B"}) : random_density(db, rng);
    rec.le(min_entropy_relative(s.matrix(), da, sigma), collision_entropy(s.matrix(), da, sigma), 1e-9);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_additivity(std::uint64_t seed, int n) {
  SuiteRecorder rec("min-entropy additivity");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<int> dd(2, 3);
    int da = dd(rng), db = dd(rng), da2 = 2, db2 = dd(rng);
    auto r1 = random_state(rng, {{"A", da}, {"B", db}}, false);
    auto r2 = random_state(rng, {{"A2", da2}, {"B2", db2}}, false);
    Mat s1 = random_density(db, rng), s2 = random_density(db2, rng);
    auto joint = reorder(tensor(r1, r2), {"A", "A2", "B", "B2"});
    double lhs = min_entropy_relative(joint.matrix(), da * da2, kron(s1, s2));
    double rhs = min_entropy_relative(r1.matrix(), da, s1) + min_entropy_relative(r2.matrix(), da2, s2);
    rec.near(lhs, rhs, 1e-8);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_distances(std::uint64_t seed, int n) {
  SuiteRecorder rec("Fuchs-van de Graaf and purified-distance sandwiches");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    int d = std::uniform_int_distribution<int>(2, 6)(rng);
    Mat a = random_density(d, rng), b = random_density(d, rng);
    if (i % 3 == 0) b = 0.7 * a + 0.3 * b;  // close pairs too
    auto r = distances(a, b);
    rec.le(1.0 - r.fidelity, r.trace_distance, 1e-9);
    rec.le(r.trace_distance, std::sqrt(std::max(0.0, 1.0 - r.fidelity * r.fidelity)), 1e-9);
    std::uniform_real_distribution<double> t(0.5, 1.0);
    Mat as = t(rng) * a, bs = t(rng) * b;
    auto q = distances(as, bs);
    rec.le(q.trace_distance, q.purified_distance, 1e-9);
    rec.le(q.purified_distance, 2.0 * std::sqrt(q.trace_distance), 1e-9);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_swap_trick(std::uint64_t seed, int n) {
  SuiteRecorder rec("swap-trick purity");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    int d = std::uniform_int_distribution<int>(2, 6)(rng);
    Mat rho = random_density(d, rng);
    rec.near(purity_swap_trick(rho), (rho * rho).trace().real(), 1e-10);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_norms(std::uint64_t seed, int n) {
  SuiteRecorder rec("norm inequalities");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    int d = std::uniform_int_distribution<int>(2, 6)(rng);
    int k = std::uniform_int_distribution<int>(1, d)(rng);
    // Hermitian X of support dimension k.
    Mat U = haar_unitary(d, rng);
    RVec ev = RVec::Zero(d);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int j = 0; j < k; ++j) ev(j) = g(rng);
    Mat X = U * ev.cast<cplx>().asDiagonal() * U.adjoint();
    double t1 = trace_norm(X), t2 = hs_norm(X);
    rec.le(t1 * t1, k * t2 * t2, 1e-9 * (1 + k * t2 * t2));
    Mat Y = random_hermitian(d, rng);
    Mat sigma = random_density(d, rng) * std::uniform_real_distribution<double>(0.2, 3.0)(rng);
    Mat q = psd_power_on_support(sigma, -0.25);
    double rhs = std::sqrt(sigma.trace().real()) * hs_norm(q * Y * q);
    rec.le(trace_norm(Y), rhs, 1e-9 * (1 + rhs));
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_gentle(std::uint64_t seed, int n) {
  SuiteRecorder rec("gentle measurement");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    int d = std::uniform_int_distribution<int>(2, 6)(rng);
    Mat rho = random_density(d, rng);
    if (i % 2 == 1) rho *= std::uniform_real_distribution<double>(0.6, 1.0)(rng);
    Mat U = haar_unitary(d, rng);
    RVec u(d);
    std::uniform_real_distribution<double> lo(0.0, 1.0), hi(0.8, 1.0);
    for (int j = 0; j < d; ++j) u(j) = (i % 3 == 0) ? (lo(rng) < 0.7 ? 1.0 : 0.0) : hi(rng);
    Mat X = U * u.cast<cplx>().asDiagonal() * U.adjoint();
    auto g = gentle_measurement_check(rho, X);
    rec.le(g.distance, g.bound, 1e-9);
    rec.end_instance();
  }
  return rec.result();
}

PropertySuite suite_typical(std::uint64_t seed, int n) {
  SuiteRecorder rec("typical-projector sandwiches");
  for (int i = 0; i < n; ++i) {
    Rng rng = make_rng(seed, i);
    int d = (i % 2 == 0) ? 2 : 3;
    int nmax = d == 2 ? 12 : 7;
    int len = std::uniform_int_distribution<int>(3, nmax)(rng);
    double delta = std::uniform_real_distribution<double>(0.05, 0.3)(rng);
    auto s = LabeledState::from_matrix({{"A", d}}, random_density(d, rng));
    auto r = typical_projector_checks(s, len, delta);
    rec.truth(r.all_hold());
    auto ev = hermitian_eigenvalues(s.matrix());
    std::vector<double> p(ev.data(), ev.data() + ev.size());
    double tot = 0;
    for (double& x : p) tot += (x = std::max(0.0, x));
    for (double& x : p) x /= tot;
    auto ts = typical_set(p, len, delta);
    rec.truth(ts.prob_bounds_hold && ts.card_upper_holds && ts.card_lower_holds);
    rec.near(ts.cardinality, r.rank, 0.5);
    rec.end_instance();
  }
  return rec.result();
}

// ---- criteria ----

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[FAILED: " << what << "] ";
    }
  }
};

void criterion_twirl(Outcome& o, std::uint64_t seed, double& seconds_limit) {
  seconds_limit = 30;
  const int cases[3][2] = {{2, 1}, {4, 2}, {4, 3}};
  for (auto& c : cases) {
    int d = c[0], L = c[1];
    auto rep = twirl_average_check(d, L, 20000, seed);
    // r = L(d-L)/(d(d^2-1)), s = L(Ld-1)/(d(d^2-1)).
    Rational den(static_cast<std::int64_t>(d) * (d * d - 1));
    Rational r_exp = Rational(L * (d - L)) / den, s_exp = Rational(L * (L * d - 1)) / den;
    o.detail << "(d=" << d << ",L=" << L << ") r=" << rat(rep.r) << " s=" << rat(rep.s)
             << " dev=" << num(rep.max_deviation) << "; ";
    o.require(rep.r == r_exp && rep.s == s_exp, "rational coefficients");
    o.require(rep.max_deviation <= 5e-3, "Monte Carlo deviation at d=" + std::to_string(d));
  }
}

void criterion_decoupling(Outcome& o, std::uint64_t seed, double& seconds_limit) {
  seconds_limit = 120;
  {
    auto s = states::two_sender_example();
    InstrumentSpec spec;
    spec.senders = {{{"C1"}, 1, 1}, {{"C2"}, 2, 1}};
    spec.seed = seed;
    spec.samples = 200;
    auto r = simulate_random_instrument(s, spec, {"R"});
    o.detail << "two-sender Q=" << num(r.empirical_Q) << "+-" << num(r.stderr_Q)
             << " Delta=" << num(r.analytic_bound) << (r.vacuous ? " (vacuous)" : "") << "; ";
    o.require(r.samples >= 200, "sample count");
    o.require(r.empirical_Q + 2 * r.stderr_Q <= r.analytic_bound, "two-sender bound");
  }
  {
    auto s = states::example_ch5();
    InstrumentSpec spec;
    spec.senders = {{{"C1", "C2"}, 1, 1}};
    spec.seed = seed + 1;
    spec.samples = 200;
    auto r = simulate_random_instrument(s, spec, {"A", "R"});
    o.detail << "m=1 Q=" << num(r.empirical_Q) << "+-" << num(r.stderr_Q)
             << " Delta=" << num(r.analytic_bound) << (r.vacuous ? " (vacuous)" : "") << "; ";
    o.require(r.empirical_Q + 2 * r.stderr_Q <= r.analytic_bound, "m=1 bound");
  }
}

void criterion_entropy(Outcome& o, std::uint64_t seed, double&) {
  const std::vector<double> theta = {0.7, 0.3};
  double worst = 0.0;
  for (int d : {2, 4, 8}) {
    auto s = states::example_three_sender(d, theta);
    Mat sigma = reduced_matrix(s, {"R"});
    double L = std::log2(d);
    double h1 = min_entropy_of_marginal(s, {"C1"}, {"R"}, sigma);
    double h2 = min_entropy_of_marginal(s, {"C2"}, {"R"}, sigma);
    double h12 = min_entropy_of_marginal(s, {"C1", "C2"}, {"R"}, sigma);
    worst = std::max({worst, std::abs(h1 - L), std::abs(h2 - (L - std::log2(theta[0]))),
                      std::abs(h12 + std::log2(theta[0]))});
  }
  o.detail << "three-sender max error " << num(worst) << "; ";
  o.require(worst <= 1e-6, "three-sender identities");
  Rng rng = make_rng(seed, 3);
  auto inst = overlap_instance(4, 3, rng);
  auto cq = partial_trace(inst.state, {"C2", "R"});
  auto cone = conditional_min_entropy(cq, {"R"});
  double rel = min_entropy_of_marginal(inst.state, {"C2"}, {"R"}, reduced_matrix(inst.state, {"R"}));
  o.detail << "cq H_min(C2|R): cone=" << num(cone.hmin) << " relative=" << num(rel);
  o.require(std::abs(cone.hmin) <= 1e-6 && std::abs(rel) <= 1e-6, "classical-quantum case");
}

void criterion_assisted_example(Outcome& o, std::uint64_t, double&) {
  auto s = states::example_ch5();
  double iacb = coherent_information(s, {"A", "C1", "C2"}, {"B"});
  double iabc = coherent_information(s, {"A"}, {"B", "C1", "C2"});
  double iab = coherent_information(s, {"A"}, {"B"});
  double sr = von_neumann(s, {"R"});
  o.detail << "I(AC>B)=" << num(iacb) << " I(A>BC)=" << num(iabc) << " I(A>B)=" << num(iab)
           << " S(R)=" << num(sr) << "; ";
  o.require(std::abs(iacb - 0.399) <= 0.005, "I(AC>B)");
  o.require(std::abs(iabc - 0.811) <= 0.005, "I(A>BC)");
  o.require(iab < 0, "I(A>B) < 0");
  o.require(std::abs(sr - 0.601) <= 0.002, "S(R)");

  auto left = partial_trace(s, {"A", "C1"});
  auto right = partial_trace(s, {"B", "C2", "R"});
  std::vector<ChainLink> chain = {{left, "A", "C1"}, {right, "C2", "B"}};
  auto before = hierarchical_vs_random(chain, false);
  auto after = hierarchical_vs_random(chain, true);
  double phi_ac1 = after.link_rates.front();
  // Cut values: mask 0 is I(A > B C), mask 1 is I(A C > B).
  double d0 = std::abs(after.report.cut_values[0] - before.report.cut_values[0]);
  double d1 = std::abs(after.report.cut_values[1] - before.report.cut_values[1]);
  o.detail << "after CNOT: I(A>C1)=" << num(phi_ac1) << " hierarchical " << num(before.hierarchical)
           << "->" << num(after.hierarchical) << " random " << num(before.random_strategy) << "->"
           << num(after.random_strategy);
  o.require(std::abs(phi_ac1) <= 1e-9, "I(A>C1) after CNOT");
  o.require(d0 <= 1e-9 && d1 <= 1e-9, "cut values unchanged by CNOT");
  o.require(std::abs(after.hierarchical) <= 1e-9, "hierarchical rate collapses");
  o.require(std::abs(after.random_strategy - before.random_strategy) <= 1e-9, "random strategy unchanged");
}

void criterion_regions(Outcome& o, std::uint64_t, double&) {
  auto s = states::two_sender_example();
  auto region = merging_rate_region(s, singletons({"C1", "C2"}), {});
  const double expected[4] = {0, -1, 0, 1};
  double worst = 0;
  for (const auto& c : region.constraints) worst = std::max(worst, std::abs(c.rhs - expected[c.mask]));
  o.detail << "region rhs error " << num(worst) << "; ";
  o.require(region.constraints.size() == 3 && worst <= 1e-9, "two-sender region");
  struct Probe {
    CostVector p;
    Membership expected;
  };
  const Probe probes[3] = {{{0, 1}, Membership::inside},
                           {{-1, 0}, Membership::boundary},
                           {{-2, 0}, Membership::outside}};
  for (const auto& pr : probes) {
    auto m = region_membership(region, pr.p);
    o.detail << "(" << num(pr.p[0]) << "," << num(pr.p[1]) << ") " << to_string(m.verdict)
             << " [expected " << to_string(pr.expected) << "]; ";
    o.require(m.verdict == pr.expected, "verdict at (" + num(pr.p[0]) + "," + num(pr.p[1]) + ")");
  }

  const double eps = 0.1;
  auto fit = fit_three_sender_min_entropies();
  auto sep = three_sender_separation(eps, fit);
  o.detail << "threshold log d=" << num(sep.threshold_log_d) << " fit residual "
           << num(fit.fit_residual) << " witness (" << num(sep.witness[0]) << ","
           << num(sep.witness[1]) << "," << num(sep.witness[2]) << "); ";
  o.require(fit.fit_residual <= 1e-6, "affine min-entropy fit");
  o.require(sep.feasible_above, "negative E1, E2 above the threshold");
  o.require(sep.infeasible_below, "no negative E1, E2 below the threshold");
  bool seq_ok = true;
  double seq_min = INFINITY;
  std::vector<double> grid = {1, 2, 3, 5, 10, 30, 100, sep.threshold_log_d, 1e3, 1e4, 1e6};
  for (double L : grid) {
    double e2 = sequential_E2_bound(L, eps), e1 = sequential_E1_bound(L, eps);
    seq_min = std::min({seq_min, e1, e2});
    seq_ok = seq_ok && e1 > 0 && e2 > 0;
  }
  o.detail << "sequential closed-form min over grid " << num(seq_min) << "; ";
  o.require(seq_ok, "sequential closed-form bounds positive");
  // Solver-based sequential bounds on small instances.
  double num_min = INFINITY;
  for (int d : {2, 4}) {
    auto st = three_sender_fine(d, {0.5, 0.5});
    auto parties = three_sender_parties();
    auto e2 = sequential_cost(st, parties, {"R"}, {2, 1, 0}, eps).lower_bounds[1];
    auto e1 = sequential_cost(st, parties, {"R"}, {2, 0, 1}, eps).lower_bounds[0];
    num_min = std::min({num_min, e1, e2});
  }
  o.detail << "sequential solver min " << num(num_min);
  o.require(num_min > 0, "sequential solver bounds positive");
}

void criterion_gershgorin(Outcome& o, std::uint64_t seed, double&) {
  int violations = 0, total = 0;
  double worst_slack = INFINITY;
  for (int d : {8, 16, 32}) {
    auto res = parallel_map<std::array<double, 3>>(20, [&](std::size_t i) {
      Rng rng = make_rng(seed, 6000 + d * 100 + i);
      auto inst = overlap_instance(d, d, rng);
      return std::array<double, 3>{overlap_neg_hmin_dense(inst.state), inst.alpha,
                                   static_cast<double>(d)};
    });
    for (const auto& r : res) {
      double neg = r[0], a = r[1], dd = r[2];
      double g = std::log2(2 * a * dd + 1), loose = std::log2(a * dd) + 2;
      ++total;
      bool ok = neg <= g + 1e-9 && (a < 1 / (2 * dd) || g <= loose + 1e-12);
      if (!ok) ++violations;
      worst_slack = std::min(worst_slack, g - neg);
    }
  }
  o.detail << total << " instances, violations " << violations << ", min slack " << num(worst_slack);
  o.require(violations == 0, "Gershgorin chain");
}

void criterion_swap(Outcome& o, std::uint64_t, double&) {
  for (Rational l2 : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
    Rational l1 = Rational(1) - l2;
    auto r = entanglement_swap_rational(l1, l2);
    // Phi outcomes: (l1^2 + l2^2)/2 with conditional singlet 2 l2^2/(l1^2 + l2^2);
    // Psi outcomes: l1 l2, already maximally entangled.
    Rational pphi = (l1 * l1 + l2 * l2) / 2, ppsi = l1 * l2;
    Rational cphi = 2 * l2 * l2 / (l1 * l1 + l2 * l2);
    bool branches_ok = r.branches.size() == 4;
    for (int c = 0; branches_ok && c < 4; ++c) {
      bool phi = (c == 0 || c == 2);
      branches_ok = r.branches[c].probability == (phi ? pphi : ppsi) &&
                    r.branches[c].singlet_given_outcome == (phi ? cphi : Rational(1));
    }
    auto numeric = entanglement_swap(boost::rational_cast<double>(l1), boost::rational_cast<double>(l2));
    double scp_num = numeric.aggregate.at("scp");
    o.detail << "l2=" << rat(l2) << " SCP=" << rat(r.scp) << " numeric " << num(scp_num) << "; ";
    o.require(r.scp == 2 * l2, "SCP = 2 l2 at l2=" + rat(l2));
    o.require(branches_ok, "branch enumeration at l2=" + rat(l2));
    o.require(std::abs(scp_num - boost::rational_cast<double>(2 * l2)) <= 1e-10, "numeric SCP");
  }
}

void criterion_hashing(Outcome& o, std::uint64_t seed, double& seconds_limit) {
  seconds_limit = 60;
  std::vector<double> p = {0.8, 0.1, 0.05, 0.05};
  auto r = hashing_simulation(p, 2000, 0.05, 50, seed);
  o.detail << "S(AB)=" << num(r.entropy) << " rounds=" << r.rounds << " success="
           << num(r.success_frequency) << " yield=" << num(r.yield) << " target="
           << num(r.target_yield) << " |diff|=" << num(std::abs(r.yield - r.target_yield));
  o.require(r.success_frequency >= 0.9, "success frequency");
  o.require(std::abs(r.yield - r.target_yield) <= 0.1, "yield within 0.1");
}

void criterion_mincut(Outcome& o, std::uint64_t seed, double&) {
  const std::vector<double> lam = {0.7, 0.3};
  const double h = binary_entropy(0.3);
  double worst = 0.0;
  int cuts = 0;
  for (int m = 1; m <= 10; ++m) {
    // m pairs: A - N1 - ... - N(m-1) - B; node k holds N<k>i and N<k>o.
    std::vector<LabeledState> links;
    for (int k = 0; k < m; ++k) {
      std::string l = k == 0 ? "A" : "N" + std::to_string(k) + "o";
      std::string r = k == m - 1 ? "B" : "N" + std::to_string(k + 1) + "i";
      links.push_back(states::schmidt_pair(lam, l, r));
    }
    auto s = tensor_all(links);
    std::vector<Party> helpers;
    for (int k = 1; k < m; ++k) helpers.push_back({"N" + std::to_string(k) + "i", "N" + std::to_string(k) + "o"});
    auto mc = min_cut_entanglement(s, {"A"}, {"B"}, helpers);
    worst = std::max(worst, std::abs(mc.value - h));
    const unsigned nh = static_cast<unsigned>(helpers.size());
    std::vector<double> vals(mc.values.size());
    for (std::size_t mask = 0; mask < vals.size(); ++mask) {
      // Links crossing the cut: link k joins node k and node k+1 (node 0 = A, node m = B).
      int crossing = 0;
      for (int k = 0; k < m; ++k) {
        bool lk = k == 0 ? true : (mask >> (k - 1)) & 1;
        bool rk = k + 1 == m ? false : (mask >> k) & 1;
        crossing += lk != rk;
      }
      vals[mask] = std::abs(mc.values[mask] - crossing * h);
    }
    if (mc.values.size() != (std::size_t(1) << nh)) worst = INFINITY;
    for (double v : vals) worst = std::max(worst, v);
    cuts += static_cast<int>(vals.size());
  }
  o.detail << "chains m<=10, " << cuts << " cuts, max error " << num(worst) << "; ";
  o.require(worst <= 1e-9, "min-cut on chains");

  double eworst = 0.0, gap_violation = 0.0;
  for (int i = 0; i < 20; ++i) {
    Rng rng = make_rng(seed, 9000 + i);
    std::uniform_int_distribution<int> dd(2, 3);
    auto s = random_pure_state({{"A", dd(rng)}, {"B", dd(rng)}, {"C", dd(rng)}}, rng);
    PovmSearchOptions opt;
    opt.restarts = 4;
    opt.steps = 40;
    opt.seed = seed + i;
    auto e = eoa_pure(s, {"A"}, {"B"}, {"C"}, opt);
    // Independent evaluation from the marginal spectra.
    auto ent = [&](const Labels& x) {
      RVec ev = hermitian_eigenvalues(reduced_matrix(s, x));
      double t = 0;
      for (Eigen::Index k = 0; k < ev.size(); ++k) t -= xlog2x(std::max(0.0, ev(k)));
      return t;
    };
    eworst = std::max(eworst, std::abs(e.asymptotic - std::min(ent({"A"}), ent({"B"}))));
    gap_violation = std::max(gap_violation, e.one_shot - e.asymptotic);
  }
  o.detail << "eoa_pure max error " << num(eworst) << ", one-shot minus asymptotic <= " << num(gap_violation);
  o.require(eworst <= 1e-9, "eoa_pure asymptotic");
  o.require(gap_violation <= 1e-9, "one-shot E_A within the asymptotic value");
}

void criterion_properties(Outcome& o, std::uint64_t seed, double&) {
  auto suites = run_property_suites(seed, 100);
  for (const auto& s : suites) {
    o.detail << s.name << ": " << s.violations << "/" << s.instances << "; ";
    o.require(s.instances >= 100 && s.violations == 0, s.name);
  }
}

}  // namespace

std::vector<PropertySuite> run_property_suites(std::uint64_t seed, int instances) {
  const std::vector<SuiteFn> fns = {suite_state_invariants, suite_subadditivity, suite_ssa_vn,
                                    suite_ssa_hmin,         suite_hmin_h2,       suite_additivity,
                                    suite_distances,        suite_swap_trick,    suite_norms,
                                    suite_gentle,           suite_typical};
  return parallel_map<PropertySuite>(fns.size(), [&](std::size_t k) {
    return fns[k](derive_seed(seed, 100 + k), instances);
  });
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only) {
  using Fn = void (*)(Outcome&, std::uint64_t, double&);
  struct Entry {
    int id;
    const char* name;
    Fn fn;
  };
  const Entry entries[] = {
      {1, "twirl identity", criterion_twirl},
      {2, "decoupling bound", criterion_decoupling},
      {3, "entropy engine", criterion_entropy},
      {4, "assisted distillation example", criterion_assisted_example},
      {5, "rate and cost regions", criterion_regions},
      {6, "Gershgorin bound", criterion_gershgorin},
      {7, "entanglement swapping", criterion_swap},
      {8, "hashing simulation", criterion_hashing},
      {9, "min-cut entanglement", criterion_mincut},
      {10, "property suites", criterion_properties},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    Outcome o;
    double limit = INFINITY;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(o, derive_seed(seed, e.id), limit);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > limit) o.require(false, "runtime above " + num(limit) + " s");
    r.pass = o.pass;
    r.detail = o.detail.str();
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s %2d %-30s %7.2fs  ", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace entlab
