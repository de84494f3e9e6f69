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

#include "entlab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "entlab/parallel.hpp"

namespace entlab {

namespace {
int g_workers = 0;
}

int worker_count() {
  if (g_workers > 0) return g_workers;
  if (const char* env = std::getenv("ENTLAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_worker_count(int n) { g_workers = n; }

struct LabeledState::Data {
  std::vector<System> systems;
  NormMode mode = NormMode::normalized;
  std::optional<Vec> vec;
  mutable Mat mat;
  mutable std::once_flag mat_once;
  double trace = 1.0;
  double min_eig = 0.0;
  bool pure = false;
};

namespace {

int product_dim(const std::vector<System>& systems) {
  long long d = 1;
  for (const auto& s : systems) {
    if (s.dim < 1) throw std::invalid_argument("system " + s.label + " has non-positive dimension");
    d *= s.dim;
    if (d > (1LL << 26)) throw std::invalid_argument("total dimension too large");
  }
  return static_cast<int>(d);
}

void check_labels(const std::vector<System>& systems) {
  std::set<std::string> seen;
  for (const auto& s : systems) {
    if (s.label.empty()) throw std::invalid_argument("empty system label");
    if (!seen.insert(s.label).second) throw std::invalid_argument("duplicate label " + s.label);
  }
}

void check_trace(double tr, NormMode mode) {
  if (mode == NormMode::normalized) {
    if (std::abs(tr - 1.0) > 1e-10)
      throw std::domain_error("state trace " + std::to_string(tr) + " is not 1");
  } else if (!(tr > 0.0) || tr > 1.0 + 1e-10) {
    throw std::domain_error("subnormalized state trace outside (0,1]");
  }
}

}  // namespace

LabeledState::LabeledState() {
  auto d = std::make_shared<Data>();
  d->vec = Vec::Ones(1);
  d->pure = true;
  d_ = d;
}

LabeledState LabeledState::from_matrix(std::vector<System> systems, const Mat& m, NormMode mode) {
  check_labels(systems);
  int n = product_dim(systems);
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("matrix side " + std::to_string(m.rows()) +
                                " does not match product of dims " + std::to_string(n));
  auto d = std::make_shared<Data>();
  d->systems = std::move(systems);
  d->mode = mode;
  d->mat = symmetrize(m);
  std::call_once(d->mat_once, [] {});
  RVec ev = Eigen::SelfAdjointEigenSolver<Mat>(d->mat, Eigen::EigenvaluesOnly).eigenvalues();
  d->min_eig = ev(0);
  if (ev(0) < -kEigClamp)
    throw std::domain_error("matrix is not positive semidefinite (min eigenvalue " +
                            std::to_string(ev(0)) + ")");
  d->trace = d->mat.trace().real();
  check_trace(d->trace, mode);
  d->pure = (d->trace - ev(ev.size() - 1)) <= 1e-9 * std::max(1.0, d->trace);
  LabeledState s;
  s.d_ = d;
  return s;
}

LabeledState LabeledState::from_vector(std::vector<System> systems, const Vec& v, NormMode mode) {
  check_labels(systems);
  int n = product_dim(systems);
  if (v.size() != n) throw std::invalid_argument("vector length does not match product of dims");
  auto d = std::make_shared<Data>();
  d->systems = std::move(systems);
  d->mode = mode;
  d->vec = v;
  d->trace = v.squaredNorm();
  check_trace(d->trace, mode);
  d->pure = true;
  LabeledState s;
  s.d_ = d;
  return s;
}

const std::vector<System>& LabeledState::systems() const { return d_->systems; }

Labels LabeledState::labels() const {
  Labels out;
  for (const auto& s : d_->systems) out.push_back(s.label);
  return out;
}

std::vector<int> LabeledState::dims() const {
  std::vector<int> out;
  for (const auto& s : d_->systems) out.push_back(s.dim);
  return out;
}

int LabeledState::dim() const {
  int d = 1;
  for (const auto& s : d_->systems) d *= s.dim;
  return d;
}

int LabeledState::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < d_->systems.size(); ++i)
    if (d_->systems[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown label " + label);
}

bool LabeledState::has(const std::string& label) const {
  for (const auto& s : d_->systems)
    if (s.label == label) return true;
  return false;
}

int LabeledState::dim_of(const Labels& part) const {
  int d = 1;
  for (const auto& l : part) d *= d_->systems[index_of(l)].dim;
  return d;
}

bool LabeledState::is_pure() const { return d_->pure; }
bool LabeledState::has_vector() const { return d_->vec.has_value(); }

const Vec& LabeledState::vector() const {
  if (!d_->vec) throw std::logic_error("state has no vector representation");
  return *d_->vec;
}

const Mat& LabeledState::matrix() const {
  std::call_once(d_->mat_once, [this] { d_->mat = ket_bra(*d_->vec); });
  return d_->mat;
}

double LabeledState::trace() const { return d_->trace; }
NormMode LabeledState::norm_mode() const { return d_->mode; }
double LabeledState::min_eigenvalue() const { return d_->min_eig; }

std::vector<std::size_t> subset_offsets(const std::vector<int>& dims,
                                        const std::vector<int>& subset) {
  std::vector<std::size_t> stride(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    stride[k] = stride[k + 1] * static_cast<std::size_t>(dims[k + 1]);
  std::vector<std::size_t> out{0};
  for (int idx : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[idx]);
    for (std::size_t base : out)
      for (int i = 0; i < dims[idx]; ++i) next.push_back(base + i * stride[idx]);
    out.swap(next);
  }
  return out;
}

std::vector<int> resolve_labels(const LabeledState& s, const Labels& part) {
  std::vector<int> out;
  std::set<std::string> seen;
  for (const auto& l : part) {
    if (!seen.insert(l).second) throw std::invalid_argument("label listed twice: " + l);
    out.push_back(s.index_of(l));
  }
  return out;
}

Labels complement(const LabeledState& s, const Labels& part) {
  std::set<std::string> p(part.begin(), part.end());
  for (const auto& l : part) s.index_of(l);
  Labels out;
  for (const auto& sys : s.systems())
    if (!p.count(sys.label)) out.push_back(sys.label);
  return out;
}

namespace {

std::vector<System> concat(const std::vector<System>& a, const std::vector<System>& b) {
  std::vector<System> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Kept systems in state order.
std::vector<int> sorted_indices(const LabeledState& s, const Labels& keep) {
  std::vector<int> idx = resolve_labels(s, keep);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> complement_indices(int n, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  return out;
}

Mat reduced_from_indices(const LabeledState& s, const std::vector<int>& keep_idx) {
  std::vector<int> dims = s.dims();
  std::vector<int> tr_idx = complement_indices(static_cast<int>(dims.size()), keep_idx);
  auto ok = subset_offsets(dims, keep_idx);
  auto ot = subset_offsets(dims, tr_idx);
  const Eigen::Index dk = static_cast<Eigen::Index>(ok.size());
  const Eigen::Index dt = static_cast<Eigen::Index>(ot.size());
  if (s.has_vector()) {
    const Vec& v = s.vector();
    Mat m(dk, dt);
    for (Eigen::Index t = 0; t < dt; ++t)
      for (Eigen::Index a = 0; a < dk; ++a) m(a, t) = v(ok[a] + ot[t]);
    Mat r = m * m.adjoint();
    return (r + r.adjoint()) * 0.5;
  }
  const Mat& rho = s.matrix();
  Mat r = Mat::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b) {
      cplx acc = 0;
      for (Eigen::Index t = 0; t < dt; ++t) acc += rho(ok[a] + ot[t], ok[b] + ot[t]);
      r(a, b) = acc;
    }
  return (r + r.adjoint()) * 0.5;
}

std::vector<System> select_systems(const LabeledState& s, const std::vector<int>& idx) {
  std::vector<System> out;
  for (int i : idx) out.push_back(s.systems()[i]);
  return out;
}

}  // namespace

LabeledState tensor(const LabeledState& a, const LabeledState& b) {
  auto systems = concat(a.systems(), b.systems());
  NormMode mode = (a.norm_mode() == NormMode::normalized && b.norm_mode() == NormMode::normalized)
                      ? NormMode::normalized
                      : NormMode::subnormalized;
  if (a.has_vector() && b.has_vector()) {
    const Vec& va = a.vector();
    const Vec& vb = b.vector();
    Vec v(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) v.segment(i * vb.size(), vb.size()) = va(i) * vb;
    return LabeledState::from_vector(systems, v, mode);
  }
  return LabeledState::from_matrix(systems, kron(a.matrix(), b.matrix()), mode);
}

LabeledState tensor_all(const std::vector<LabeledState>& parts) {
  if (parts.empty()) return LabeledState();
  LabeledState out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = tensor(out, parts[i]);
  return out;
}

Mat reduced_matrix(const LabeledState& s, const Labels& keep) {
  return reduced_from_indices(s, sorted_indices(s, keep));
}

LabeledState partial_trace(const LabeledState& s, const Labels& keep) {
  auto idx = sorted_indices(s, keep);
  if (idx.size() == s.systems().size()) return s;
  return LabeledState::from_matrix(select_systems(s, idx), reduced_from_indices(s, idx),
                                   s.norm_mode());
}

LabeledState reorder(const LabeledState& s, const Labels& order) {
  if (order.size() != s.systems().size()) throw std::invalid_argument("reorder: not a permutation");
  auto idx = resolve_labels(s, order);
  auto off = subset_offsets(s.dims(), idx);
  auto systems = select_systems(s, idx);
  const Eigen::Index n = static_cast<Eigen::Index>(off.size());
  if (s.has_vector()) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = s.vector()(off[i]);
    return LabeledState::from_vector(systems, v, s.norm_mode());
  }
  Mat m(n, n);
  const Mat& rho = s.matrix();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rho(off[i], off[j]);
  return LabeledState::from_matrix(systems, m, s.norm_mode());
}

LabeledState relabel(const LabeledState& s, const std::string& from, const std::string& to) {
  auto systems = s.systems();
  systems[s.index_of(from)].label = to;
  if (s.has_vector()) return LabeledState::from_vector(systems, s.vector(), s.norm_mode());
  return LabeledState::from_matrix(systems, s.matrix(), s.norm_mode());
}

LabeledState purify(const LabeledState& s, const std::string& ref_label) {
  if (s.norm_mode() != NormMode::normalized)
    throw std::domain_error("purify: input must be normalized");
  if (s.has(ref_label)) throw std::invalid_argument("purify: label already used: " + ref_label);
  auto systems = s.systems();
  if (s.has_vector()) {
    systems.push_back({ref_label, 1});
    return LabeledState::from_vector(systems, s.vector());
  }
  EigenPair e = hermitian_eigen(s.matrix());
  const Eigen::Index n = e.values.size();
  double top = e.values(n - 1);
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = n - 1; i >= 0; --i)
    if (e.values(i) > 1e-12 * std::max(1.0, top)) support.push_back(i);
  const Eigen::Index r = static_cast<Eigen::Index>(support.size());
  systems.push_back({ref_label, static_cast<int>(r)});
  Vec v = Vec::Zero(n * r);
  for (Eigen::Index k = 0; k < r; ++k) {
    double w = std::sqrt(e.values(support[k]));
    for (Eigen::Index i = 0; i < n; ++i) v(i * r + k) = w * e.vectors(i, support[k]);
  }
  v /= v.norm();
  return LabeledState::from_vector(systems, v);
}

SchmidtData schmidt(const LabeledState& s, const Labels& left) {
  if (!s.is_pure()) throw std::domain_error("schmidt: input state is not pure");
  auto li = resolve_labels(s, left);
  auto ri = complement_indices(static_cast<int>(s.systems().size()), li);
  std::vector<int> lsorted = li;
  std::sort(lsorted.begin(), lsorted.end());
  Vec v;
  if (s.has_vector()) {
    v = s.vector();
  } else {
    EigenPair e = hermitian_eigen(s.matrix());
    Eigen::Index top = e.values.size() - 1;
    v = e.vectors.col(top) * std::sqrt(std::max(0.0, e.values(top)));
  }
  auto ol = subset_offsets(s.dims(), lsorted);
  auto orr = subset_offsets(s.dims(), ri);
  Mat m(ol.size(), orr.size());
  for (std::size_t a = 0; a < ol.size(); ++a)
    for (std::size_t b = 0; b < orr.size(); ++b) m(a, b) = v(ol[a] + orr[b]);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtData out;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    out.coefficients.push_back(svd.singularValues()(i));
  out.left_vectors = svd.matrixU();
  out.right_vectors = svd.matrixV().conjugate();
  return out;
}

double fidelity(const Mat& a, const Mat& b) {
  Mat sa = psd_sqrt(a);
  Mat sb = psd_sqrt(b);
  return trace_norm(sa * sb);
}

DistanceReport distances(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("distances: dimension mismatch");
  DistanceReport r;
  r.fidelity = fidelity(a, b);
  double ta = a.trace().real();
  double tb = b.trace().real();
  r.generalized_fidelity = r.fidelity + std::sqrt(std::max(0.0, (1.0 - ta) * (1.0 - tb)));
  r.trace_distance = 0.5 * trace_norm(a - b);
  r.generalized_trace_distance = r.trace_distance + 0.5 * std::abs(ta - tb);
  double fg = std::min(1.0, r.generalized_fidelity);
  r.purified_distance = std::sqrt(std::max(0.0, 1.0 - fg * fg));
  return r;
}

DistanceReport distances(const LabeledState& a, const LabeledState& b) {
  if (a.systems() != b.systems()) throw std::invalid_argument("distances: systems differ");
  return distances(a.matrix(), b.matrix());
}

LabeledState apply_local(const LabeledState& s, const Labels& targets, const Mat& op) {
  auto ti = resolve_labels(s, targets);
  auto dims = s.dims();
  auto ri = complement_indices(static_cast<int>(dims.size()), ti);
  auto ot = subset_offsets(dims, ti);
  auto orr = subset_offsets(dims, ri);
  const Eigen::Index dt = static_cast<Eigen::Index>(ot.size());
  if (op.rows() != dt || op.cols() != dt) throw std::invalid_argument("apply_local: operator size");
  auto apply_cols = [&](const Mat& in) {
    // in has rows indexed by the full space; returns (op (x) I) in.
    Mat out(in.rows(), in.cols());
    Mat block(dt, in.cols());
    for (std::size_t r = 0; r < orr.size(); ++r) {
      for (Eigen::Index i = 0; i < dt; ++i) block.row(i) = in.row(ot[i] + orr[r]);
      Mat nb = op * block;
      for (Eigen::Index i = 0; i < dt; ++i) out.row(ot[i] + orr[r]) = nb.row(i);
    }
    return out;
  };
  if (s.has_vector()) {
    Mat v = s.vector();
    Vec nv = apply_cols(v).col(0);
    return LabeledState::from_vector(s.systems(), nv, s.norm_mode());
  }
  Mat left = apply_cols(s.matrix());
  Mat both = apply_cols(left.adjoint()).adjoint();
  return LabeledState::from_matrix(s.systems(), both, s.norm_mode());
}

Mat haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be positive");
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  Mat z(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    cplx d = r(i, i);
    double a = std::abs(d);
    q.col(i) *= (a > 0 ? d / a : cplx(1.0, 0.0));
  }
  return q;
}

Vec random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
  return v / v.norm();
}

LabeledState random_pure_state(std::vector<System> systems, Rng& rng) {
  return LabeledState::from_vector(systems, random_unit_vector(product_dim(systems), rng));
}

LabeledState random_mixed_state(std::vector<System> systems, int env_dim, Rng& rng) {
  int n = product_dim(systems);
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, env_dim);
  for (int j = 0; j < env_dim; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = cplx(g(rng), g(rng));
  Mat rho = z * z.adjoint();
  rho /= rho.trace().real();
  return LabeledState::from_matrix(systems, rho);
}

Mat ket_bra(const Vec& v) { return v * v.adjoint(); }

Mat maximally_mixed(int d) { return Mat::Identity(d, d) / static_cast<double>(d); }

Mat swap_operator(int d) {
  Mat f = Mat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

namespace states {

LabeledState bell(const std::string& which, const std::string& a, const std::string& b) {
  const double h = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(4);
  if (which == "phi_plus") {
    v(0) = h; v(3) = h;
  } else if (which == "phi_minus") {
    v(0) = h; v(3) = -h;
  } else if (which == "psi_plus") {
    v(1) = h; v(2) = h;
  } else if (which == "psi_minus") {
    v(1) = h; v(2) = -h;
  } else {
    throw std::invalid_argument("unknown Bell state " + which);
  }
  return LabeledState::from_vector({{a, 2}, {b, 2}}, v);
}

LabeledState ghz(const Labels& parties) {
  if (parties.size() < 2) throw std::invalid_argument("ghz needs at least two parties");
  std::vector<System> systems;
  for (const auto& p : parties) systems.push_back({p, 2});
  Vec v = Vec::Zero(1 << parties.size());
  v(0) = v(v.size() - 1) = 1.0 / std::sqrt(2.0);
  return LabeledState::from_vector(systems, v);
}

LabeledState werner(double F, const std::string& a, const std::string& b) {
  if (!(F >= 0.0 && F <= 1.0)) throw std::invalid_argument("werner: F must lie in [0,1]");
  Mat p = bell("psi_minus").matrix();
  Mat w = F * p + (1.0 - F) / 3.0 * (Mat::Identity(4, 4) - p);
  return LabeledState::from_matrix({{a, 2}, {b, 2}}, w);
}

LabeledState max_entangled(int d, const std::string& a, const std::string& b) {
  Vec v = Vec::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return LabeledState::from_vector({{a, d}, {b, d}}, v);
}

LabeledState max_mixed(int d, const std::string& a) {
  return LabeledState::from_matrix({{a, d}}, maximally_mixed(d));
}

double harmonic(int d) {
  double h = 0.0;
  for (int j = 1; j <= d; ++j) h += 1.0 / j;
  return h;
}

LabeledState embezzle(int d, const std::string& a, const std::string& b) {
  double hd = harmonic(d);
  Vec v = Vec::Zero(d * d);
  for (int j = 1; j <= d; ++j) v((j - 1) * d + (j - 1)) = 1.0 / std::sqrt(j * hd);
  return LabeledState::from_vector({{a, d}, {b, d}}, v);
}

LabeledState schmidt_pair(const std::vector<double>& lambdas, const std::string& a,
                          const std::string& b) {
  const int d = static_cast<int>(lambdas.size());
  if (d == 0) throw std::invalid_argument("schmidt_pair: empty spectrum");
  double total = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("schmidt_pair: negative coefficient");
    total += l;
  }
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("schmidt_pair: spectrum must sum to 1");
  Vec v = Vec::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = std::sqrt(lambdas[i]);
  return LabeledState::from_vector({{a, d}, {b, d}}, v);
}

LabeledState basis(int d, int k, const std::string& a) {
  Vec v = Vec::Zero(d);
  v(k) = 1.0;
  return LabeledState::from_vector({{a, d}}, v);
}

LabeledState example_ch5() {
  Vec ac = Vec::Zero(4);
  ac(0) = 0.5;
  ac(3) = std::sqrt(0.75);
  Vec bcr = Vec::Zero(8);
  bcr(0) = 1.0 / std::sqrt(2.0);  // |000>
  bcr(6) = 0.5;                   // |110>
  bcr(7) = 0.5;                   // |111>
  auto left = LabeledState::from_vector({{"A", 2}, {"C1", 2}}, ac);
  auto right = LabeledState::from_vector({{"B", 2}, {"C2", 2}, {"R", 2}}, bcr);
  return tensor(left, right);
}

LabeledState example_three_sender(int d, const std::vector<double>& theta) {
  const int k = static_cast<int>(theta.size());
  // Native factor order: C1, C2a, C2b, C3a, C3b, R.
  auto phi1 = max_entangled(d, "C1", "C2a");
  auto phi2 = max_entangled(d, "C3a", "R");
  auto th = schmidt_pair(theta, "C2b", "C3b");
  auto full = tensor_all({phi1, th, phi2});  // C1 C2a C2b C3b C3a R
  full = reorder(full, {"C1", "C2a", "C2b", "C3a", "C3b", "R"});
  Vec v = full.vector();
  return LabeledState::from_vector({{"C1", d}, {"C2", d * k}, {"C3", d * k}, {"R", d}}, v);
}

LabeledState example_overlap(const Mat& psi_columns) {
  const int d = static_cast<int>(psi_columns.cols());
  const int dc2 = static_cast<int>(psi_columns.rows());
  double hd = harmonic(d);
  Vec v = Vec::Zero(d * dc2 * d);
  for (int j = 0; j < d; ++j) {
    Vec pj = psi_columns.col(j) / psi_columns.col(j).norm();
    double c = 1.0 / std::sqrt((j + 1) * hd);
    for (int x = 0; x < dc2; ++x) v((j * dc2 + x) * d + j) = c * pj(x);
  }
  return LabeledState::from_vector({{"C1", d}, {"C2", dc2}, {"R", d}}, v);
}

LabeledState two_sender_example() {
  auto a = max_entangled(2, "C1", "C2a");
  auto b = max_entangled(2, "C2b", "R");
  Vec v = tensor(a, b).vector();  // C1 C2a C2b R
  return LabeledState::from_vector({{"C1", 2}, {"C2", 4}, {"R", 2}}, v);
}

Mat cnot() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
  return m;
}

}  // namespace states

}  // namespace entlab
