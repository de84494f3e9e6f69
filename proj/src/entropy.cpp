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

#include "entlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace entlab {

namespace {

constexpr double kSupportTol = 1e-10;
const double kLn2 = std::log(2.0);

void check_disjoint(const Labels& a, const Labels& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw std::invalid_argument("label sets overlap on " + x);
}

Labels merge(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Factor V with rho_part = V V^dagger, part systems in state order.
Mat marginal_factor(const LabeledState& s, const Labels& part_in_order) {
  auto dims = s.dims();
  std::vector<int> keep;
  for (const auto& l : part_in_order) keep.push_back(s.index_of(l));
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) rest.push_back(i);
  auto ok = subset_offsets(dims, keep);
  auto ot = subset_offsets(dims, rest);
  Mat v(ok.size(), ot.size());
  const Vec& psi = s.vector();
  for (std::size_t a = 0; a < ok.size(); ++a)
    for (std::size_t t = 0; t < ot.size(); ++t) v(a, t) = psi(ok[a] + ot[t]);
  return v;
}

// Marginal on labels in the given order (not state order).
Mat ordered_marginal(const LabeledState& s, const Labels& order) {
  Mat base = reduced_matrix(s, order);
  // reduced_matrix keeps state order; permute to the requested order.
  std::vector<std::pair<int, std::string>> pos;
  for (const auto& l : order) pos.push_back({s.index_of(l), l});
  std::sort(pos.begin(), pos.end());
  std::vector<System> sys;
  for (auto& p : pos) sys.push_back(s.systems()[p.first]);
  auto st = LabeledState::from_matrix(sys, base, NormMode::subnormalized);
  if (Labels(order) == st.labels()) return base;
  return reorder(st, order).matrix();
}

RVec pos_spectrum(const Mat& m) { return hermitian_eigenvalues(m); }

struct SupportSplit {
  Mat inv_sqrt;   // sigma^{-1/2} on the support
  Mat kernel;     // projector onto ker sigma
  bool full_rank;
};

SupportSplit split_support(const Mat& sigma, double power = -0.5) {
  EigenPair e = hermitian_eigen(sigma);
  const Eigen::Index n = e.values.size();
  double top = std::max(e.values(n - 1), 0.0);
  double tol = 1e-12 * std::max(1.0, top);
  RVec f(n), k(n);
  bool full = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (e.values(i) > tol) {
      f(i) = std::pow(e.values(i), power);
      k(i) = 0;
    } else {
      f(i) = 0;
      k(i) = 1;
      full = false;
    }
  }
  return {e.vectors * f.asDiagonal() * e.vectors.adjoint(),
          e.vectors * k.asDiagonal() * e.vectors.adjoint(), full};
}


// (I_A (x) x) v for v with dA blocks of dB rows.
Mat left_blocks(const Mat& v, int dA, const Mat& x) {
  const Eigen::Index dB = x.rows();
  Mat out(v.rows(), v.cols());
  for (int a = 0; a < dA; ++a) out.middleRows(a * dB, dB) = x * v.middleRows(a * dB, dB);
  return out;
}

// (I_A (x) x) rho (I_A (x) x) for Hermitian x.
Mat conj_blocks(const Mat& rho, int dA, const Mat& x) {
  const Eigen::Index dB = x.rows();
  Mat out(rho.rows(), rho.cols());
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dA; ++b)
      out.block(a * dB, b * dB, dB, dB) = x * rho.block(a * dB, b * dB, dB, dB) * x;
  return (out + out.adjoint()) * 0.5;
}

double kernel_leak(const Mat& rho, int dA, const Mat& kernel) {
  const Eigen::Index dB = kernel.rows();
  double leak = 0.0;
  for (int a = 0; a < dA; ++a) leak += (kernel * rho.block(a * dB, a * dB, dB, dB)).trace().real();
  return leak;
}

}  // namespace

std::string join_labels(const Labels& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ",";
    out += l[i];
  }
  return out;
}

double von_neumann(const Mat& rho) {
  RVec v = pos_spectrum(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s -= xlog2x(v(i));
  return std::max(0.0, s);
}

std::vector<double> marginal_spectrum(const LabeledState& s, const Labels& part) {
  resolve_labels(s, part);
  if (s.has_vector()) {
    Labels rest = complement(s, part);
    int dp = s.dim_of(part);
    int dr = s.dim_of(rest);
    Mat m = (dp <= dr) ? reduced_matrix(s, part) : reduced_matrix(s, rest);
    RVec v = pos_spectrum(m);
    return std::vector<double>(v.data(), v.data() + v.size());
  }
  RVec v = pos_spectrum(reduced_matrix(s, part));
  return std::vector<double>(v.data(), v.data() + v.size());
}

double von_neumann(const LabeledState& s, const Labels& part) {
  if (part.empty()) return 0.0;
  double h = 0.0;
  for (double x : marginal_spectrum(s, part)) h -= xlog2x(x);
  return std::max(0.0, h);
}

double conditional_entropy(const LabeledState& s, const Labels& part, const Labels& given) {
  check_disjoint(part, given);
  return von_neumann(s, merge(part, given)) - von_neumann(s, given);
}

double coherent_information(const LabeledState& s, const Labels& from, const Labels& to) {
  check_disjoint(from, to);
  return von_neumann(s, to) - von_neumann(s, merge(from, to));
}

double mutual_information(const LabeledState& s, const Labels& a, const Labels& b) {
  check_disjoint(a, b);
  return von_neumann(s, a) + von_neumann(s, b) - von_neumann(s, merge(a, b));
}

double min_entropy_relative(const Mat& rho, int dA, const Mat& sigma) {
  const int dB = static_cast<int>(sigma.rows());
  if (rho.rows() != dA * dB) throw std::invalid_argument("min_entropy_relative: dimension mismatch");
  SupportSplit sp = split_support(sigma);
  if (!sp.full_rank && kernel_leak(rho, dA, sp.kernel) > kSupportTol)
    throw SupportViolation("rho is not supported on I (x) supp(sigma)");
  double lam = lambda_max(conj_blocks(rho, dA, sp.inv_sqrt));
  if (!(lam > 0)) throw SupportViolation("rho vanishes on the support of sigma");
  return -std::log2(lam);
}

double min_entropy_relative_pure(const Vec& psi, int dA, const Mat& sigma) {
  const int dB = static_cast<int>(sigma.rows());
  if (psi.size() != dA * dB) throw std::invalid_argument("min_entropy_relative: dimension mismatch");
  SupportSplit sp = split_support(sigma, -1.0);
  Eigen::Map<const Mat> m(psi.data(), dB, dA);  // column a holds the B-vector for A index a
  if (!sp.full_rank) {
    double leak = (sp.kernel * m).squaredNorm();
    if (leak > kSupportTol) throw SupportViolation("rho is not supported on I (x) supp(sigma)");
  }
  double lam = (m.adjoint() * sp.inv_sqrt * m).trace().real();
  if (!(lam > 0)) throw SupportViolation("rho vanishes on the support of sigma");
  return -std::log2(lam);
}

double min_entropy_relative(const LabeledState& rho, const LabeledState& sigma) {
  Labels B = sigma.labels();
  Labels A = complement(rho, B);
  for (const auto& sys : sigma.systems())
    if (rho.systems()[rho.index_of(sys.label)].dim != sys.dim)
      throw std::invalid_argument("min_entropy_relative: dimension mismatch on " + sys.label);
  Labels order = merge(A, B);
  LabeledState r = reorder(rho, order);
  int dA = r.dim_of(A);
  if (r.has_vector()) return min_entropy_relative_pure(r.vector(), dA, sigma.matrix());
  return min_entropy_relative(r.matrix(), dA, sigma.matrix());
}

double min_entropy_of_marginal(const LabeledState& s, const Labels& A, const Labels& B,
                               const Mat& sigma) {
  check_disjoint(A, B);
  Labels order = merge(A, B);
  const int dA = s.dim_of(A);
  const int dB = s.dim_of(B);
  if (sigma.rows() != dB) throw std::invalid_argument("min_entropy_of_marginal: sigma dimension");
  if (s.has_vector() && s.dim() / (dA * dB) < dA * dB) {
    Mat v = marginal_factor(s, order);  // (dA dB) x rest
    SupportSplit sp = split_support(sigma);
    if (!sp.full_rank && left_blocks(v, dA, sp.kernel).squaredNorm() > kSupportTol)
      throw SupportViolation("rho is not supported on I (x) supp(sigma)");
    Mat xv = left_blocks(v, dA, sp.inv_sqrt);
    Mat g = xv.adjoint() * xv;
    double lam = lambda_max((g + g.adjoint()) * 0.5);
    if (!(lam > 0)) throw SupportViolation("rho vanishes on the support of sigma");
    return -std::log2(lam);
  }
  return min_entropy_relative(ordered_marginal(s, order), dA, sigma);
}

double min_entropy(const Mat& rho) { return -std::log2(lambda_max(rho)); }

namespace {

// Orthonormal Hermitian basis of dB x dB matrices.
std::vector<Mat> hermitian_basis(int d) {
  std::vector<Mat> out;
  const double h = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < d; ++p) {
    Mat e = Mat::Zero(d, d);
    e(p, p) = 1.0;
    out.push_back(e);
  }
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      Mat e = Mat::Zero(d, d);
      e(p, q) = h;
      e(q, p) = h;
      out.push_back(e);
      Mat f = Mat::Zero(d, d);
      f(p, q) = cplx(0, h);
      f(q, p) = cplx(0, -h);
      out.push_back(f);
    }
  return out;
}

bool cholesky_pd(const Mat& w, Eigen::LLT<Mat>& llt) {
  llt.compute(w);
  return llt.info() == Eigen::Success;
}

double log_det_llt(const Eigen::LLT<Mat>& llt) {
  double s = 0.0;
  const Mat& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
  return 2.0 * s;
}

Mat partial_trace_first(const Mat& z, int dA, int dB) {
  Mat m = Mat::Zero(dB, dB);
  for (int a = 0; a < dA; ++a) m += z.block(a * dB, a * dB, dB, dB);
  return m;
}

}  // namespace

ConeProgramResult conditional_min_entropy(const Mat& rho_in, int dA, const ConeOptions& opt) {
  const int n = static_cast<int>(rho_in.rows());
  if (dA < 1 || n % dA != 0) throw std::invalid_argument("conditional_min_entropy: bad split");
  const int dB = n / dA;
  Mat rho = (rho_in + rho_in.adjoint()) * 0.5;
  ConeProgramResult res;
  const double top = lambda_max(rho);
  if (dB == 1) {
    res.optimum = top;
    res.sigma = Mat::Constant(1, 1, top);
    res.certificate = Mat::Identity(1, 1);
    res.hmin = -std::log2(top);
    res.converged = true;
    res.feasibility = 0.0;
    return res;
  }
  const auto basis = hermitian_basis(dB);
  const int nb = static_cast<int>(basis.size());
  Mat basis_cols(dB * dB, nb);
  for (int j = 0; j < nb; ++j)
    basis_cols.col(j) = Eigen::Map<const Vec>(basis[j].data(), dB * dB);  // column-major vec
  RVec trace_e(nb);
  for (int j = 0; j < nb; ++j) trace_e(j) = basis[j].trace().real();

  const Mat ia = Mat::Identity(dA, dA);
  Mat sigma = Mat::Identity(dB, dB) * (1.05 * top + 1e-9);
  double t = static_cast<double>(n) / sigma.trace().real();
  Eigen::LLT<Mat> llt;
  int iters = 0;
  Mat z;

  auto barrier = [&](const Mat& s, double tt, double& val) {
    Mat w = kron(ia, s) - rho;
    if (!cholesky_pd(w, llt)) return false;
    val = tt * s.trace().real() - log_det_llt(llt);
    return true;
  };

  for (int outer = 0; outer < 80 && iters < opt.max_newton; ++outer) {
    for (int inner = 0; inner < 60 && iters < opt.max_newton; ++inner) {
      ++iters;
      double f0;
      if (!barrier(sigma, t, f0)) throw std::runtime_error("conditional_min_entropy: lost feasibility");
      z = llt.solve(Mat::Identity(n, n));
      z = (z + z.adjoint()) * 0.5;
      Mat m = partial_trace_first(z, dA, dB);
      RVec g(nb);
      for (int j = 0; j < nb; ++j) g(j) = t * trace_e(j) - (m * basis[j]).trace().real();
      // Hessian: Tr[Z (I (x) X) Z (I (x) Y)] = vec(Y)^T S vec(X) with
      // S[(s,p),(q,r)] = sum_ab Z[(a,p),(b,q)] Z[(b,r),(a,s)].
      Mat x1(dB * dB, dA * dA), x2(dA * dA, dB * dB);
      for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dA; ++b)
          for (int p = 0; p < dB; ++p)
            for (int q = 0; q < dB; ++q) {
              x1(p * dB + q, a * dA + b) = z(a * dB + p, b * dB + q);
              x2(a * dA + b, p * dB + q) = z(b * dB + p, a * dB + q);
            }
      Mat s_pq_rs = x1 * x2;  // [(p,q),(r,s)]
      // Column-major vec: vec(X)[q + r dB] = X(q, r); vec(Y)[s + p dB] = Y(s, p).
      Mat smat(dB * dB, dB * dB);
      for (int p = 0; p < dB; ++p)
        for (int q = 0; q < dB; ++q)
          for (int r = 0; r < dB; ++r)
            for (int s = 0; s < dB; ++s) smat(s + p * dB, q + r * dB) = s_pq_rs(p * dB + q, r * dB + s);
      RMat h = (basis_cols.transpose() * smat * basis_cols).real();
      h = (h + h.transpose()) * 0.5;
      RVec step = h.ldlt().solve(-g);
      double dec2 = -g.dot(step);
      if (!std::isfinite(dec2)) throw std::runtime_error("conditional_min_entropy: singular Newton system");
      if (dec2 * 0.5 < 1e-12) break;
      Mat dsig = Mat::Zero(dB, dB);
      for (int j = 0; j < nb; ++j) dsig += step(j) * basis[j];
      double alpha = 1.0;
      double f1;
      while (true) {
        Mat cand = sigma + alpha * dsig;
        cand = (cand + cand.adjoint()) * 0.5;
        if (barrier(cand, t, f1) && f1 <= f0 - 0.25 * alpha * dec2) {
          sigma = cand;
          break;
        }
        alpha *= 0.5;
        if (alpha < 1e-14) break;
      }
      if (alpha < 1e-14) break;
    }
    double tr = sigma.trace().real();
    if (static_cast<double>(n) / t < opt.tol * tr * 0.1) break;
    t *= 10.0;
  }

  // Certified gap from the rescaled dual point.
  double fdummy;
  if (!barrier(sigma, 1.0, fdummy)) throw std::runtime_error("conditional_min_entropy: infeasible iterate");
  z = llt.solve(Mat::Identity(n, n));
  z = (z + z.adjoint()) * 0.5;
  Mat m = partial_trace_first(z, dA, dB);
  Mat mis = psd_power_on_support(m, -0.5, 0.0);
  Mat xm = kron(ia, mis);
  Mat y = xm * z * xm;
  double dual = (rho * y).trace().real();
  double primal = sigma.trace().real();
  res.optimum = primal;
  res.dual_value = dual;
  res.residual = std::max(0.0, primal - dual) / primal;
  res.sigma = sigma;
  res.certificate = sigma / primal;
  res.iterations = iters;
  res.hmin = -std::log2(primal);
  res.feasibility = lambda_min(kron(ia, sigma) - rho);
  res.converged = res.residual < 1e-7 && res.feasibility >= -1e-8;
  return res;
}

ConeProgramResult conditional_min_entropy(const LabeledState& rho, const Labels& cond,
                                          const ConeOptions& opt) {
  Labels A = complement(rho, cond);
  Labels order = merge(A, cond);
  LabeledState r = reorder(rho, order);
  return conditional_min_entropy(r.matrix(), r.dim_of(A), opt);
}

double collision_entropy(const Mat& rho, int dA, const Mat& sigma) {
  SupportSplit sp = split_support(sigma, -0.25);
  if (!sp.full_rank && kernel_leak(rho, dA, sp.kernel) > kSupportTol)
    throw SupportViolation("rho is not supported on I (x) supp(sigma)");
  Mat c = conj_blocks(rho, dA, sp.inv_sqrt);
  double tr2 = (c * c).trace().real();
  return -std::log2(tr2);
}

double collision_entropy(const LabeledState& rho, const LabeledState& sigma) {
  Labels B = sigma.labels();
  Labels A = complement(rho, B);
  LabeledState r = reorder(rho, merge(A, B));
  return collision_entropy(r.matrix(), r.dim_of(A), sigma.matrix());
}

double collision_entropy_of_marginal(const LabeledState& s, const Labels& A, const Labels& B,
                                     const Mat& sigma) {
  check_disjoint(A, B);
  Labels order = merge(A, B);
  const int dA = s.dim_of(A);
  const int dB = s.dim_of(B);
  if (s.has_vector() && s.dim() / (dA * dB) < dA * dB) {
    Mat v = marginal_factor(s, order);
    SupportSplit sp = split_support(sigma, -0.25);
    if (!sp.full_rank && left_blocks(v, dA, sp.kernel).squaredNorm() > kSupportTol)
      throw SupportViolation("rho is not supported on I (x) supp(sigma)");
    Mat xv = left_blocks(v, dA, sp.inv_sqrt);
    Mat g = xv.adjoint() * xv;
    return -std::log2((g * g).trace().real());
  }
  return collision_entropy(ordered_marginal(s, order), dA, sigma);
}

double max_entropy(const Mat& rho) {
  RVec v = pos_spectrum(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::sqrt(std::max(0.0, v(i)));
  return 2.0 * std::log2(s);
}

double conditional_max_entropy(const LabeledState& rho, const Labels& cond, const ConeOptions& opt) {
  Labels A = complement(rho, cond);
  if (cond.empty()) return max_entropy(reduced_matrix(rho, A));
  LabeledState pur = purify(rho, "__purifier");
  Labels keep = A;
  keep.push_back("__purifier");
  Labels order = merge(A, {"__purifier"});
  LabeledState ar = reorder(partial_trace(pur, keep), order);
  if (ar.dim_of({"__purifier"}) == 1) {
    // Pure rho^{AB}: conditioning on a trivial purifier.
    return -min_entropy(ar.matrix());
  }
  return -conditional_min_entropy(ar.matrix(), ar.dim_of(A), opt).hmin;
}

double h0(const Mat& rho) {
  RVec v = pos_spectrum(rho);
  double top = v(v.size() - 1);
  int rank = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) > 1e-12 * std::max(1.0, top)) ++rank;
  return std::log2(static_cast<double>(rank));
}

EntropyReport entropy_report(const LabeledState& s, const Labels& a, const Labels& b, bool one_shot) {
  check_disjoint(a, b);
  Labels ab = merge(a, b);
  EntropyReport r;
  r.S = von_neumann(s, ab);
  std::string an = join_labels(a), bn = join_labels(b);
  double sa = von_neumann(s, a), sb = von_neumann(s, b);
  r.cond[an + "|" + bn] = r.S - sb;
  r.cond[bn + "|" + an] = r.S - sa;
  r.coherent[an + ">" + bn] = sb - r.S;
  r.coherent[bn + ">" + an] = sa - r.S;
  r.mutual[an + ";" + bn] = sa + sb - r.S;
  if (one_shot) {
    Mat rb = b.empty() ? Mat::Identity(1, 1) : reduced_matrix(reorder(partial_trace(s, ab), ab), b);
    try {
      r.hmin_rel = min_entropy_of_marginal(s, a, b, rb);
      r.h2_rel = collision_entropy_of_marginal(s, a, b, rb);
    } catch (const SupportViolation&) {
    }
    LabeledState sab = reorder(partial_trace(s, ab), ab);
    if (sab.dim() <= 256) r.hmax_cond = conditional_max_entropy(sab, b);
    r.h0 = h0(reduced_matrix(s, a));
  }
  return r;
}

double smooth_max_lower_bound(std::vector<double> spectrum, double eps) {
  if (eps < 0.0 || eps >= 0.5) throw std::invalid_argument("smooth_max_lower_bound: eps outside [0, 1/2)");
  double total = 0.0;
  for (double& x : spectrum) {
    if (x < 0.0) {
      if (x < -kEigClamp) throw std::invalid_argument("smooth_max_lower_bound: negative eigenvalue");
      x = 0.0;
    }
    total += x;
  }
  if (total > 1.0 + 1e-10) throw std::invalid_argument("smooth_max_lower_bound: spectrum sums above 1");
  std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());
  const int d = static_cast<int>(spectrum.size());
  // Smallest k in 1..d with sum_{j>k} r_j <= 2 eps; the objective grows with k.
  std::vector<double> tail(d + 1, 0.0);
  for (int j = d - 1; j >= 0; --j) tail[j] = tail[j + 1] + spectrum[j];
  for (int k = 1; k <= d; ++k) {
    if (tail[k] <= 2.0 * eps + 1e-15) {
      double s = 0.0;
      for (int j = 0; j < k - 1; ++j) s += std::sqrt(spectrum[j]);
      if (s <= 0.0) return -std::numeric_limits<double>::infinity();
      return 2.0 * std::log2(s);
    }
  }
  return -std::numeric_limits<double>::infinity();
}

double fannes_eta(double x) {
  if (x <= 0.0) return 0.0;
  const double inv_e = std::exp(-1.0);
  if (x <= inv_e) return x - x * std::log2(x);
  return x + std::log2(std::exp(1.0)) / std::exp(1.0);
}

double fannes_bound(int d, double eps) {
  if (eps < 0.0) throw std::invalid_argument("fannes_bound: eps must be non-negative");
  return fannes_eta(eps) * std::log2(static_cast<double>(d));
}

double renes_smoothing_bound(double S_cond, double d, double delta, double eps) {
  if (delta < 0.0 || delta >= 0.25) throw std::invalid_argument("renes_smoothing_bound: delta outside [0, 1/4)");
  return S_cond + 8.0 * delta * (eps + 1.0) * std::log2(d) + 2.0 * binary_entropy(2.0 * delta);
}

}  // namespace entlab
