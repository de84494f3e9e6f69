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

// Independent reference implementations used only by the tests. They are
// deliberately naive (explicit multi-index loops, grids, brute-force counting)
// so that they share no code paths with the library beyond Eigen itself.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline std::vector<int> digits(std::size_t idx, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    d[k] = static_cast<int>(idx % dims[k]);
    idx /= dims[k];
  }
  return d;
}

inline std::size_t index_of(const std::vector<int>& d, const std::vector<int>& dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + d[k];
  return idx;
}

// Partial trace keeping the systems flagged in `keep` (original order).
inline Mat partial_trace(const Mat& rho, const std::vector<int>& dims, const std::vector<bool>& keep) {
  std::vector<int> kd;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (keep[k]) kd.push_back(dims[k]);
  std::size_t dk = 1;
  for (int x : kd) dk *= x;
  Mat out = Mat::Zero(dk, dk);
  const std::size_t n = rho.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto di = digits(i, dims), dj = digits(j, dims);
      bool diag = true;
      std::vector<int> ki, kj;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (keep[k]) {
          ki.push_back(di[k]);
          kj.push_back(dj[k]);
        } else if (di[k] != dj[k]) {
          diag = false;
        }
      }
      if (diag) out(index_of(ki, kd), index_of(kj, kd)) += rho(i, j);
    }
  return out;
}

inline double entropy_bits(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  double s = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double x = es.eigenvalues()(i);
    if (x > 1e-300) s -= x * std::log2(x);
  }
  return s;
}

inline double shannon(const std::vector<double>& p) {
  double s = 0;
  for (double x : p)
    if (x > 0) s -= x * std::log2(x);
  return s;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// lambda_max((I (x) sigma)^{-1/2} rho (I (x) sigma)^{-1/2}) for the qubit sigma with
// Bloch vector v; returns +inf outside the open ball.
inline double hmin_objective_2x2(const Mat& rho, const double v[3]) {
  const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (r2 >= 1.0 - 1e-12) return 1e300;
  Mat sig(2, 2);
  sig << (1 + v[2]) / 2, cplx(v[0], -v[1]) / 2.0, cplx(v[0], v[1]) / 2.0, (1 - v[2]) / 2;
  Eigen::SelfAdjointEigenSolver<Mat> es(sig);
  Mat is = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
           es.eigenvectors().adjoint();
  Mat c = kron(Mat::Identity(2, 2), is);
  Mat t = c * rho * c;
  t = (t + t.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> et(t, Eigen::EigenvaluesOnly);
  return et.eigenvalues().maxCoeff();
}

// H_min(A|B) for a 2 x 2 state: a grid over the Bloch ball followed by a
// compass search from the best grid point. Every evaluated point is feasible, so
// the result never exceeds the true optimum.
inline double hmin_grid_2x2(const Mat& rho, int steps = 40) {
  double best = 1e300, bv[3] = {0, 0, 0};
  const double pi = std::acos(-1.0);
  for (int ir = 0; ir <= steps; ++ir) {
    double r = 0.999 * ir / steps;
    int nt = ir == 0 ? 1 : steps;
    for (int it = 0; it < nt; ++it) {
      double th = pi * (it + 0.5) / nt;
      int np = ir == 0 ? 1 : 2 * steps;
      for (int ip = 0; ip < np; ++ip) {
        double ph = 2 * pi * ip / np;
        double v[3] = {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th)};
        double f = hmin_objective_2x2(rho, v);
        if (f < best) {
          best = f;
          for (int k = 0; k < 3; ++k) bv[k] = v[k];
        }
      }
    }
  }
  for (double h = 0.05; h > 1e-9;) {
    bool moved = false;
    for (int k = 0; k < 3; ++k)
      for (double sgn : {1.0, -1.0}) {
        double v[3] = {bv[0], bv[1], bv[2]};
        v[k] += sgn * h;
        double f = hmin_objective_2x2(rho, v);
        if (f < best) {
          best = f;
          for (int j = 0; j < 3; ++j) bv[j] = v[j];
          moved = true;
        }
      }
    if (!moved) h /= 2;
  }
  return -std::log2(best);
}

inline double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Brute-force enumeration of delta-typical strings of length n over p.
struct TypicalBrute {
  double count = 0, mass = 0, min_prob = 1, max_prob = 0;
};
inline TypicalBrute typical_brute(const std::vector<double>& p, int n, double delta) {
  TypicalBrute t;
  const int d = static_cast<int>(p.size());
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  std::vector<int> dims(n, d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto s = digits(idx, dims);
    std::vector<int> c(d, 0);
    for (int x : s) ++c[x];
    bool typ = true;
    double pr = 1;
    for (int a = 0; a < d; ++a) {
      if (p[a] == 0 && c[a] > 0) typ = false;
      if (std::abs(static_cast<double>(c[a]) / n - p[a]) > delta + 1e-12) typ = false;
      pr *= std::pow(p[a], c[a]);
    }
    if (!typ) continue;
    t.count += 1;
    t.mass += pr;
    t.min_prob = std::min(t.min_prob, pr);
    t.max_prob = std::max(t.max_prob, pr);
  }
  return t;
}

}  // namespace oracle
