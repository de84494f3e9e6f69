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

#include "entlab/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace entlab {

double xlog2x(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) h -= xlog2x(v);
  return h;
}

double max_antihermitian(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Mat symmetrize(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetrize: matrix not square");
  if (m.size() == 0) return m;
  Mat h = (m + m.adjoint()) * 0.5;
  double corr = (h - m).cwiseAbs().maxCoeff();
  if (corr > kSymmetrizeReject)
    throw std::domain_error("symmetrize: Hermiticity correction " + std::to_string(corr) +
                            " exceeds tolerance");
  return h;
}

RVec hermitian_eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  RVec v = es.eigenvalues();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0.0 && v(i) >= -kEigClamp) v(i) = 0.0;
  return v;
}

EigenPair hermitian_eigen(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  EigenPair out{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index i = 0; i < out.values.size(); ++i)
    if (out.values(i) < 0.0 && out.values(i) >= -kEigClamp) out.values(i) = 0.0;
  return out;
}

Mat psd_sqrt(const Mat& m) {
  return hermitian_func(m, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

Mat psd_power_on_support(const Mat& m, double p, double tol) {
  return hermitian_func(m, [p, tol](double x) { return x > tol ? std::pow(x, p) : 0.0; });
}

double trace_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  if (max_antihermitian(m) < 1e-12) {
    RVec v = Eigen::SelfAdjointEigenSolver<Mat>(m, Eigen::EigenvaluesOnly).eigenvalues();
    return v.cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

double hs_norm(const Mat& m) { return m.norm(); }

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_all(const std::vector<Mat>& ms) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& m : ms) out = kron(out, m);
  return out;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u) - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

double lambda_min(const Mat& m) {
  return Eigen::SelfAdjointEigenSolver<Mat>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

double lambda_max(const Mat& m) {
  RVec v = Eigen::SelfAdjointEigenSolver<Mat>(m, Eigen::EigenvaluesOnly).eigenvalues();
  return v(v.size() - 1);
}

}  // namespace entlab
