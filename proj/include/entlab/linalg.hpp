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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace entlab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;
inline constexpr double kSymmetrizeReject = 1e-8;
inline constexpr double kEigClamp = 1e-10;

// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);
double binary_entropy(double x);
double shannon_entropy(const std::vector<double>& p);

double max_antihermitian(const Mat& m);
// (M + M^dagger)/2; throws if the correction exceeds kSymmetrizeReject.
Mat symmetrize(const Mat& m);

// Eigenvalues ascending; values in [-kEigClamp, 0) are set to 0.
RVec hermitian_eigenvalues(const Mat& m);
struct EigenPair {
  RVec values;  // ascending
  Mat vectors;
};
EigenPair hermitian_eigen(const Mat& m);

// f applied to the spectrum of a Hermitian matrix.
template <class F>
Mat hermitian_func(const Mat& m, F f) {
  EigenPair e = hermitian_eigen(m);
  RVec fv(e.values.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = f(e.values(i));
  return e.vectors * fv.asDiagonal() * e.vectors.adjoint();
}

Mat psd_sqrt(const Mat& m);
// m^p on the support; kernel directions (eigenvalue <= tol) map to 0.
Mat psd_power_on_support(const Mat& m, double p, double tol = 1e-12);

double trace_norm(const Mat& m);
double hs_norm(const Mat& m);
double operator_norm(const Mat& m);
Mat kron(const Mat& a, const Mat& b);
Mat kron_all(const std::vector<Mat>& ms);
bool is_unitary(const Mat& u, double tol = 1e-10);

// Smallest eigenvalue of a Hermitian matrix.
double lambda_min(const Mat& m);
double lambda_max(const Mat& m);

}  // namespace entlab
