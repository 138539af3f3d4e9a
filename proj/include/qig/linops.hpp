// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace qig::linops {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Matrix2c = Eigen::Matrix2cd;
using cplx = std::complex<double>;

/// Eigendecomposition of a 2x2 Hermitian matrix, closed form.
/// Eigenvalues descending; eigenvector columns orthonormal with the
/// largest-magnitude component made real positive.
struct Eig2 {
  Eigen::Vector2d values;
  Matrix2c vectors;
};
Eig2 eigh_hermitian2(const Matrix2c& H);

/// Full spectral decomposition of a real symmetric matrix, eigenvalues
/// descending, eigenvector sign fixed (largest-|.| component positive).
/// active_count is left 0; callers set it after thresholding.
struct EigenSplit {
  VectorXd values;
  MatrixXd vectors;
  int active_count = 0;
};
EigenSplit eigh_sym(const MatrixXd& M);

/// Support-restricted ridge pseudoinverse:
///   sum over active a of (lambda_a + ridge)^-1 v_a v_a^T.
/// Throws std::domain_error if an active eigenvalue + ridge is <= 0.
MatrixXd pinv_on_support(const EigenSplit& split, double ridge = 0.0);

// Centered finite differences. Callers own any guard logic.
using ScalarField = std::function<double(const VectorXd&)>;
using MatrixField = std::function<MatrixXd(const VectorXd&)>;

double central_diff(const ScalarField& phi, const VectorXd& theta, int i, double h);
double central_diff2(const ScalarField& phi, const VectorXd& theta, int i, double h);
double central_diff_mixed(const ScalarField& phi, const VectorXd& theta, int i, int j, double h);

MatrixXd central_diff(const MatrixField& phi, const VectorXd& theta, int i, double h);

}  // namespace qig::linops
