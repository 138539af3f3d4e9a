// SPDX-License-Identifier: Apache-2.0
#include "qig/linops.hpp"

#include <cmath>
#include <stdexcept>

namespace qig::linops {

namespace {

// Fix the overall phase/sign of an eigenvector column: the entry with the
// largest magnitude is rotated to the positive real axis.
void fix_phase(Matrix2c& V) {
  for (int c = 0; c < 2; ++c) {
    int imax = std::abs(V(0, c)) >= std::abs(V(1, c)) ? 0 : 1;
    cplx p = V(imax, c);
    double m = std::abs(p);
    if (m > 0) V.col(c) *= std::conj(p) / m;
  }
}

void fix_sign(MatrixXd& V) {
  for (int c = 0; c < V.cols(); ++c) {
    int imax = 0;
    V.col(c).cwiseAbs().maxCoeff(&imax);
    if (V(imax, c) < 0) V.col(c) = -V.col(c);
  }
}

}  // namespace

Eig2 eigh_hermitian2(const Matrix2c& H) {
  const double a = H(0, 0).real();
  const double d = H(1, 1).real();
  const cplx b = H(0, 1);
  const double tr = a + d;
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(b));
  Eig2 out;
  out.values << 0.5 * (tr + disc), 0.5 * (tr - disc);

  if (disc < 1e-300) {
    out.vectors = Matrix2c::Identity();
    return out;
  }
  // (b, lambda - a) and (lambda - d, conj(b)) are parallel eigenvector
  // candidates; the larger-norm one is the numerically stable choice.
  for (int k = 0; k < 2; ++k) {
    const double lam = out.values(k);
    Eigen::Vector2cd va, vb;
    va << b, cplx(lam - a, 0.0);
    vb << cplx(lam - d, 0.0), std::conj(b);
    Eigen::Vector2cd v = va.norm() >= vb.norm() ? va : vb;
    double n = v.norm();
    if (n < 1e-300) {
      v = (k == 0) ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
      n = 1.0;
    }
    out.vectors.col(k) = v / n;
  }
  fix_phase(out.vectors);
  return out;
}

EigenSplit eigh_sym(const MatrixXd& M) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
  const int m = static_cast<int>(M.rows());
  EigenSplit split;
  split.values = VectorXd(m);
  split.vectors = MatrixXd(m, m);
  for (int k = 0; k < m; ++k) {  // ascending -> descending
    split.values(k) = es.eigenvalues()(m - 1 - k);
    split.vectors.col(k) = es.eigenvectors().col(m - 1 - k);
  }
  fix_sign(split.vectors);
  return split;
}

MatrixXd pinv_on_support(const EigenSplit& split, double ridge) {
  const int m = static_cast<int>(split.values.size());
  MatrixXd out = MatrixXd::Zero(m, m);
  for (int a = 0; a < split.active_count; ++a) {
    const double lam = split.values(a) + ridge;
    if (lam <= 0.0) throw std::domain_error("pinv_on_support: nonpositive active eigenvalue");
    out.noalias() += (1.0 / lam) * split.vectors.col(a) * split.vectors.col(a).transpose();
  }
  return out;
}

double central_diff(const ScalarField& phi, const VectorXd& theta, int i, double h) {
  VectorXd tp = theta, tm = theta;
  tp(i) += h;
  tm(i) -= h;
  return (phi(tp) - phi(tm)) / (2.0 * h);
}

double central_diff2(const ScalarField& phi, const VectorXd& theta, int i, double h) {
  VectorXd tp = theta, tm = theta;
  tp(i) += h;
  tm(i) -= h;
  return (phi(tp) - 2.0 * phi(theta) + phi(tm)) / (h * h);
}

double central_diff_mixed(const ScalarField& phi, const VectorXd& theta, int i, int j, double h) {
  VectorXd tpp = theta, tpm = theta, tmp = theta, tmm = theta;
  tpp(i) += h; tpp(j) += h;
  tpm(i) += h; tpm(j) -= h;
  tmp(i) -= h; tmp(j) += h;
  tmm(i) -= h; tmm(j) -= h;
  return (phi(tpp) - phi(tpm) - phi(tmp) + phi(tmm)) / (4.0 * h * h);
}

MatrixXd central_diff(const MatrixField& phi, const VectorXd& theta, int i, double h) {
  VectorXd tp = theta, tm = theta;
  tp(i) += h;
  tm(i) -= h;
  return (phi(tp) - phi(tm)) / (2.0 * h);
}

}  // namespace qig::linops
