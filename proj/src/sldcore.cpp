// SPDX-License-Identifier: Apache-2.0
#include "qig/sldcore.hpp"

#include <cmath>
#include <stdexcept>

namespace qig::sldcore {

Matrix2c SldOperator::matrix() const {
  Matrix2c m;
  m << cplx(xi, 0), cplx(a, b), cplx(a, -b), cplx(yi, 0);
  return m;
}

SldOperator sld_closed_form(const SldInputs& in, double tau) {
  const double alpha = in.alpha();
  const double beta = in.beta();
  const double delta = in.delta();
  if (delta < tau)
    throw std::domain_error("sld_closed_form: boundary stratum: use support-projected pseudoinverse");

  // [[x - alpha, -alpha], [-alpha, 1 - x - alpha]] [xi, yi]^T = rhs,
  // determinant = delta > 0, matrix is SPD on the regular set.
  Eigen::Matrix2d A;
  A << in.x - alpha, -alpha, -alpha, 1.0 - in.x - alpha;
  Eigen::Vector2d rhs(in.dx - beta, -in.dx - beta);
  Eigen::LDLT<Eigen::Matrix2d> ldlt(A);
  if (ldlt.info() != Eigen::Success)
    throw std::domain_error("sld_closed_form: factorization failed");
  const Eigen::Vector2d sol = ldlt.solve(rhs);

  SldOperator L;
  L.xi = sol(0);
  L.yi = sol(1);
  const double S = L.xi + L.yi;
  L.a = 2.0 * in.dz.real() - in.z.real() * S;
  L.b = 2.0 * in.dz.imag() - in.z.imag() * S;
  return L;
}

double lyapunov_residual(const SldInputs& in, const SldOperator& L) {
  Matrix2c rho;
  rho << cplx(in.x, 0), in.z, std::conj(in.z), cplx(1.0 - in.x, 0);
  Matrix2c drho;
  drho << cplx(in.dx, 0), in.dz, std::conj(in.dz), cplx(-in.dx, 0);
  const Matrix2c Lm = L.matrix();
  return (drho - 0.5 * (rho * Lm + Lm * rho)).norm();
}

MatrixXd sld_qfim(const Matrix2c& rho, const std::vector<SldOperator>& L_list) {
  const int m = static_cast<int>(L_list.size());
  std::vector<Matrix2c> Ls(m);
  for (int i = 0; i < m; ++i) Ls[i] = L_list[i].matrix();
  MatrixXd F(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const cplx tr = (rho * (Ls[i] * Ls[j] + Ls[j] * Ls[i])).trace();
      F(i, j) = 0.5 * tr.real();
      F(j, i) = F(i, j);
    }
  return F;
}

}  // namespace qig::sldcore
