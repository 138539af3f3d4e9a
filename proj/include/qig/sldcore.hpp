// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qig/linops.hpp"

namespace qig::sldcore {

using Eigen::MatrixXd;
using linops::Matrix2c;
using linops::cplx;

/// Inputs of the closed-form 2x2 SLD solve for one tangent direction.
struct SldInputs {
  double x = 0;
  cplx z = 0;
  double dx = 0;
  cplx dz = 0;

  double alpha() const { return std::norm(z); }
  double beta() const { return 2.0 * std::real(dz * std::conj(z)); }
  double delta() const { return x * (1.0 - x) - alpha(); }
};

/// L = [[xi, a+ib], [a-ib, yi]], solving d rho = (rho L + L rho)/2.
struct SldOperator {
  double xi = 0, yi = 0, a = 0, b = 0;

  Matrix2c matrix() const;
  double trace_part() const { return xi + yi; }  // S_i = 2 C_i / C on-shell
};

/// Closed-form SLD via the symmetric 2x2 system, solved by LDL^T.
/// Throws std::domain_error when delta < tau (boundary stratum).
SldOperator sld_closed_form(const SldInputs& in, double tau = 1e-12);

/// Lyapunov residual || d rho - (rho L + L rho)/2 ||_F.
double lyapunov_residual(const SldInputs& in, const SldOperator& L);

/// F_ij = Tr[rho (L_i L_j + L_j L_i)] / 2.
MatrixXd sld_qfim(const Matrix2c& rho, const std::vector<SldOperator>& L_list);

}  // namespace qig::sldcore
