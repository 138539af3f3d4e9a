// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qig/linops.hpp"

namespace qig::petz {

using Eigen::MatrixXd;
using Eigen::Matrix2d;
using Eigen::Vector3d;
using linops::Matrix2c;
using linops::cplx;

enum class MonotoneFamily { SldBures, WignerYanase, Bkm, Custom };

/// A Petz monotone metric, selected by its operator-monotone function f
/// with f(1)=1 and the symmetry f(t) = t f(1/t).
///
/// Built-ins: SLD/Bures f=(1+t)/2, Wigner-Yanase f=((1+sqrt(t))/2)^2,
/// BKM f=(t-1)/ln t (series near t=1).
struct OperatorMonotoneSpec {
  MonotoneFamily family = MonotoneFamily::SldBures;
  std::string name = "sld";
  std::function<double(double)> f;

  static OperatorMonotoneSpec sld();
  static OperatorMonotoneSpec wigner_yanase();
  static OperatorMonotoneSpec bkm();
  static OperatorMonotoneSpec from_name(const std::string& name);
  /// Custom f: validated numerically (f(1)=1 and the f-symmetry on a
  /// log-spaced grid); throws std::invalid_argument on violation > 1e-8.
  static OperatorMonotoneSpec custom(const std::string& name, std::function<double(double)> f);
};

/// Morozova-Chentsov kernel c_f(a,b) = 1 / (b f(a/b)), a,b > 0.
double mc_kernel(const OperatorMonotoneSpec& spec, double a, double b);

/// Radial/tangential coefficients of the qubit Bloch form
///   F_{mu nu} = A_f(r) dr_mu . dr_nu + B_f(r) (r.dr_mu)(r.dr_nu),
/// for eigenvalues lambda_pm = (1 +- r)/2:
///   A_f = c_f(l+, l-) / 2
///   B_f = [c_f(l+,l+) + c_f(l-,l-) - 2 c_f(l+,l-)] / (4 r^2)
/// SLD recovers A=1, B=1/(1-r^2). B_tilde = B (1-r^2) is the coefficient
/// of C_mu C_nu in the three-channel form (identically 1 for SLD).
struct BlochCoefficients {
  double A = 0, B = 0, r = 0;
  double B_tilde() const { return B * (1.0 - r * r); }
};
BlochCoefficients bloch_coeffs(const OperatorMonotoneSpec& spec, double r);

/// Petz QFIM over the given tangent directions of the Bloch vector.
MatrixXd qfim_bloch(const OperatorMonotoneSpec& spec, const Vector3d& r_vec,
                    const std::vector<Vector3d>& dr_list);

/// Eigenbasis form, the oracle route:
///   F_ij = sum_{a,b} c_f(l_a, l_b) Re[ <a|d_i rho|b> conj(<a|d_j rho|b>) ].
/// Requires full-rank rho (min eigenvalue > 1e-14).
MatrixXd qfim_eigenbasis_oracle(const OperatorMonotoneSpec& spec, const Matrix2c& rho,
                                const std::vector<Matrix2c>& drho_list);

/// Slice derivatives of the reduced variables (x, z) and the concurrence.
struct SliceDerivatives {
  double x_u = 0, x_v = 0;
  cplx z_u = 0, z_v = 0;
  double C_u = 0, C_v = 0;
};

/// Three-channel decomposition on a 2D slice:
///   F_{mu nu} = 4 A_f (x_mu x_nu + Re(z_mu conj(z_nu))) + B_tilde C_mu C_nu
/// with r = sqrt(1 - C^2), C = 2 sqrt(x(1-x) - |z|^2).
/// Throws std::domain_error on the pure-reduction stratum (Delta <= 0).
Matrix2d three_channel(const OperatorMonotoneSpec& spec, double x, cplx z,
                       const SliceDerivatives& d);

}  // namespace qig::petz
