// SPDX-License-Identifier: Apache-2.0
#include "qig/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qig::noise {

Matrix4c depolarize(const Matrix4c& rho, double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("depolarize: p outside [0,1]");
  return (1.0 - p) * rho + (p / 4.0) * Matrix4c::Identity();
}

Matrix4c amp_damp_on_qubit(const Matrix4c& rho, double eta, int which) {
  if (eta < 0.0 || eta > 1.0) throw std::domain_error("amp_damp: eta outside [0,1]");
  if (which != 0 && which != 1) throw std::domain_error("amp_damp: qubit index");
  Matrix2c E0 = Matrix2c::Zero(), E1 = Matrix2c::Zero();
  E0(0, 0) = 1.0;
  E0(1, 1) = std::sqrt(1.0 - eta);
  E1(0, 1) = std::sqrt(eta);
  const Matrix2c I = Matrix2c::Identity();

  const auto kron = [](const Matrix2c& a, const Matrix2c& b) {
    Matrix4c out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
  };
  const Matrix4c K0 = which == 0 ? kron(E0, I) : kron(I, E0);
  const Matrix4c K1 = which == 0 ? kron(E1, I) : kron(I, E1);
  return K0 * rho * K0.adjoint() + K1 * rho * K1.adjoint();
}

Matrix2c partial_trace_B(const Matrix4c& rho) {
  Matrix2c out;
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2) out(a, a2) = rho(2 * a, 2 * a2) + rho(2 * a + 1, 2 * a2 + 1);
  return out;
}

Matrix2c partial_trace_A(const Matrix4c& rho) {
  Matrix2c out;
  for (int b = 0; b < 2; ++b)
    for (int b2 = 0; b2 < 2; ++b2) out(b, b2) = rho(b, b2) + rho(2 + b, 2 + b2);
  return out;
}

curvature::ReducedModel apply(curvature::ReducedModel base, const NoiseSetting& setting) {
  if (setting.channel == Channel::None) return base;
  if (setting.channel == Channel::AmpDamping && setting.qubit == 1) return base;

  if (setting.channel == Channel::Depolarizing) {
    const double p = setting.level;
    return [base, p](const curvature::VectorXd& theta, int order) {
      hea::ReducedJet j = base(theta, order);
      j.x = (1.0 - p) * j.x + 0.5 * p;
      j.z *= (1.0 - p);
      j.dx *= (1.0 - p);
      j.dz *= (1.0 - p);
      if (j.order >= 2) {
        j.d2x *= (1.0 - p);
        j.d2z *= (1.0 - p);
      }
      return j;
    };
  }
  // amplitude damping on the kept qubit A
  const double eta = setting.level;
  return [base, eta](const curvature::VectorXd& theta, int order) {
    hea::ReducedJet j = base(theta, order);
    const double se = std::sqrt(1.0 - eta);
    j.x = j.x + eta * (1.0 - j.x);
    j.z *= se;
    j.dx *= (1.0 - eta);
    j.dz *= se;
    if (j.order >= 2) {
      j.d2x *= (1.0 - eta);
      j.d2z *= se;
    }
    return j;
  };
}

}  // namespace qig::noise
