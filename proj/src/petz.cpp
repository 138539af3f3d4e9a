// SPDX-License-Identifier: Apache-2.0
#include "qig/petz.hpp"

#include <cmath>
#include <stdexcept>

namespace qig::petz {

namespace {

double f_sld(double t) { return 0.5 * (1.0 + t); }

double f_wy(double t) {
  const double s = 0.5 * (1.0 + std::sqrt(t));
  return s * s;
}

// (t-1)/ln t, with the removable singularity at t=1 handled by series.
double f_bkm(double t) {
  const double u = t - 1.0;
  if (std::abs(u) < 1e-6) return 1.0 + u / 2.0 - u * u / 12.0 + u * u * u / 24.0;
  return u / std::log(t);
}

void check_symmetry(const std::string& name, const std::function<double(double)>& f, double tol) {
  if (std::abs(f(1.0) - 1.0) > tol)
    throw std::invalid_argument("operator-monotone spec '" + name + "': f(1) != 1");
  for (int k = -12; k <= 12; ++k) {
    const double t = std::pow(10.0, k / 4.0);
    const double lhs = f(t);
    const double rhs = t * f(1.0 / t);
    if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs)))
      throw std::invalid_argument("operator-monotone spec '" + name + "': f(t) != t f(1/t)");
  }
}

}  // namespace

OperatorMonotoneSpec OperatorMonotoneSpec::sld() {
  return {MonotoneFamily::SldBures, "sld", f_sld};
}
OperatorMonotoneSpec OperatorMonotoneSpec::wigner_yanase() {
  return {MonotoneFamily::WignerYanase, "wy", f_wy};
}
OperatorMonotoneSpec OperatorMonotoneSpec::bkm() {
  return {MonotoneFamily::Bkm, "bkm", f_bkm};
}

OperatorMonotoneSpec OperatorMonotoneSpec::from_name(const std::string& name) {
  if (name == "sld" || name == "bures") return sld();
  if (name == "wy" || name == "wigner-yanase") return wigner_yanase();
  if (name == "bkm") return bkm();
  throw std::invalid_argument("unknown Petz metric name: " + name);
}

OperatorMonotoneSpec OperatorMonotoneSpec::custom(const std::string& name,
                                                  std::function<double(double)> f) {
  check_symmetry(name, f, 1e-8);
  return {MonotoneFamily::Custom, name, std::move(f)};
}

double mc_kernel(const OperatorMonotoneSpec& spec, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("mc_kernel: arguments must be positive");
  // c_f(a,a) = 1/a exactly since f(1)=1; route near-coincident pairs through
  // the same ratio to avoid cancellation in f's own branch handling.
  return 1.0 / (b * spec.f(a / b));
}

BlochCoefficients bloch_coeffs(const OperatorMonotoneSpec& spec, double r) {
  if (!(r > 0.0) || !(r < 1.0)) throw std::domain_error("bloch_coeffs: r outside (0,1)");
  const double lp = 0.5 * (1.0 + r);
  const double lm = 0.5 * (1.0 - r);
  const double cpm = mc_kernel(spec, lp, lm);
  const double cpp = mc_kernel(spec, lp, lp);
  const double cmm = mc_kernel(spec, lm, lm);
  BlochCoefficients out;
  out.r = r;
  out.A = 0.5 * cpm;
  out.B = (cpp + cmm - 2.0 * cpm) / (4.0 * r * r);
  return out;
}

MatrixXd qfim_bloch(const OperatorMonotoneSpec& spec, const Vector3d& r_vec,
                    const std::vector<Vector3d>& dr_list) {
  const double r = r_vec.norm();
  if (r >= 1.0) throw std::domain_error("qfim_bloch: Bloch vector on or outside the sphere");
  const int m = static_cast<int>(dr_list.size());
  MatrixXd F(m, m);
  double A = 1.0, B = 1.0;
  if (r > 0.0) {
    const BlochCoefficients c = bloch_coeffs(spec, r);
    A = c.A;
    B = c.B;
  } else {
    // r -> 0 limit: radial term vanishes, A from the coincident kernel.
    A = 0.5 * mc_kernel(spec, 0.5, 0.5);
    B = 0.0;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const double v = A * dr_list[i].dot(dr_list[j]) +
                       B * (r_vec.dot(dr_list[i])) * (r_vec.dot(dr_list[j]));
      F(i, j) = v;
      F(j, i) = v;
    }
  return F;
}

MatrixXd qfim_eigenbasis_oracle(const OperatorMonotoneSpec& spec, const Matrix2c& rho,
                                const std::vector<Matrix2c>& drho_list) {
  const linops::Eig2 eig = linops::eigh_hermitian2(rho);
  if (eig.values.minCoeff() <= 1e-14) throw std::domain_error("oracle requires full rank");
  const int m = static_cast<int>(drho_list.size());

  // <a| d_i rho |b> for a,b in {0,1}
  std::vector<Eigen::Matrix2cd> me(m);
  for (int i = 0; i < m; ++i) me[i] = eig.vectors.adjoint() * drho_list[i] * eig.vectors;

  MatrixXd F = MatrixXd::Zero(m, m);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double c = mc_kernel(spec, eig.values(a), eig.values(b));
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          const double v = c * std::real(me[i](a, b) * std::conj(me[j](a, b)));
          F(i, j) += v;
          if (j != i) F(j, i) += v;
        }
    }
  return F;
}

Matrix2d three_channel(const OperatorMonotoneSpec& spec, double x, cplx z,
                       const SliceDerivatives& d) {
  const double delta = x * (1.0 - x) - std::norm(z);
  if (!(delta > 0.0)) throw std::domain_error("three_channel: pure-reduction stratum");
  const double C = 2.0 * std::sqrt(delta);
  if (!(C < 1.0)) {
    // maximally mixed reduction: r = 0, concurrence channel drops out
    const double A0 = 0.5 * mc_kernel(spec, 0.5, 0.5);
    Matrix2d F;
    F(0, 0) = 4.0 * A0 * (d.x_u * d.x_u + std::norm(d.z_u));
    F(0, 1) = 4.0 * A0 * (d.x_u * d.x_v + std::real(d.z_u * std::conj(d.z_v)));
    F(1, 0) = F(0, 1);
    F(1, 1) = 4.0 * A0 * (d.x_v * d.x_v + std::norm(d.z_v));
    return F;
  }
  const double r = std::sqrt(1.0 - C * C);
  const BlochCoefficients c = bloch_coeffs(spec, r);
  const double A = c.A;
  const double Bt = c.B_tilde();

  const double pop_uu = d.x_u * d.x_u + std::norm(d.z_u);
  const double pop_uv = d.x_u * d.x_v + std::real(d.z_u * std::conj(d.z_v));
  const double pop_vv = d.x_v * d.x_v + std::norm(d.z_v);

  Matrix2d F;
  F(0, 0) = 4.0 * A * pop_uu + Bt * d.C_u * d.C_u;
  F(0, 1) = 4.0 * A * pop_uv + Bt * d.C_u * d.C_v;
  F(1, 0) = F(0, 1);
  F(1, 1) = 4.0 * A * pop_vv + Bt * d.C_v * d.C_v;
  return F;
}

}  // namespace qig::petz
