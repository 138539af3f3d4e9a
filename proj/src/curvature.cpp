// SPDX-License-Identifier: Apache-2.0
#include "qig/curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qig::curvature {

using petz::OperatorMonotoneSpec;

ReducedModel circuit_model(const hea::CircuitSpec& spec) {
  return [spec](const VectorXd& theta, int order) {
    return hea::bloch_derivatives(spec, theta, order);
  };
}

PetzGeometry::PetzGeometry(ReducedModel model, MetricOptions opt)
    : model_(std::move(model)), opt_(std::move(opt)) {}

hea::ReducedQubitState PetzGeometry::reduced(const VectorXd& theta) const {
  const hea::ReducedJet j = model_(theta, 1);
  hea::ReducedQubitState s;
  s.x = j.x;
  s.z = j.z;
  return s;
}

namespace {

struct Coeffs {
  double A = 1, Bt = 1;    // A_f(r), B_tilde(r) = B_f (1-r^2)
  double dA = 0, dBt = 0;  // d/dr
};

Coeffs coeffs_at(const OperatorMonotoneSpec& spec, double r) {
  Coeffs c;
  if (spec.family == petz::MonotoneFamily::SldBures) return c;  // A=1, Bt=1 exactly
  const auto A_of = [&](double rr) { return petz::bloch_coeffs(spec, rr).A; };
  const auto Bt_of = [&](double rr) { return petz::bloch_coeffs(spec, rr).B_tilde(); };
  c.A = A_of(r);
  c.Bt = Bt_of(r);
  const double hr = std::min({1e-6, 0.5 * r, 0.5 * (1.0 - r)});
  c.dA = (A_of(r + hr) - A_of(r - hr)) / (2.0 * hr);
  c.dBt = (Bt_of(r + hr) - Bt_of(r - hr)) / (2.0 * hr);
  return c;
}

}  // namespace

MatrixXd PetzGeometry::qfim(const VectorXd& theta) const {
  const hea::ReducedJet j = model_(theta, 1);
  const int m = static_cast<int>(j.dx.size());
  const double delta = j.x * (1.0 - j.x) - std::norm(j.z);
  if (!(delta > 0.0)) throw std::domain_error("qfim: pure-reduction stratum");
  const double C = 2.0 * std::sqrt(delta);
  const double r = std::sqrt(std::max(1.0 - C * C, 0.0));

  VectorXd dC(m);
  for (int i = 0; i < m; ++i)
    dC(i) = ((1.0 - 2.0 * j.x) * j.dx(i) - 2.0 * std::real(std::conj(j.z) * j.dz(i))) /
            std::sqrt(delta);

  double A = 1.0, Bt = 1.0;
  if (opt_.spec.family != petz::MonotoneFamily::SldBures) {
    if (r > 1e-12) {
      const Coeffs c = coeffs_at(opt_.spec, r);
      A = c.A;
      Bt = c.Bt;
    } else {
      A = 0.5 * petz::mc_kernel(opt_.spec, 0.5, 0.5);
      Bt = 0.0;  // C-channel has zero derivative weight in the r->0 limit
    }
  }

  MatrixXd F(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k) {
      double pop = j.dx(i) * j.dx(k);
      if (!opt_.partial_fisher) pop += std::real(j.dz(i) * std::conj(j.dz(k)));
      const double v = 4.0 * A * pop + Bt * dC(i) * dC(k);
      F(i, k) = opt_.scale * v;
      F(k, i) = F(i, k);
    }
  return F;
}

void PetzGeometry::qfim_and_derivative(const VectorXd& theta, MatrixXd& F,
                                       std::vector<MatrixXd>& dF) const {
  const hea::ReducedJet j = model_(theta, 2);
  const int m = static_cast<int>(j.dx.size());
  const double delta = j.x * (1.0 - j.x) - std::norm(j.z);
  if (!(delta > 0.0)) throw std::domain_error("qfim: pure-reduction stratum");
  const double sd = std::sqrt(delta);
  const double C = 2.0 * sd;
  const double r = std::sqrt(std::max(1.0 - C * C, 1e-300));

  VectorXd dC(m);
  for (int i = 0; i < m; ++i)
    dC(i) = ((1.0 - 2.0 * j.x) * j.dx(i) - 2.0 * std::real(std::conj(j.z) * j.dz(i))) / sd;

  // d_k dC_i
  MatrixXd ddC(m, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) {
      const double num = -2.0 * j.dx(k) * j.dx(i) + (1.0 - 2.0 * j.x) * j.d2x(i, k) -
                         2.0 * std::real(std::conj(j.dz(k)) * j.dz(i)) -
                         2.0 * std::real(std::conj(j.z) * j.d2z(i, k));
      ddC(k, i) = num / sd - dC(i) * dC(k) / (2.0 * sd);
    }

  Coeffs c;
  if (opt_.spec.family != petz::MonotoneFamily::SldBures) c = coeffs_at(opt_.spec, r);
  // dr/dtheta_k = -C dC_k / r
  VectorXd dr(m);
  for (int k = 0; k < m; ++k) dr(k) = -C * dC(k) / r;

  const auto pop = [&](int i, int k) {
    double v = j.dx(i) * j.dx(k);
    if (!opt_.partial_fisher) v += std::real(j.dz(i) * std::conj(j.dz(k)));
    return v;
  };

  F.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k) {
      F(i, k) = opt_.scale * (4.0 * c.A * pop(i, k) + c.Bt * dC(i) * dC(k));
      F(k, i) = F(i, k);
    }

  dF.assign(m, MatrixXd(m, m));
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i)
      for (int l = i; l < m; ++l) {
        double dpop = j.d2x(i, k) * j.dx(l) + j.dx(i) * j.d2x(l, k);
        if (!opt_.partial_fisher)
          dpop += std::real(j.d2z(i, k) * std::conj(j.dz(l))) +
                  std::real(j.dz(i) * std::conj(j.d2z(l, k)));
        double v = 4.0 * c.A * dpop + c.Bt * (ddC(k, i) * dC(l) + dC(i) * ddC(k, l));
        if (opt_.spec.family != petz::MonotoneFamily::SldBures)
          v += (4.0 * c.dA * pop(i, l) + c.dBt * dC(i) * dC(l)) * dr(k);
        dF[k](i, l) = opt_.scale * v;
        dF[k](l, i) = dF[k](i, l);
      }
  }
}

support::SupportSplit PetzGeometry::split(const VectorXd& theta) const {
  const MatrixXd F = qfim(theta);
  return support::split_spectrum(F, support::tau_spec_of(F, opt_.guards));
}

MatrixXd PetzGeometry::metric(const VectorXd& theta) const {
  const MatrixXd F = qfim(theta);
  const auto s = support::split_spectrum(F, support::tau_spec_of(F, opt_.guards));
  return support::projected_metric(F, s);
}

void PetzGeometry::metric_and_derivative(const VectorXd& theta, MatrixXd& g,
                                         std::vector<MatrixXd>& dg) const {
  MatrixXd F;
  std::vector<MatrixXd> dF;
  qfim_and_derivative(theta, F, dF);
  const auto s = support::split_spectrum(F, support::tau_spec_of(F, opt_.guards));
  g = support::projected_metric(F, s);
  dg.resize(dF.size());
  for (size_t k = 0; k < dF.size(); ++k)
    dg[k] = support::projected_metric_derivative(F, dF[k], s, opt_.guards.gamma_min);
}

PetzGeometry::Chart PetzGeometry::frozen_chart(const VectorXd& theta0) const {
  const auto s = split(theta0);
  Chart chart;
  chart.theta0 = theta0;
  chart.frame = s.active_basis();
  return chart;
}

MatrixXd PetzGeometry::chart_metric(const Chart& chart, const VectorXd& s) const {
  const VectorXd theta = chart.theta0 + chart.frame * s;
  return chart.frame.transpose() * metric(theta) * chart.frame;
}

void PetzGeometry::chart_metric_jet(const Chart& chart, const VectorXd& s, MatrixXd& h,
                                    std::vector<MatrixXd>& dh) const {
  const VectorXd theta = chart.theta0 + chart.frame * s;
  MatrixXd g;
  std::vector<MatrixXd> dg;
  metric_and_derivative(theta, g, dg);
  const int r = chart.rank();
  const int m = static_cast<int>(chart.frame.rows());
  h = chart.frame.transpose() * g * chart.frame;
  dh.assign(r, MatrixXd::Zero(r, r));
  for (int c = 0; c < r; ++c) {
    MatrixXd acc = MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) acc += chart.frame(k, c) * dg[k];
    dh[c] = chart.frame.transpose() * acc * chart.frame;
  }
}

MatrixXd ChartMetricField::inverse_at(const MatrixXd& h0) const {
  if (hinv) return hinv(h0);
  return h0.inverse();
}

std::vector<MatrixXd> ChartMetricField::derivative(const VectorXd& s) const {
  if (dh) return dh(s);
  const int n = static_cast<int>(s.size());
  std::vector<MatrixXd> out(n);
  for (int a = 0; a < n; ++a) {
    VectorXd sp = s, sm = s;
    sp(a) += fd_dh;
    sm(a) -= fd_dh;
    out[a] = (h(sp) - h(sm)) / (2.0 * fd_dh);
  }
  return out;
}

std::vector<MatrixXd> christoffel(const ChartMetricField& f, const VectorXd& s) {
  const MatrixXd h0 = f.h(s);
  const int n = static_cast<int>(h0.rows());
  const std::vector<MatrixXd> dh = f.derivative(s);
  const MatrixXd hinv = f.inverse_at(h0);
  std::vector<MatrixXd> gam(n, MatrixXd::Zero(n, n));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        double v = 0;
        for (int d = 0; d < n; ++d)
          v += hinv(c, d) * (dh[a](b, d) + dh[b](a, d) - dh[d](a, b));
        gam[c](a, b) = 0.5 * v;
        gam[c](b, a) = gam[c](a, b);
      }
  return gam;
}

namespace {

// Riemann tensor R^l_{kij} at s, dGamma by centered differences of step fd.
// Returned as Riem[l][k](i,j).
std::vector<std::vector<MatrixXd>> riemann_up(const ChartMetricField& f, const VectorXd& s,
                                              double fd) {
  const int n = static_cast<int>(s.size());
  const std::vector<MatrixXd> gam0 = christoffel(f, s);
  std::vector<std::vector<MatrixXd>> dgam(n);  // dgam[a][l](i,j) = d_a Gamma^l_ij
  for (int a = 0; a < n; ++a) {
    VectorXd sp = s, sm = s;
    sp(a) += fd;
    sm(a) -= fd;
    const auto gp = christoffel(f, sp);
    const auto gm = christoffel(f, sm);
    dgam[a].resize(n);
    for (int l = 0; l < n; ++l) dgam[a][l] = (gp[l] - gm[l]) / (2.0 * fd);
  }
  std::vector<std::vector<MatrixXd>> riem(n, std::vector<MatrixXd>(n, MatrixXd::Zero(n, n)));
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double v = dgam[i][l](j, k) - dgam[j][l](i, k);
          for (int m2 = 0; m2 < n; ++m2)
            v += gam0[l](i, m2) * gam0[m2](j, k) - gam0[l](j, m2) * gam0[m2](i, k);
          riem[l][k](i, j) = v;
        }
  return riem;
}

}  // namespace

double scalar_curvature_of_chart(const ChartMetricField& f, const VectorXd& s, double fd) {
  const int n = static_cast<int>(s.size());
  const auto riem = riemann_up(f, s, fd);
  const MatrixXd hinv = f.inverse_at(f.h(s));
  double R = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      double ric = 0;
      for (int i = 0; i < n; ++i) ric += riem[i][k](i, j);
      R += hinv(k, j) * ric;
    }
  return R;
}

double sectional_curvature_of_chart(const ChartMetricField& f, const VectorXd& s, double fd,
                                    const VectorXd& e1, const VectorXd& e2) {
  const int n = static_cast<int>(s.size());
  const auto riem = riemann_up(f, s, fd);
  const MatrixXd h0 = f.h(s);
  // lowered R(e1, e2, e2, e1)
  double num = 0;
  for (int l = 0; l < n; ++l)
    for (int m2 = 0; m2 < n; ++m2)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            num += h0(l, m2) * riem[m2][k](i, j) * e1(l) * e2(k) * e1(i) * e2(j);
  const double a = e1.dot(h0 * e1), b = e2.dot(h0 * e2), c = e1.dot(h0 * e2);
  const double den = a * b - c * c;
  if (!(std::abs(den) > 0)) throw std::domain_error("sectional curvature: degenerate plane");
  return num / den;
}

SliceChart SliceChart::coordinate_pair(const VectorXd& center, int i, int j) {
  const int m = static_cast<int>(center.size());
  SliceChart c;
  c.center = center;
  c.e_u = VectorXd::Zero(m);
  c.e_v = VectorXd::Zero(m);
  const double s = 1.0 / std::sqrt(2.0);
  c.e_u(i) = s;
  c.e_u(j) = s;
  c.e_v(i) = s;
  c.e_v(j) = -s;
  return c;
}

SliceChart SliceChart::axes(const VectorXd& center, int i, int j) {
  const int m = static_cast<int>(center.size());
  SliceChart c;
  c.center = center;
  c.e_u = VectorXd::Zero(m);
  c.e_v = VectorXd::Zero(m);
  c.e_u(i) = 1;
  c.e_v(j) = 1;
  return c;
}

FormField slice_first_form(const PetzGeometry& geom, const SliceChart& chart) {
  return [&geom, chart](double u, double v) {
    FormSample out;
    const VectorXd theta = chart.center + u * chart.e_u + v * chart.e_v;
    try {
      const MatrixXd F = geom.qfim(theta);
      const auto s = support::split_spectrum(F, support::tau_spec_of(F, geom.options().guards));
      if (s.gap < geom.options().guards.gamma_min || s.straddle) {
        out.reject = "gap";
        return out;
      }
      const MatrixXd g = support::projected_metric(F, s);
      out.E = chart.e_u.dot(g * chart.e_u);
      out.F = chart.e_u.dot(g * chart.e_v);
      out.G = chart.e_v.dot(g * chart.e_v);
      out.ok = true;
    } catch (const std::domain_error&) {
      out.reject = "boundary";
    }
    return out;
  };
}

double brioschi_K(const FormField& form, double u, double v, double h, double eta) {
  const auto at = [&](double du, double dv) {
    const FormSample s = form(u + du, v + dv);
    if (!s.ok) throw std::domain_error("Brioschi singularity");
    return s;
  };
  const FormSample c = at(0, 0);
  const double W2 = c.E * c.G - c.F * c.F;
  if (!(std::abs(W2) / std::max({c.E, c.G, 1.0}) >= eta))
    throw std::domain_error("Brioschi singularity");

  const FormSample pu = at(h, 0), mu = at(-h, 0), pv = at(0, h), mv = at(0, -h);
  const FormSample pp = at(h, h), pm = at(h, -h), mp = at(-h, h), mm = at(-h, -h);
  const FormSample p2u = at(2 * h, 0), m2u = at(-2 * h, 0), p2v = at(0, 2 * h), m2v = at(0, -2 * h);

  const double Eu = (pu.E - mu.E) / (2 * h), Ev = (pv.E - mv.E) / (2 * h);
  const double Fu = (pu.F - mu.F) / (2 * h), Fv = (pv.F - mv.F) / (2 * h);
  const double Gu = (pu.G - mu.G) / (2 * h), Gv = (pv.G - mv.G) / (2 * h);
  const double Evv = (p2v.E - 2 * c.E + m2v.E) / (4 * h * h);
  const double Guu = (p2u.G - 2 * c.G + m2u.G) / (4 * h * h);
  const double Fuv = (pp.F - pm.F - mp.F + mm.F) / (4 * h * h);

  Eigen::Matrix3d M1, M2;
  M1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
        Fv - 0.5 * Gu, c.E, c.F,
        0.5 * Gv, c.F, c.G;
  M2 << 0.0, 0.5 * Ev, 0.5 * Gu,
        0.5 * Ev, c.E, c.F,
        0.5 * Gu, c.F, c.G;
  return (M1.determinant() - M2.determinant()) / (W2 * W2);
}

ScalarCurvatureResult intrinsic_scalar_curvature(const PetzGeometry& geom, const VectorXd& theta0,
                                                 double h, bool unprojected) {
  ScalarCurvatureResult out;
  out.h_used = h;

  if (unprojected) {
    // A1 ablation: raw tensor in the full coordinate chart. The naive signed
    // pseudoinverse admits the near-null eigenvalues, so their reciprocals
    // drive the Christoffel symbols; the resulting R is finite but unstable.
    const int m = static_cast<int>(theta0.size());
    ChartMetricField f;
    f.h = [&geom, theta0](const VectorXd& s) { return geom.qfim(theta0 + s); };
    f.hinv = [](const MatrixXd& h0) {
      const linops::EigenSplit es = linops::eigh_sym(h0);
      MatrixXd out_m = MatrixXd::Zero(h0.rows(), h0.cols());
      for (int a = 0; a < es.values.size(); ++a) {
        const double lam = es.values(a);
        if (std::abs(lam) > 1e-100)
          out_m.noalias() += (1.0 / lam) * es.vectors.col(a) * es.vectors.col(a).transpose();
      }
      return out_m;
    };
    f.fd_dh = 1e-5;
    out.rank = m;
    out.R = scalar_curvature_of_chart(f, VectorXd::Zero(m), h);
    return out;
  }

  const auto chart = geom.frozen_chart(theta0);
  const int r = chart.rank();
  if (r < 2) throw std::domain_error("intrinsic_scalar_curvature: no 2-plane");
  out.rank = r;

  ChartMetricField f;
  f.h = [&geom, chart](const VectorXd& s) { return geom.chart_metric(chart, s); };
  f.dh = [&geom, chart](const VectorXd& s) {
    MatrixXd hm;
    std::vector<MatrixXd> dh;
    geom.chart_metric_jet(chart, s, hm, dh);
    return dh;
  };
  out.R = scalar_curvature_of_chart(f, VectorXd::Zero(r), h);
  return out;
}

GaussResult gauss_correction(const PetzGeometry& geom, const SliceChart& chart, double h) {
  const auto fchart = geom.frozen_chart(chart.center);
  const int r = fchart.rank();
  if (r < 2) throw std::domain_error("gauss_correction: ambient rank < 2");

  // slice directions in chart coordinates; require the slice tangent to Im P
  VectorXd b1 = fchart.frame.transpose() * chart.e_u;
  VectorXd b2 = fchart.frame.transpose() * chart.e_v;
  if ((fchart.frame * b1 - chart.e_u).norm() > 1e-8 ||
      (fchart.frame * b2 - chart.e_v).norm() > 1e-8)
    throw std::domain_error("gauss_correction: slice not tangent to the active support");

  ChartMetricField f;
  f.h = [&geom, fchart](const VectorXd& s) { return geom.chart_metric(fchart, s); };
  f.dh = [&geom, fchart](const VectorXd& s) {
    MatrixXd hm;
    std::vector<MatrixXd> dh;
    geom.chart_metric_jet(fchart, s, hm, dh);
    return dh;
  };
  const VectorXd s0 = VectorXd::Zero(r);
  const MatrixXd h0 = f.h(s0);

  // g-orthonormalize (b1, b2)
  VectorXd E1 = b1 / std::sqrt(b1.dot(h0 * b1));
  VectorXd E2 = b2 - (E1.dot(h0 * b2)) * E1;
  const double n2 = std::sqrt(E2.dot(h0 * E2));
  if (!(n2 > 0)) throw std::domain_error("gauss_correction: degenerate slice plane");
  E2 /= n2;

  GaussResult out;
  out.K_sectional = sectional_curvature_of_chart(f, s0, h, E1, E2);

  // second fundamental form against an h0-orthonormal normal basis
  const auto gam = christoffel(f, s0);
  const auto gamma_vec = [&](const VectorXd& X, const VectorXd& Y) {
    VectorXd out_v(r);
    for (int c = 0; c < r; ++c) out_v(c) = X.dot(gam[c] * Y);
    return out_v;
  };
  std::vector<VectorXd> normals;
  for (int k = 0; k < r && static_cast<int>(normals.size()) < r - 2; ++k) {
    VectorXd n = VectorXd::Zero(r);
    n(k) = 1;
    n -= (E1.dot(h0 * n)) * E1;
    n -= (E2.dot(h0 * n)) * E2;
    for (const auto& p : normals) n -= (p.dot(h0 * n)) * p;
    const double nn = std::sqrt(std::max(n.dot(h0 * n), 0.0));
    if (nn > 1e-8) normals.push_back(n / nn);
  }
  const VectorXd B11 = gamma_vec(E1, E1), B22 = gamma_vec(E2, E2), B12 = gamma_vec(E1, E2);
  double xi = 0;
  for (const auto& n : normals) {
    const double b11 = n.dot(h0 * B11), b22 = n.dot(h0 * B22), b12 = n.dot(h0 * B12);
    xi += b11 * b22 - b12 * b12;
  }
  out.Xi = xi;

  // induced-form Brioschi along the g-orthonormal slice frame
  const VectorXd p1 = fchart.frame * E1, p2 = fchart.frame * E2;
  const FormField form = [&geom, &chart, p1, p2](double u, double v) {
    FormSample smp;
    const VectorXd theta = chart.center + u * p1 + v * p2;
    try {
      const MatrixXd g = geom.metric(theta);
      smp.E = p1.dot(g * p1);
      smp.F = p1.dot(g * p2);
      smp.G = p2.dot(g * p2);
      smp.ok = true;
    } catch (const std::domain_error&) {
      smp.reject = "boundary";
    }
    return smp;
  };
  out.K_slice = brioschi_K(form, 0.0, 0.0, h, geom.options().guards.brioschi_eta);
  out.K_ambient = out.K_slice - out.Xi;
  return out;
}

SliceChart e_orth_gauge(const PetzGeometry& geom, const SliceChart& chart) {
  const hea::ReducedJet j = geom.jet(chart.center, 1);
  const double delta = j.x * (1.0 - j.x) - std::norm(j.z);
  if (!(delta > 0.0)) throw std::domain_error("e_orth_gauge: boundary stratum");
  const int m = static_cast<int>(j.dx.size());
  VectorXd gradC(m);
  for (int i = 0; i < m; ++i)
    gradC(i) = ((1.0 - 2.0 * j.x) * j.dx(i) - 2.0 * std::real(std::conj(j.z) * j.dz(i))) /
               std::sqrt(delta);
  const double cu = gradC.dot(chart.e_u);
  const double cv = gradC.dot(chart.e_v);
  const double norm2 = cu * cu + cv * cv;
  if (norm2 < 1e-24) throw std::domain_error("e_orth_gauge: gauge undefined: C critical in this plane");
  const double phi = std::atan2(cv, cu);
  SliceChart out = chart;
  out.e_u = std::cos(phi) * chart.e_u + std::sin(phi) * chart.e_v;
  out.e_v = -std::sin(phi) * chart.e_u + std::cos(phi) * chart.e_v;
  return out;
}

double kskd(double C) {
  if (!(C >= 0.0) || C >= 1.0) throw std::domain_error("kskd: C outside [0,1)");
  return 2.0 * (6.0 * C * C - 5.0) / (C * C - 1.0);
}

std::optional<double> adaptive_h(const std::function<std::optional<double>(double)>& R_of_h,
                                 const std::vector<double>& candidates, double noise_cap) {
  std::optional<double> best;
  double best_err = std::numeric_limits<double>::infinity();
  for (const double h : candidates) {
    const auto rh = R_of_h(h);
    const auto rh2 = R_of_h(h / 2.0);
    const auto r2h = R_of_h(2.0 * h);
    if (!rh || !rh2 || !r2h) continue;
    if (std::abs(*rh - *r2h) > noise_cap) continue;
    const double err = std::abs(*rh2 - *rh);
    // ties resolved toward the smallest h: strict improvement or equal error
    if (err < best_err || (err == best_err && best && h < *best)) {
      best_err = err;
      best = h;
    }
  }
  return best;
}

}  // namespace qig::curvature
