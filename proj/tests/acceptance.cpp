// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: thirteen reference checks, one PASS/FAIL line each.
// Exit code = number of failed checks.
//
// Checks 2, 3 (sign clause), 6 and 7 compare against external reference
// values for the scalar curvature of the depth-1 family. Those values are
// inconsistent with the geometry this toolkit computes: the rank-2 support
// of the reduced SLD metric here is isometric to a round sphere, so R is
// constant (+2 at scale 1, +8 at scale 1/4) and cannot match the varying
// negative reference numbers. The suite reports the measured values; those
// checks are expected to FAIL and are kept for transparency.

#include <cmath>
#include <cstdarg>
#include <cstring>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qig/pipeline.hpp"
#include "qig/sldcore.hpp"

using namespace qig;
using Eigen::MatrixXd;
using Eigen::VectorXd;
constexpr double kPi = std::numbers::pi;

namespace {

int g_failed = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
  std::printf("[%s] %2d: %s\n         %s\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

VectorXd theta_star() {
  VectorXd th(4);
  th << 1.755, 1.720, 5.417, 4.126;
  return th;
}

curvature::PetzGeometry sld_geometry(double scale, bool partial = false,
                                     const noise::NoiseSetting& ns = {}) {
  curvature::MetricOptions opt;
  opt.scale = scale;
  opt.partial_fisher = partial;
  return curvature::PetzGeometry(noise::apply(curvature::circuit_model(hea::CircuitSpec{}), ns),
                                 opt);
}

double scalar_R(const curvature::PetzGeometry& geom, const VectorXd& th) {
  const auto R_of = [&](double h) -> std::optional<double> {
    try {
      return curvature::intrinsic_scalar_curvature(geom, th, h).R;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto h = curvature::adaptive_h(R_of);
  return curvature::intrinsic_scalar_curvature(geom, th, h.value_or(1e-3)).R;
}

// ------------------------------------------------------------------ checks

void criterion_1() {
  const auto geom = sld_geometry(1.0);
  const auto rs = geom.reduced(theta_star());
  const auto eig = linops::eigh_hermitian2(rs.rho());
  const double C = rs.concurrence();

  bool ok = std::abs(rs.x - 0.6275) <= 5e-4 && std::abs(rs.z.real() - 0.4516) <= 5e-4 &&
            std::abs(rs.z.imag()) <= 5e-4 && std::abs((1 - rs.x) - 0.3725) <= 5e-4;
  ok = ok && std::abs(eig.values(0) - 0.9693) <= 5e-4 && std::abs(eig.values(1) - 0.0307) <= 5e-4;
  ok = ok && std::abs(C - 0.34) <= 0.01;

  const MatrixXd F = geom.qfim(theta_star());
  MatrixXd ref(4, 4);
  ref << 4.000, 0, -1.174, 0,
         0, 0.521, -1.287, 0,
         -1.174, -1.287, 3.524, 0,
         0, 0, 0, 0;
  const double dev = (F - ref).cwiseAbs().maxCoeff();
  ok = ok && dev <= 5e-3;

  const auto split = geom.split(theta_star());
  ok = ok && split.rank == 2 && std::abs(split.eigenvalues(0) - 5.12) <= 0.01 &&
       std::abs(split.eigenvalues(1) - 2.93) <= 0.01;

  report(1, "theta* bundle: rho_A, spectra, C, F matrix, leading eigenvalues, rank", ok,
         fmt("x=%.5f z=%.5f eig=(%.5f,%.5f) C=%.4f |F-ref|max=%.2e lead=(%.4f,%.4f) rank=%d",
             rs.x, rs.z.real(), eig.values(0), eig.values(1), C, dev, split.eigenvalues(0),
             split.eigenvalues(1), split.rank));
}

double criterion_2() {  // returns the frozen scale used downstream
  const double R1 = scalar_R(sld_geometry(1.0), theta_star());
  const double Rq = scalar_R(sld_geometry(0.25), theta_star());
  const auto in_band = [](double R) { return std::abs(R - (-0.69)) <= 0.05; };
  const bool ok = (in_band(R1) || in_band(Rq)) && (in_band(R1) != in_band(Rq));
  report(2, "curvature calibration: exactly one scale in {1, 1/4} gives R(theta*) = -0.69 +/- 0.05",
         ok, fmt("measured R(scale 1)=%+.6f, R(scale 1/4)=%+.6f; the rank-2 support geometry is a "
                 "round sphere, R is constant and positive",
                 R1, Rq));
  return 0.25;
}

void criterion_3(double scale) {
  const auto geom = sld_geometry(scale);
  const double C = geom.reduced(theta_star()).concurrence();
  const double k = curvature::kskd(C);
  const double R = scalar_R(geom, theta_star());
  const bool ok_val = std::abs(k - 9.7) <= 0.1;
  const bool ok_sign = (R > 0) != (k > 0);
  report(3, "KSKD: kskd(C(theta*)) = 9.7 +/- 0.1 and sign(R(theta*)) != sign(kskd)",
         ok_val && ok_sign,
         fmt("kskd=%.4f (%s) R=%+.4f -> signs %s; |R - kskd| = %.2f, the closed form still fails "
             "numerically",
             k, ok_val ? "ok" : "off", R, ok_sign ? "differ" : "agree", std::abs(R - k)));
}

void criterion_4(double scale) {
  const auto geom = sld_geometry(scale);
  const auto chart = geom.frozen_chart(theta_star());
  curvature::SliceChart slice;
  slice.center = theta_star();
  slice.e_u = chart.frame.col(0);
  slice.e_v = chart.frame.col(1);

  const auto g = curvature::gauss_correction(geom, slice, 1e-4);
  const double route_dev = std::abs(g.K_slice - g.K_sectional);
  const double gauss_dev = std::abs(g.K_slice - g.K_ambient);  // |Xi| at rank 2

  double reparam_dev = 0;
  const double K0 = curvature::brioschi_K(curvature::slice_first_form(geom, slice), 0, 0, 3e-4);
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int k = 0; k < 8; ++k) {
    const double phi = u(rng);
    curvature::SliceChart rot = slice;
    rot.e_u = std::cos(phi) * slice.e_u + std::sin(phi) * slice.e_v;
    rot.e_v = -std::sin(phi) * slice.e_u + std::cos(phi) * slice.e_v;
    const double K1 = curvature::brioschi_K(curvature::slice_first_form(geom, rot), 0, 0, 3e-4);
    reparam_dev = std::max(reparam_dev, std::abs(K1 - K0));
  }
  const bool ok = route_dev <= 1e-6 && gauss_dev <= 1e-6 && reparam_dev <= 1e-6;
  report(4, "geodesic-slice and gauge checks on the Pi_12 plane at theta*", ok,
         fmt("|K_slice - K_sectional|=%.2e  |K_slice - K_ambient|=%.2e  reparam spread=%.2e",
             route_dev, gauss_dev, reparam_dev));
}

void criterion_5() {
  const auto geom = sld_geometry(1.0);
  VectorXd th(4);
  th << kPi / 4, 0, kPi / 4, 0;
  const MatrixXd F = geom.qfim(th);
  MatrixXd ref = MatrixXd::Zero(4, 4);
  ref(0, 0) = 4;
  ref(1, 1) = 4;
  const double dev = (F - ref).cwiseAbs().maxCoeff();
  const auto split = geom.split(th);
  const auto rs = geom.reduced(th);
  const auto [C, S] = hea::concurrence_entropy(rs);
  const bool ok = dev <= 1e-12 && split.rank == 2 && std::abs(C - 1.0) <= 1e-12 &&
                  std::abs(S - 1.0) <= 1e-12;
  report(5, "singular point: F = diag(4,4,0,0) to 1e-12, rank 2, C = 1, S = 1 bit", ok,
         fmt("|F-diag(4,4,0,0)|max=%.2e rank=%d C=%.12f S=%.12f", dev, split.rank, C, S));
}

void criterion_6(double scale) {
  VectorXd th1(4), th2(4);
  th1 << 0.6, 0.7, 0.8, 0.9;
  th2 << kPi / 5, kPi / 6, kPi / 7, kPi / 5;
  const auto geom = sld_geometry(scale);
  const auto [C1, S1] = hea::concurrence_entropy(geom.reduced(th1));
  const auto [C2, S2] = hea::concurrence_entropy(geom.reduced(th2));
  const double R1 = scalar_R(geom, th1);
  const double R2 = scalar_R(geom, th2);
  const bool ok = std::abs(S1 - 0.687) <= 1e-3 && std::abs(S2 - 0.655) <= 1e-3 && S1 > S2 &&
                  std::abs(R1 - (-1.90)) <= 0.05 && std::abs(R2 - (-1.996)) <= 0.05 && R1 > R2;
  report(6, "entropy-curvature non-monotonicity at the two named points", ok,
         fmt("S(th1)=%.4f bits (%.4f nats) S(th2)=%.4f bits (%.4f nats), R(th1)=%+.4f "
             "R(th2)=%+.4f; reference S/purity pairs are not reachable by this circuit and R is "
             "constant on the regular set",
             S1, S1 * std::log(2.0), S2, S2 * std::log(2.0), R1, R2));
}

void criterion_7(double scale) {
  const struct {
    noise::Channel ch;
    double level;
    double ref;
  } noise_rows[] = {{noise::Channel::Depolarizing, 0.01, -0.66},
               {noise::Channel::Depolarizing, 0.05, -0.58},
               {noise::Channel::AmpDamping, 0.02, -0.65},
               {noise::Channel::AmpDamping, 0.10, -0.53}};
  bool within = true;
  bool monotone_dep = true, monotone_amp = true;
  std::string measured;
  double prev_dep = std::abs(scalar_R(sld_geometry(scale), theta_star()));
  double prev_amp = prev_dep;
  for (const auto& row : noise_rows) {
    bool any_placement = false;
    double shown = 0;
    for (int q : {0, 1}) {
      if (row.ch == noise::Channel::Depolarizing && q == 0) continue;
      const auto geom = sld_geometry(scale, false, {row.ch, row.level, q});
      const double R = scalar_R(geom, theta_star());
      if (q == 0 || row.ch == noise::Channel::Depolarizing) shown = R;
      if (std::abs(R - row.ref) <= 0.05) any_placement = true;
    }
    within = within && any_placement;
    measured += fmt("%s%.2f:%+.3f ", row.ch == noise::Channel::Depolarizing ? "p=" : "eta=",
                    row.level, shown);
    if (row.ch == noise::Channel::Depolarizing) {
      if (std::abs(shown) > prev_dep + 1e-9) monotone_dep = false;
      prev_dep = std::abs(shown);
    } else {
      if (std::abs(shown) > prev_amp + 1e-9) monotone_amp = false;
      prev_amp = std::abs(shown);
    }
  }
  const bool ok = within && monotone_dep && monotone_amp;
  report(7, "noise sweep matches (-0.66,-0.58,-0.65,-0.53) +/- 0.05 with monotone |R| decrease",
         ok, fmt("measured %s; noisy families stay on the same constant-curvature sphere",
                 measured.c_str()));
}

void criterion_8(double scale) {
  const auto rows = pipeline::ablation_suite(theta_star(), scale, 42);
  const double base = rows[0].ours.mean;
  bool ok_a23 = true;
  for (size_t k = 1; k <= 4; ++k) ok_a23 = ok_a23 && std::abs(rows[k].ours.mean - base) <= 0.02;
  const bool ok_a1 =
      rows[0].variant_unstable &&
      (!rows[0].variant || rows[0].variant->width() >= 5.0 * std::max(rows[0].ours.width(), 1e-12));
  const bool ok_a4 = rows[5].variant && std::abs(rows[5].variant->mean - base) >= 0.4;
  report(8, "ablations: A2/A3 within 0.02, A1 CI at least 5x wider, A4 shift >= 0.4",
         ok_a23 && ok_a1 && ok_a4,
         fmt("base=%.4f+/-%.2e A2=(%.4f,%.4f) A3=(%.4f,%.4f) A1 width=%.2e vs %.2e A4=%.4f",
             base, rows[0].ours.width(), rows[1].ours.mean, rows[2].ours.mean, rows[3].ours.mean,
             rows[4].ours.mean, rows[0].variant ? rows[0].variant->width() : -1.0,
             rows[0].ours.width(), rows[5].variant ? rows[5].variant->mean : 0.0));
}

void criterion_9() {
  const hea::CircuitSpec circuit;
  const auto specs = {petz::OperatorMonotoneSpec::sld(), petz::OperatorMonotoneSpec::wigner_yanase(),
                      petz::OperatorMonotoneSpec::bkm()};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  int tested = 0;
  double worst = 0;
  while (tested < 1000) {
    VectorXd th(4);
    for (int i = 0; i < 4; ++i) th(i) = u(rng);
    const auto jet = hea::bloch_derivatives(circuit, th, 1);
    const double delta = jet.x * (1 - jet.x) - std::norm(jet.z);
    if (delta < 1e-4) continue;
    ++tested;

    hea::ReducedQubitState rs;
    rs.x = jet.x;
    rs.z = jet.z;
    std::vector<linops::Matrix2c> drhos;
    std::vector<Eigen::Vector3d> drs;
    for (int i = 0; i < 4; ++i) {
      linops::Matrix2c d;
      d << linops::cplx(jet.dx(i), 0), jet.dz(i), std::conj(jet.dz(i)),
          linops::cplx(-jet.dx(i), 0);
      drhos.push_back(d);
      drs.emplace_back(2 * jet.dz(i).real(), -2 * jet.dz(i).imag(), 2 * jet.dx(i));
    }
    const double sd = std::sqrt(delta);

    for (const auto& spec : specs) {
      const MatrixXd Fe = petz::qfim_eigenbasis_oracle(spec, rs.rho(), drhos);
      const MatrixXd Fb = petz::qfim_bloch(spec, rs.bloch(), drs);
      worst = std::max(worst, (Fe - Fb).cwiseAbs().maxCoeff());

      // three_channel on the (e0, e1) coordinate slice
      petz::SliceDerivatives sdv;
      sdv.x_u = jet.dx(0);
      sdv.x_v = jet.dx(1);
      sdv.z_u = jet.dz(0);
      sdv.z_v = jet.dz(1);
      sdv.C_u = ((1 - 2 * jet.x) * jet.dx(0) - 2 * std::real(std::conj(jet.z) * jet.dz(0))) / sd;
      sdv.C_v = ((1 - 2 * jet.x) * jet.dx(1) - 2 * std::real(std::conj(jet.z) * jet.dz(1))) / sd;
      const Eigen::Matrix2d F3 = petz::three_channel(spec, jet.x, jet.z, sdv);
      worst = std::max(worst, std::abs(F3(0, 0) - Fe(0, 0)));
      worst = std::max(worst, std::abs(F3(0, 1) - Fe(0, 1)));
      worst = std::max(worst, std::abs(F3(1, 1) - Fe(1, 1)));

      if (spec.family == petz::MonotoneFamily::SldBures) {
        std::vector<sldcore::SldOperator> Ls;
        for (int i = 0; i < 4; ++i)
          Ls.push_back(sldcore::sld_closed_form({jet.x, jet.z, jet.dx(i), jet.dz(i)}));
        const MatrixXd Fs = sldcore::sld_qfim(rs.rho(), Ls);
        worst = std::max(worst, (Fs - Fe).cwiseAbs().maxCoeff());
      }
    }
  }
  report(9, "oracle equivalence over 1000 random regular points x {sld, wy, bkm}", worst <= 1e-10,
         fmt("max spread across eigenbasis/bloch/three-channel/sld routes = %.2e", worst));
}

void criterion_10() {
  const auto geom = sld_geometry(1.0);
  std::mt19937_64 rng(1042);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  std::normal_distribution<double> g;
  double worst_dp = 0, worst_dg = 0;
  bool bound_ok = true;
  int tested = 0;
  while (tested < 50) {
    VectorXd th(4);
    for (int i = 0; i < 4; ++i) th(i) = u(rng);
    try {
      const auto split = geom.split(th);
      if (split.rank != 2 || split.gap < 0.05) continue;
      MatrixXd F;
      std::vector<MatrixXd> dF;
      geom.qfim_and_derivative(th, F, dF);
      MatrixXd gm;
      std::vector<MatrixXd> dg;
      geom.metric_and_derivative(th, gm, dg);
      const double h = 1e-5;
      for (int i = 0; i < 4; ++i) {
        const MatrixXd dP = support::projector_derivative(dF[i], split);
        VectorXd tp = th, tm = th;
        tp(i) += h;
        tm(i) -= h;
        const MatrixXd Pp = geom.split(tp).projector();
        const MatrixXd Pm = geom.split(tm).projector();
        worst_dp = std::max(worst_dp, (dP - (Pp - Pm) / (2 * h)).cwiseAbs().maxCoeff());

        Eigen::JacobiSVD<MatrixXd> sv_dP(dP), sv_dF(dF[i]);
        if (sv_dP.singularValues()(0) > (2.0 / split.gap) * sv_dF.singularValues()(0) + 1e-10)
          bound_ok = false;

        const MatrixXd fd = (geom.metric(tp) - geom.metric(tm)) / (2 * h);
        worst_dg = std::max(worst_dg, (dg[i] - fd).cwiseAbs().maxCoeff());
      }
      ++tested;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  report(10, "projector calculus: dP and dg match finite differences, norm bound holds",
         worst_dp <= 1e-6 && worst_dg <= 1e-6 && bound_ok,
         fmt("max |dP - fd| = %.2e, max |dg - fd| = %.2e, bound %s over %d points", worst_dp,
             worst_dg, bound_ok ? "holds" : "violated", tested));
}

void criterion_11(double scale) {
  const auto geom = sld_geometry(scale);
  const auto R_of = [&](double h) {
    return curvature::intrinsic_scalar_curvature(geom, theta_star(), h).R;
  };
  const double d1 = std::abs(R_of(1e-2) - R_of(5e-3));
  const double d2 = std::abs(R_of(1e-3) - R_of(5e-4));
  const double slope = std::log10(d1 / d2);
  const bool ok_slope = slope >= 1.7 && slope <= 2.3;

  // shrinkage bias: |R(lambda) - R(0)| linear through the origin
  const auto chart = geom.frozen_chart(theta_star());
  const auto R_lam = [&](double lam) {
    curvature::ChartMetricField f;
    f.h = [&, lam](const VectorXd& s) {
      MatrixXd h = geom.chart_metric(chart, s);
      return MatrixXd(h + lam * MatrixXd::Identity(h.rows(), h.cols()));
    };
    return curvature::scalar_curvature_of_chart(f, VectorXd::Zero(chart.rank()), 1e-3);
  };
  const double R0 = R_lam(0);
  const std::vector<double> lams = {1e-8, 1e-7, 1e-6, 1e-5, 1e-4};
  double num = 0, den = 0;
  std::vector<double> dev;
  for (double lam : lams) {
    dev.push_back(std::abs(R_lam(lam) - R0));
    num += dev.back() * lam;
    den += lam * lam;
  }
  const double c = num / den;
  bool ok_fit = c > 0;
  double worst_resid = 0;
  for (size_t i = 0; i < lams.size(); ++i) {
    const double resid = std::abs(dev[i] - c * lams[i]) / std::max(dev[i], c * lams[i]);
    worst_resid = std::max(worst_resid, resid);
    if (resid > 0.10) ok_fit = false;
  }
  report(11, "numerics: Richardson slope 2 +/- 0.3 and first-order shrinkage bias", ok_slope && ok_fit,
         fmt("slope=%.3f, shrinkage fit slope=%.4g, worst relative residual=%.2f%%", slope, c,
             100 * worst_resid));
}

void criterion_12() {
  pipeline::ScanConfig cfg;  // defaults: 250 centers, seed 42, sld/wy/bkm
  const auto res = pipeline::slice_scan(cfg);
  const bool ok = std::abs(res.summary.corr_K_S) <= 0.1 && res.summary.corr_S_r <= -0.9 &&
                  res.summary.both_signs_of_K &&
                  res.summary.attempted ==
                      res.summary.valid + res.summary.gap_rejected + res.summary.brioschi_rejected;
  report(12, "scan statistics: |corr(K,S)| <= 0.1, corr(S,|r|) <= -0.9, both K signs", ok,
         fmt("valid=%d gap_rej=%d brioschi_rej=%d corr(K,S)=%+.4f corr(S,|r|)=%+.4f signs=%s",
             res.summary.valid, res.summary.gap_rejected, res.summary.brioschi_rejected,
             res.summary.corr_K_S, res.summary.corr_S_r,
             res.summary.both_signs_of_K ? "both" : "one"));
}

void criterion_13() {
  const vqe::PauliSumHamiltonian h2{{{-0.4804, "II"},
                                     {0.3435, "ZI"},
                                     {-0.4347, "IZ"},
                                     {0.5716, "ZZ"},
                                     {0.0910, "XX"},
                                     {0.0910, "YY"}}};
  const vqe::PauliSumHamiltonian toy{
      {{4.0, "ZZ"}, {2.0, "XX"}, {1.0, "YY"}, {0.5, "XI"}, {0.5, "IX"}}};
  const hea::CircuitSpec circuit{6, false, false};

  vqe::OptimizerConfig euc;
  euc.method = "euclidean";
  euc.eta = 0.1;
  const auto te = vqe::run(circuit, h2, euc, 800);
  vqe::OptimizerConfig nat;
  nat.method = "natgrad";
  nat.eta = 0.1;
  nat.ridge = 1e-3;
  const auto tn = vqe::run(circuit, h2, nat, 800);
  const bool ok_h2 = te.rows.back().gap <= 1e-6 && tn.rows.back().gap <= 1e-6;

  vqe::OptimizerConfig tcfg;
  tcfg.eta = 0.02;
  tcfg.armijo.enabled = false;
  tcfg.seed = 42;
  tcfg.method = "euclidean";
  const auto toy_e = vqe::run(circuit, toy, tcfg, 400);
  tcfg.method = "natgrad";
  tcfg.ridge = 1e-3;
  const auto toy_n = vqe::run(circuit, toy, tcfg, 400);
  const double auc_e = vqe::metrics(toy_e).first;
  const double auc_n = vqe::metrics(toy_n).first;
  const bool ok_auc = auc_n <= 0.8 * auc_e;

  vqe::OptimizerConfig mono;
  mono.method = "natgrad";
  mono.eta = 0.3;
  const auto tm = vqe::run(circuit, toy, mono, 100);
  bool ok_mono = true;
  for (size_t k = 1; k < tm.rows.size(); ++k)
    ok_mono = ok_mono && tm.rows[k].energy <= tm.rows[k - 1].energy + 1e-12;

  // natgrad with F = I reproduces the Euclidean step bitwise
  vqe::OptimizerConfig id_cfg;
  id_cfg.eta = 0.37;
  id_cfg.ridge = 0.0;
  VectorXd grad(4);
  grad << 0.9, -0.1, 0.44, 2.5;
  const VectorXd ng = vqe::natgrad_step(grad, MatrixXd::Identity(4, 4), 1e-12, id_cfg);
  const VectorXd eg = -id_cfg.eta * grad;
  const bool ok_id = std::memcmp(ng.data(), eg.data(), sizeof(double) * 4) == 0;

  report(13, "VQE: H2 exact hit, toy AUC(natgrad) <= 0.8 AUC(euclidean), Armijo monotone, F=I",
         ok_h2 && ok_auc && ok_mono && ok_id,
         fmt("H2 gaps (%.1e, %.1e); toy AUC %.3f vs %.3f (ratio %.3f); monotone=%s; F=I bitwise=%s",
             te.rows.back().gap, tn.rows.back().gap, auc_n, auc_e, auc_n / auc_e,
             ok_mono ? "yes" : "no", ok_id ? "yes" : "no"));
}

}  // namespace

int main() {
  std::printf("acceptance suite: 13 reference checks\n");
  criterion_1();
  const double scale = criterion_2();
  criterion_3(scale);
  criterion_4(scale);
  criterion_5();
  criterion_6(scale);
  criterion_7(scale);
  criterion_8(scale);
  criterion_9();
  criterion_10();
  criterion_11(scale);
  criterion_12();
  criterion_13();
  std::printf("%d of 13 checks failed\n", g_failed);
  return g_failed;
}
