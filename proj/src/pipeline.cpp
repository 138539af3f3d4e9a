// SPDX-License-Identifier: Apache-2.0
#include "qig/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "qig/sldcore.hpp"

namespace qig::pipeline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = 0.6931471805599453;

curvature::PetzGeometry geometry(const std::string& metric_name, double scale,
                                 bool partial = false,
                                 const noise::NoiseSetting& ns = {},
                                 const support::GuardConfig& guards = {}) {
  curvature::MetricOptions opt;
  opt.spec = petz::OperatorMonotoneSpec::from_name(metric_name);
  opt.scale = scale;
  opt.partial_fisher = partial;
  opt.guards = guards;
  hea::CircuitSpec circuit;  // the four-parameter depth-1 family
  return curvature::PetzGeometry(noise::apply(curvature::circuit_model(circuit), ns),
                                 std::move(opt));
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const size_t n = a.size();
  if (n < 2 || b.size() != n) return 0.0;
  double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double saa = 0, sbb = 0, sab = 0;
  for (size_t i = 0; i < n; ++i) {
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
    sab += (a[i] - ma) * (b[i] - mb);
  }
  if (!(saa > 0) || !(sbb > 0)) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

// Scalar curvature at theta with the adaptive step; falls back to 1e-3.
double scalar_R(const curvature::PetzGeometry& geom, const VectorXd& theta, int* rank = nullptr) {
  const auto R_of = [&](double h) -> std::optional<double> {
    try {
      return curvature::intrinsic_scalar_curvature(geom, theta, h).R;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto h = curvature::adaptive_h(R_of);
  const auto res = curvature::intrinsic_scalar_curvature(geom, theta, h.value_or(1e-3));
  if (rank) *rank = res.rank;
  return res.R;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string point_report(const VectorXd& theta, const std::string& metric_name,
                         double metric_scale) {
  nlohmann::json j;
  j["theta"] = std::vector<double>(theta.data(), theta.data() + theta.size());
  j["metric"] = metric_name;
  j["metric_scale"] = metric_scale;

  const auto geom = geometry(metric_name, metric_scale);
  const hea::ReducedQubitState rs = geom.reduced(theta);
  const auto eig = linops::eigh_hermitian2(rs.rho());
  const auto [C, S] = hea::concurrence_entropy(rs);

  j["rho_A"] = {{"x", rs.x}, {"z_re", rs.z.real()}, {"z_im", rs.z.imag()}};
  j["rho_eigenvalues"] = {eig.values(0), eig.values(1)};
  j["concurrence"] = C;
  j["entropy_bits"] = S;
  j["bloch_norm"] = rs.bloch().norm();

  bool regular = true;
  try {
    const Eigen::MatrixXd F = geom.qfim(theta);
    const auto split = support::split_spectrum(F, support::tau_spec_of(F, geom.options().guards));
    j["qfim"] = nlohmann::json::array();
    for (int r = 0; r < F.rows(); ++r) {
      auto row = nlohmann::json::array();
      for (int c = 0; c < F.cols(); ++c) row.push_back(F(r, c));
      j["qfim"].push_back(row);
    }
    j["qfim_spectrum"] = std::vector<double>(split.eigenvalues.data(),
                                             split.eigenvalues.data() + split.eigenvalues.size());
    j["rank"] = split.rank;
    j["gap"] = std::isfinite(split.gap) ? split.gap : -1.0;
    j["gap_ok"] = split.gap >= geom.options().guards.gamma_min;

    const auto R_of = [&](double h) -> std::optional<double> {
      try {
        return curvature::intrinsic_scalar_curvature(geom, theta, h).R;
      } catch (const std::exception&) {
        return std::nullopt;
      }
    };
    const double h_star = curvature::adaptive_h(R_of).value_or(1e-3);
    const auto res = curvature::intrinsic_scalar_curvature(geom, theta, h_star);
    j["scalar_curvature"] = res.R;
    j["curvature_rank"] = res.rank;
    j["h_star"] = h_star;
    j["guards"] = {{"tau_spec", split.tau_used},
                   {"gamma_min", geom.options().guards.gamma_min},
                   {"brioschi_eta", geom.options().guards.brioschi_eta}};

    if (split.rank >= 2) {
      try {
        const auto fchart = geom.frozen_chart(theta);
        curvature::SliceChart slice;
        slice.center = theta;
        slice.e_u = fchart.frame.col(0);
        slice.e_v = fchart.frame.col(1);
        const auto gc = curvature::gauss_correction(geom, slice, 1e-4);
        j["leading_plane"] = {{"K_slice", gc.K_slice},
                              {"Xi", gc.Xi},
                              {"K_ambient", gc.K_ambient},
                              {"K_sectional", gc.K_sectional}};
        j["brioschi_ok"] = true;
      } catch (const std::domain_error&) {
        j["brioschi_ok"] = false;
      }
    }
    if (C < 1.0) {
      const double k = curvature::kskd(C);
      j["kskd"] = k;
      j["kskd_minus_R"] = k - res.R;
      j["kskd_sign_differs"] = (k > 0) != (res.R > 0);
    }
  } catch (const std::exception& e) {
    regular = false;
    j["error"] = e.what();
  }
  j["regular"] = regular;
  return j.dump(2);
}

ScanConfig ScanConfig::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ScanConfig cfg;
  if (j.contains("pairs")) {
    cfg.pairs.clear();
    for (const auto& p : j["pairs"]) cfg.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  cfg.grid = j.value("grid", cfg.grid);
  if (cfg.grid < 3) throw std::invalid_argument("ScanConfig: grid must be >= 3");
  cfg.centers = j.value("centers", cfg.centers);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.metric_scale = j.value("metric_scale", cfg.metric_scale);
  if (j.contains("metrics")) cfg.metrics = j["metrics"].get<std::vector<std::string>>();
  cfg.guards.gamma_min = j.value("gamma_min", cfg.guards.gamma_min);
  cfg.guards.brioschi_min = j.value("brioschi_min", cfg.guards.brioschi_min);
  cfg.guards.kappa = j.value("tau_spec_kappa", cfg.guards.kappa);
  return cfg;
}

ScanResult slice_scan(const ScanConfig& cfg) {
  ScanResult out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
  const double h = 2.0 * kPi / cfg.grid;

  std::vector<curvature::PetzGeometry> geoms;
  for (const auto& name : cfg.metrics)
    geoms.push_back(geometry(name, cfg.metric_scale, false, {}, cfg.guards));

  for (int c = 0; c < cfg.centers; ++c) {
    VectorXd center(4);
    for (int i = 0; i < 4; ++i) center(i) = uni(rng);
    const size_t gi = cfg.metrics.empty() ? 0 : c % cfg.metrics.size();
    const auto& geom = geoms[gi];

    for (const auto& [pi, pj] : cfg.pairs) {
      ++out.summary.attempted;
      const std::string pair_label = "t" + std::to_string(pi) + "-t" + std::to_string(pj);
      auto& acct = out.summary.per_pair[pair_label];

      const auto chart = curvature::SliceChart::coordinate_pair(center, pi, pj);
      const auto form = curvature::slice_first_form(geom, chart);

      const auto centre_sample = form(0, 0);
      if (!centre_sample.ok) {
        if (centre_sample.reject == "gap") {
          ++out.summary.gap_rejected;
          ++acct[1];
        } else {
          ++out.summary.brioschi_rejected;
          ++acct[2];
        }
        continue;
      }
      const double W2 = centre_sample.E * centre_sample.G - centre_sample.F * centre_sample.F;
      if (W2 < cfg.guards.brioschi_min) {
        ++out.summary.brioschi_rejected;
        ++acct[2];
        continue;
      }
      double K = 0;
      try {
        K = curvature::brioschi_K(form, 0.0, 0.0, h, cfg.guards.brioschi_eta);
      } catch (const std::domain_error&) {
        ++out.summary.brioschi_rejected;
        ++acct[2];
        continue;
      }
      if (!std::isfinite(K)) {
        ++out.summary.brioschi_rejected;
        ++acct[2];
        continue;
      }

      ScanRow row;
      row.pair = pair_label;
      row.metric = cfg.metrics.empty() ? "sld" : cfg.metrics[gi];
      row.theta = center;
      const hea::ReducedQubitState rs = geom.reduced(center);
      const auto [C, S] = hea::concurrence_entropy(rs);
      row.concurrence = C;
      row.entropy = S;
      row.bloch_norm = rs.bloch().norm();
      row.K = K;
      const auto split = geom.split(center);
      row.lambda_max = split.eigenvalues.size() ? split.eigenvalues(0) : 0.0;
      out.rows.push_back(row);
      ++out.summary.valid;
      ++acct[0];
    }
  }

  std::vector<double> Ks, Ss, rs_, Cs, lams;
  for (const auto& r : out.rows) {
    Ks.push_back(r.K);
    Ss.push_back(r.entropy);
    rs_.push_back(r.bloch_norm);
    Cs.push_back(r.concurrence);
    lams.push_back(r.lambda_max);
  }
  auto mean = [](const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0;
    for (double x : v) s += x;
    return s / v.size();
  };
  out.summary.mean_K = mean(Ks);
  out.summary.mean_S = mean(Ss);
  out.summary.mean_r = mean(rs_);
  out.summary.mean_C = mean(Cs);
  out.summary.mean_lambda_max = mean(lams);
  out.summary.corr_K_S = pearson(Ks, Ss);
  out.summary.corr_K_r = pearson(Ks, rs_);
  out.summary.corr_S_r = pearson(Ss, rs_);
  out.summary.corr_C_r = pearson(Cs, rs_);
  bool pos = false, neg = false;
  for (double k : Ks) {
    pos |= k > 0;
    neg |= k < 0;
  }
  out.summary.both_signs_of_K = pos && neg;
  return out;
}

std::string ScanResult::rows_csv() const {
  std::ostringstream os;
  os.precision(12);
  os << "pair,t0,t1,t2,t3,lambda_max,S_bits,K,r,C,Phi,metric\n";
  for (const auto& r : rows) {
    os << r.pair;
    for (int i = 0; i < 4; ++i) os << ',' << r.theta(i);
    os << ',' << r.lambda_max << ',' << r.entropy << ',' << r.K << ',' << r.bloch_norm << ','
       << r.concurrence << ',';
    if (r.phi_diag) os << *r.phi_diag;
    os << ',' << r.metric << '\n';
  }
  return os.str();
}

std::string ScanResult::summary_json() const {
  nlohmann::json j;
  j["attempted"] = summary.attempted;
  j["valid"] = summary.valid;
  j["gap_rejected"] = summary.gap_rejected;
  j["brioschi_rejected"] = summary.brioschi_rejected;
  for (const auto& [k, v] : summary.per_pair)
    j["per_pair"][k] = {{"valid", v[0]}, {"gap_rejected", v[1]}, {"brioschi_rejected", v[2]}};
  j["means"] = {{"lambda_max", summary.mean_lambda_max},
                {"S", summary.mean_S},
                {"K", summary.mean_K},
                {"r", summary.mean_r},
                {"C", summary.mean_C}};
  j["corr"] = {{"K_S", summary.corr_K_S},
               {"K_r", summary.corr_K_r},
               {"S_r", summary.corr_S_r},
               {"C_r", summary.corr_C_r}};
  j["both_signs_of_K"] = summary.both_signs_of_K;
  return j.dump(2);
}

std::vector<CounterexampleRow> counterexample_suite(unsigned long long seed, double metric_scale) {
  std::vector<std::pair<std::string, VectorXd>> points;
  VectorXd th1(4), th2(4);
  th1 << 0.6, 0.7, 0.8, 0.9;
  th2 << kPi / 5, kPi / 6, kPi / 7, kPi / 5;
  points.emplace_back("[0.6,0.7,0.8,0.9]", th1);
  points.emplace_back("[pi/5,pi/6,pi/7,pi/5]", th2);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
  for (int k = 0; k < 8; ++k) {
    VectorXd th(4);
    for (int i = 0; i < 4; ++i) th(i) = uni(rng);
    points.emplace_back("random-" + std::to_string(k + 1), th);
  }

  const auto geom = geometry("sld", metric_scale);
  const hea::CircuitSpec circuit;
  std::vector<CounterexampleRow> rows;
  for (const auto& [label, th] : points) {
    CounterexampleRow row;
    row.label = label;
    row.theta = th;
    const auto psi = hea::statevector_oracle(circuit, th);
    const auto rs = hea::reduce(psi);
    const auto eig = linops::eigh_hermitian2(rs.rho());

    // entropy via the closed form in C and via the eigenvalue route
    const auto [C, S_closed] = hea::concurrence_entropy(rs);
    double S_eig = 0;
    for (int k = 0; k < 2; ++k)
      if (eig.values(k) > 1e-15) S_eig -= eig.values(k) * std::log2(eig.values(k));
    if (std::abs(S_eig - S_closed) > 1e-10)
      throw std::runtime_error("counterexample_suite: entropy route mismatch");

    // purity of rho_B; equals Tr rho_A^2 for pure states
    Eigen::Matrix4cd dm = psi * psi.adjoint();
    const auto rhoB = noise::partial_trace_A(dm);
    row.purity = std::real((rhoB * rhoB).trace());
    const double purA = eig.values(0) * eig.values(0) + eig.values(1) * eig.values(1);
    if (std::abs(row.purity - purA) > 1e-12)
      throw std::runtime_error("counterexample_suite: purity mismatch");

    row.C = C;
    row.S_bits = S_closed;
    row.S_nats = S_closed * kLn2;
    try {
      row.R = scalar_R(geom, th);
    } catch (const std::exception&) {
      row.R = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string counterexample_csv(const std::vector<CounterexampleRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "case,t0,t1,t2,t3,R,S_bits,S_nats,purity,C\n";
  for (const auto& r : rows) {
    os << r.label;
    for (int i = 0; i < 4; ++i) os << ',' << r.theta(i);
    os << ',' << r.R << ',' << r.S_bits << ',' << r.S_nats << ',' << r.purity << ',' << r.C
       << '\n';
  }
  return os.str();
}

std::vector<NoiseRow> noise_sweep(const VectorXd& theta,
                                  const std::vector<noise::NoiseSetting>& levels,
                                  double metric_scale) {
  const auto base = geometry("sld", metric_scale);
  double R0 = std::numeric_limits<double>::quiet_NaN();
  try {
    R0 = scalar_R(base, theta);
  } catch (const std::exception&) {
  }

  std::vector<NoiseRow> rows;
  for (const auto& setting : levels) {
    NoiseRow row;
    row.channel = setting.channel == noise::Channel::Depolarizing ? "depolarizing"
                 : setting.channel == noise::Channel::AmpDamping  ? "amp_damping"
                                                                  : "none";
    row.level = setting.level;
    row.qubit = setting.qubit;
    row.R_noiseless = R0;
    const auto geom = geometry("sld", metric_scale, false, setting);
    try {
      const auto split = geom.split(theta);
      row.rank = split.rank;
      row.guards_ok = split.gap >= geom.options().guards.gamma_min && !split.straddle;
      row.R_noisy = scalar_R(geom, theta);
    } catch (const std::exception&) {
      row.R_noisy = std::numeric_limits<double>::quiet_NaN();
      row.guards_ok = false;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string noise_csv(const std::vector<NoiseRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "channel,level,qubit,R_noiseless,R_noisy,rank,guards_ok\n";
  for (const auto& r : rows)
    os << r.channel << ',' << r.level << ',' << (r.qubit == 0 ? "A" : "B") << ','
       << r.R_noiseless << ',' << r.R_noisy << ',' << r.rank << ',' << (r.guards_ok ? 1 : 0)
       << '\n';
  return os.str();
}

BootstrapCi bootstrap_ci(const std::vector<double>& sample, int resamples, double level,
                         unsigned long long seed) {
  BootstrapCi out;
  if (sample.empty()) return out;
  double m = 0;
  for (double x : sample) m += x;
  out.mean = m / sample.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, sample.size() - 1);
  std::vector<double> means(resamples);
  for (int r = 0; r < resamples; ++r) {
    double s = 0;
    for (size_t k = 0; k < sample.size(); ++k) s += sample[pick(rng)];
    means[r] = s / sample.size();
  }
  std::sort(means.begin(), means.end());
  const double alpha = 0.5 * (1.0 - level);
  const auto at = [&](double q) {
    const double pos = q * (resamples - 1);
    const size_t lo = static_cast<size_t>(pos);
    const size_t hi = std::min(lo + 1, static_cast<size_t>(resamples - 1));
    const double w = pos - lo;
    return (1.0 - w) * means[lo] + w * means[hi];
  };
  out.lo = at(alpha);
  out.hi = at(1.0 - alpha);
  return out;
}

namespace {

// R samples over a seeded jitter cloud around theta; non-finite values are
// dropped (count reported through n_bad).
std::vector<double> jitter_samples(const curvature::PetzGeometry& geom, const VectorXd& theta,
                                   double h, bool unprojected, unsigned long long seed,
                                   int n, int* n_bad = nullptr) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jit(-2e-4, 2e-4);
  std::vector<double> out;
  int bad = 0;
  for (int k = 0; k < n; ++k) {
    VectorXd th = theta;
    for (int i = 0; i < th.size(); ++i) th(i) += jit(rng);
    try {
      const double R = curvature::intrinsic_scalar_curvature(geom, th, h, unprojected).R;
      if (std::isfinite(R))
        out.push_back(R);
      else
        ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  if (n_bad) *n_bad = bad;
  return out;
}

}  // namespace

std::vector<AblationRow> ablation_suite(const VectorXd& theta_star, double metric_scale,
                                        unsigned long long seed) {
  constexpr int kSamples = 48;
  std::vector<AblationRow> rows;

  const auto base_geom = geometry("sld", metric_scale);
  const auto base_sample = jitter_samples(base_geom, theta_star, 1e-3, false, seed, kSamples);
  const auto base_ci = bootstrap_ci(base_sample, 1000, 0.95, seed);

  {  // A1: support projection vs raw tensor with a naive inverse
    AblationRow row;
    row.label = "A1 PFP vs F";
    row.ours = base_ci;
    int bad = 0;
    const auto raw = jitter_samples(base_geom, theta_star, 1e-3, true, seed, kSamples, &bad);
    if (!raw.empty()) row.variant = bootstrap_ci(raw, 1000, 0.95, seed);
    row.variant_unstable =
        bad > 0 || !row.variant || row.variant->width() > 5.0 * std::max(base_ci.width(), 1e-12);
    rows.push_back(row);
  }
  for (const double kappa : {1e-10, 1e-14}) {  // A2: spectral threshold
    support::GuardConfig guards;
    guards.kappa = kappa;
    const auto geom = geometry("sld", metric_scale, false, {}, guards);
    AblationRow row;
    row.label = "A2 tau_spec=" + fmt(kappa);
    row.ours = bootstrap_ci(jitter_samples(geom, theta_star, 1e-3, false, seed, kSamples), 1000,
                            0.95, seed);
    rows.push_back(row);
  }
  for (const double h : {1e-3, 1e-5}) {  // A3: finite-difference step
    AblationRow row;
    row.label = "A3 h=" + fmt(h);
    row.ours = bootstrap_ci(jitter_samples(base_geom, theta_star, h, false, seed, kSamples), 1000,
                            0.95, seed);
    rows.push_back(row);
  }
  {  // A4: partial Fisher (coherence channel dropped)
    const auto geom = geometry("sld", metric_scale, true);
    AblationRow row;
    row.label = "A4 partial-F";
    row.ours = base_ci;
    const auto var = jitter_samples(geom, theta_star, 1e-3, false, seed, kSamples);
    if (!var.empty()) row.variant = bootstrap_ci(var, 1000, 0.95, seed);
    rows.push_back(row);
  }
  return rows;
}

std::string ablation_csv(const std::vector<AblationRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "setting,mean,lo,hi,variant_mean,variant_lo,variant_hi,variant_unstable\n";
  for (const auto& r : rows) {
    os << r.label << ',' << r.ours.mean << ',' << r.ours.lo << ',' << r.ours.hi << ',';
    if (r.variant) os << r.variant->mean << ',' << r.variant->lo << ',' << r.variant->hi;
    else os << ",,";
    os << ',' << (r.variant_unstable ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string plot_data(const VectorXd& center, int pair_i, int pair_j, int grid, double extent,
                      const std::string& metric_name, double metric_scale) {
  const auto geom = geometry(metric_name, metric_scale);
  const auto chart = curvature::SliceChart::coordinate_pair(center, pair_i, pair_j);
  const auto form = curvature::slice_first_form(geom, chart);
  const double h = 2.0 * extent / (grid - 1);

  std::ostringstream os;
  os.precision(12);
  for (int a = 0; a < grid; ++a) {
    const double u = -extent + a * (2.0 * extent / (grid - 1));
    for (int b = 0; b < grid; ++b) {
      const double v = -extent + b * (2.0 * extent / (grid - 1));
      double K = std::numeric_limits<double>::quiet_NaN();
      try {
        K = curvature::brioschi_K(form, u, v, h);
      } catch (const std::exception&) {
      }
      os << u << ' ' << v << ' ' << K << '\n';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qig::pipeline
