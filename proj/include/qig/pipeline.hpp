// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qig/curvature.hpp"
#include "qig/noise.hpp"
#include "qig/vqe.hpp"

namespace qig::pipeline {

using Eigen::VectorXd;

/// Per-point bundle: reduced state, spectra, concurrence/entropy, Petz
/// tensor, support data, curvatures, and the KSKD comparison. JSON output.
std::string point_report(const VectorXd& theta, const std::string& metric_name,
                         double metric_scale = 0.25);

struct ScanConfig {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int grid = 100;                 // grid resolution; FD step = 2*pi/grid
  int centers = 250;              // seeded random centers
  unsigned long long seed = 42;
  std::vector<std::string> metrics = {"sld", "wy", "bkm"};  // round-robin over centers
  double metric_scale = 0.25;
  support::GuardConfig guards;

  static ScanConfig from_json(const std::string& text);
};

struct ScanRow {
  std::string pair;
  std::string metric;
  VectorXd theta;
  double lambda_max = 0;
  double entropy = 0;  // bits
  double K = 0;
  double bloch_norm = 0;
  double concurrence = 0;
  std::optional<double> phi_diag;  // user-supplied diagnostic column, empty by default
};

struct ScanSummary {
  int attempted = 0, valid = 0, gap_rejected = 0, brioschi_rejected = 0;
  std::map<std::string, std::array<int, 3>> per_pair;  // valid, gap, brioschi
  double mean_lambda_max = 0, mean_S = 0, mean_K = 0, mean_r = 0, mean_C = 0;
  double corr_K_S = 0, corr_K_r = 0, corr_S_r = 0, corr_C_r = 0;
  bool both_signs_of_K = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  ScanSummary summary;
  std::string rows_csv() const;
  std::string summary_json() const;
};

ScanResult slice_scan(const ScanConfig& cfg);

/// The named counterexample points plus seeded random ones:
/// (case, R, S bits, S nats, purity Tr rho_B^2, concurrence).
struct CounterexampleRow {
  std::string label;
  VectorXd theta;
  double R = 0;
  double S_bits = 0;
  double S_nats = 0;
  double purity = 0;
  double C = 0;
};
std::vector<CounterexampleRow> counterexample_suite(unsigned long long seed,
                                                    double metric_scale = 0.25);
std::string counterexample_csv(const std::vector<CounterexampleRow>& rows);

struct NoiseRow {
  std::string channel;
  double level = 0;
  int qubit = 1;
  double R_noiseless = 0;
  double R_noisy = 0;
  int rank = 0;
  bool guards_ok = false;
};
std::vector<NoiseRow> noise_sweep(const VectorXd& theta,
                                  const std::vector<noise::NoiseSetting>& levels,
                                  double metric_scale = 0.25);
std::string noise_csv(const std::vector<NoiseRow>& rows);

struct BootstrapCi {
  double mean = 0, lo = 0, hi = 0;
  double width() const { return hi - lo; }
};
/// Percentile bootstrap over a fixed sample; deterministic under seed.
BootstrapCi bootstrap_ci(const std::vector<double>& sample, int resamples = 1000,
                         double level = 0.95, unsigned long long seed = 42);

struct AblationRow {
  std::string label;
  BootstrapCi ours;
  std::optional<BootstrapCi> variant;
  bool variant_unstable = false;
};
std::vector<AblationRow> ablation_suite(const VectorXd& theta_star, double metric_scale = 0.25,
                                        unsigned long long seed = 42);
std::string ablation_csv(const std::vector<AblationRow>& rows);

/// Whitespace-separated (u, v, K) grid for the curvature-surface figures.
std::string plot_data(const VectorXd& center, int pair_i, int pair_j, int grid, double extent,
                      const std::string& metric_name, double metric_scale = 0.25);

}  // namespace qig::pipeline
