// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qig/linops.hpp"

namespace qig::support {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Guard thresholds shared by the geometry pipeline.
struct GuardConfig {
  double kappa = 1e-12;         // tau_spec = max(kappa * lambda_max, tau_floor)
  double tau_floor = 1e-15;
  double gamma_min = 1e-8;      // regular-set spectral gap guard
  double brioschi_eta = 1e-10;  // |EG - F^2| / max(E,G,1) guard
  double brioschi_min = 1e-12;  // absolute EG - F^2 floor used by scans
};

/// Active/inactive split of a PSD tensor at a spectral threshold.
struct SupportSplit {
  VectorXd eigenvalues;  // descending
  MatrixXd vectors;      // orthonormal columns, active first
  int rank = 0;
  double gap = 0;        // min |lambda_active - lambda_inactive|; +inf if full rank
  double tau_used = 0;
  bool straddle = false; // eigenvalues within 10 eps of tau: flagged irregular

  MatrixXd projector() const;
  MatrixXd active_basis() const { return vectors.leftCols(rank); }
  MatrixXd inactive_basis() const { return vectors.rightCols(vectors.cols() - rank); }
};

double tau_spec_of(const MatrixXd& F, const GuardConfig& cfg = {});

/// Threshold split: active = {lambda > tau_spec}.
SupportSplit split_spectrum(const MatrixXd& F, double tau_spec);

/// Riesz projector derivative (Hadamard/eigenbasis form):
///   dP = U_b [ (Lambda_a - Lambda_b)^(-) o U_b^T dF U_a ] U_a^T + transpose.
/// Throws std::domain_error when the gap guard fails.
MatrixXd projector_derivative(const MatrixXd& dF, const SupportSplit& split,
                              double gamma_min = 1e-8);

/// g = P F P.
MatrixXd projected_metric(const MatrixXd& F, const SupportSplit& split);

/// dg = dP F P + P F dP + P dF P.
MatrixXd projected_metric_derivative(const MatrixXd& F, const MatrixXd& dF,
                                     const SupportSplit& split, double gamma_min = 1e-8);

}  // namespace qig::support
