// SPDX-License-Identifier: Apache-2.0
#include "qig/support.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qig::support {

MatrixXd SupportSplit::projector() const {
  const MatrixXd Ua = active_basis();
  return Ua * Ua.transpose();
}

double tau_spec_of(const MatrixXd& F, const GuardConfig& cfg) {
  const linops::EigenSplit es = linops::eigh_sym(F);
  const double lmax = es.values.size() ? std::max(es.values(0), 0.0) : 0.0;
  return std::max(cfg.kappa * lmax, cfg.tau_floor);
}

SupportSplit split_spectrum(const MatrixXd& F, double tau_spec) {
  const linops::EigenSplit es = linops::eigh_sym(F);
  const int m = static_cast<int>(es.values.size());
  SupportSplit s;
  s.eigenvalues = es.values;
  s.vectors = es.vectors;
  s.tau_used = tau_spec;
  s.rank = 0;
  for (int k = 0; k < m; ++k)
    if (es.values(k) > tau_spec) ++s.rank;

  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 0; k < m; ++k)
    if (std::abs(es.values(k) - tau_spec) < 10.0 * eps * std::max(1.0, std::abs(tau_spec)))
      s.straddle = true;

  if (s.rank == 0 || s.rank == m) {
    s.gap = std::numeric_limits<double>::infinity();
  } else {
    s.gap = es.values(s.rank - 1) - es.values(s.rank);
  }
  return s;
}

MatrixXd projector_derivative(const MatrixXd& dF, const SupportSplit& split, double gamma_min) {
  const int m = static_cast<int>(split.eigenvalues.size());
  if (split.rank == 0 || split.rank == m) return MatrixXd::Zero(m, m);
  if (!(split.gap >= gamma_min)) throw std::domain_error("projector_derivative: gap guard violated");

  const MatrixXd Ua = split.active_basis();
  const MatrixXd Ub = split.inactive_basis();
  const int r = split.rank, q = m - r;

  MatrixXd M = Ub.transpose() * dF * Ua;  // q x r
  for (int b = 0; b < q; ++b)
    for (int a = 0; a < r; ++a)
      M(b, a) /= split.eigenvalues(a) - split.eigenvalues(r + b);

  MatrixXd dP = Ub * M * Ua.transpose();
  return dP + dP.transpose().eval();
}

MatrixXd projected_metric(const MatrixXd& F, const SupportSplit& split) {
  const MatrixXd P = split.projector();
  return P * F * P;
}

MatrixXd projected_metric_derivative(const MatrixXd& F, const MatrixXd& dF,
                                     const SupportSplit& split, double gamma_min) {
  const MatrixXd P = split.projector();
  const MatrixXd dP = projector_derivative(dF, split, gamma_min);
  return dP * F * P + P * F * dP + P * dF * P;
}

}  // namespace qig::support
