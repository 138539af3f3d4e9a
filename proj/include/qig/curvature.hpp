// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qig/hea.hpp"
#include "qig/petz.hpp"
#include "qig/support.hpp"

namespace qig::curvature {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Anything that produces reduced-variable jets at a parameter point.
using ReducedModel = std::function<hea::ReducedJet(const VectorXd&, int)>;

ReducedModel circuit_model(const hea::CircuitSpec& spec);

struct MetricOptions {
  petz::OperatorMonotoneSpec spec = petz::OperatorMonotoneSpec::sld();
  double scale = 0.25;          // frozen metric scale (g = scale * PFP)
  bool partial_fisher = false;  // drop the coherence channel
  support::GuardConfig guards;
};

/// Pullback Petz tensor F(theta) with analytic first derivatives, its
/// support split, the projected metric g = scale * P F P, and frozen-frame
/// charts on Im P. F and dF are assembled from the model's exact jets via
/// the three-channel decomposition; the radial coefficients' r-derivatives
/// use a scalar centered difference (exactly zero for SLD).
class PetzGeometry {
 public:
  PetzGeometry(ReducedModel model, MetricOptions opt);

  const MetricOptions& options() const { return opt_; }
  hea::ReducedJet jet(const VectorXd& theta, int order) const { return model_(theta, order); }
  hea::ReducedQubitState reduced(const VectorXd& theta) const;

  MatrixXd qfim(const VectorXd& theta) const;
  void qfim_and_derivative(const VectorXd& theta, MatrixXd& F, std::vector<MatrixXd>& dF) const;

  support::SupportSplit split(const VectorXd& theta) const;
  MatrixXd metric(const VectorXd& theta) const;  // scale * P F P
  void metric_and_derivative(const VectorXd& theta, MatrixXd& g, std::vector<MatrixXd>& dg) const;

  /// Frozen active frame at theta0; chart map s -> theta0 + frame * s.
  struct Chart {
    VectorXd theta0;
    MatrixXd frame;  // m x r, orthonormal columns
    int rank() const { return static_cast<int>(frame.cols()); }
  };
  Chart frozen_chart(const VectorXd& theta0) const;

  MatrixXd chart_metric(const Chart& chart, const VectorXd& s) const;
  /// Metric and its analytic first derivatives in chart coordinates.
  void chart_metric_jet(const Chart& chart, const VectorXd& s, MatrixXd& h,
                        std::vector<MatrixXd>& dh) const;

 private:
  ReducedModel model_;
  MetricOptions opt_;
};

/// A metric field over chart coordinates; dh optional (centered-difference
/// fallback with step fd_dh). Used both by PetzGeometry charts and by
/// synthetic test metrics.
struct ChartMetricField {
  std::function<MatrixXd(const VectorXd&)> h;
  std::function<std::vector<MatrixXd>(const VectorXd&)> dh;  // may be empty
  std::function<MatrixXd(const MatrixXd&)> hinv;             // defaults to .inverse()
  double fd_dh = 1e-6;

  std::vector<MatrixXd> derivative(const VectorXd& s) const;
  MatrixXd inverse_at(const MatrixXd& h0) const;
};

/// Christoffel symbols Gamma[c](a,b) of the chart metric at s.
std::vector<MatrixXd> christoffel(const ChartMetricField& f, const VectorXd& s);

/// Scalar curvature at s via Christoffel/Riemann/Ricci contraction;
/// dGamma by centered differences of step fd. Sign: unit sphere gives +2.
double scalar_curvature_of_chart(const ChartMetricField& f, const VectorXd& s, double fd);

/// Sectional curvature K(e1,e2) of the chart metric (e1,e2 need not be
/// orthonormal; normalized internally).
double sectional_curvature_of_chart(const ChartMetricField& f, const VectorXd& s, double fd,
                                    const VectorXd& e1, const VectorXd& e2);

/// Two orthonormal parameter-space directions through a center point.
struct SliceChart {
  VectorXd center;
  VectorXd e_u, e_v;

  static SliceChart coordinate_pair(const VectorXd& center, int i, int j);  // (ei+ej)/sqrt2, (ei-ej)/sqrt2
  static SliceChart axes(const VectorXd& center, int i, int j);
};

struct FormSample {
  double E = 0, F = 0, G = 0;
  bool ok = false;
  std::string reject;  // "gap" | "boundary" | ""
};
using FormField = std::function<FormSample(double, double)>;

/// First fundamental form of the projected metric restricted to the slice.
FormField slice_first_form(const PetzGeometry& geom, const SliceChart& chart);

/// Gaussian curvature by the Brioschi determinant formula, derivatives by
/// centered differences of step h. Throws std::domain_error("Brioschi
/// singularity") when |EG-F^2|/max(E,G,1) < eta or a sample is rejected.
double brioschi_K(const FormField& form, double u, double v, double h, double eta = 1e-10);

struct ScalarCurvatureResult {
  double R = 0;
  int rank = 0;
  double h_used = 0;
};

/// Scalar curvature of (Im P, g) at theta0 in the frozen-frame chart.
/// When unprojected=true the full unsplit tensor F is used with a naive
/// machine-floor pseudoinverse (the A1 ablation variant; numerically
/// unstable by construction).
ScalarCurvatureResult intrinsic_scalar_curvature(const PetzGeometry& geom, const VectorXd& theta0,
                                                 double h, bool unprojected = false);

struct GaussResult {
  double K_slice = 0;     // Brioschi on the induced slice form
  double Xi = 0;          // <B(E1,E1),B(E2,E2)> - |B(E1,E2)|^2
  double K_ambient = 0;   // K_slice - Xi
  double K_sectional = 0; // ambient Riemann route, for cross-checking
};

/// Gauss correction for a slice tangent to Im P. The slice directions are
/// projected into the frozen chart; throws if the slice leaves Im P.
GaussResult gauss_correction(const PetzGeometry& geom, const SliceChart& chart, double h);

/// Rotate (e_u, e_v) in-plane so that e_u aligns with the in-plane
/// component of grad C and C_v(center) = 0.
SliceChart e_orth_gauge(const PetzGeometry& geom, const SliceChart& chart);

/// R_KSKD(C) = 2 (6 C^2 - 5) / (C^2 - 1), C in [0,1).
double kskd(double C);

/// h* = argmin_h |R(h/2) - R(h)| over candidates, subject to the noise cap
/// |R(h) - R(2h)| <= xi; smallest h wins ties. Candidates whose evaluation
/// fails (guards) are skipped. Returns nullopt if all are rejected.
std::optional<double> adaptive_h(const std::function<std::optional<double>(double)>& R_of_h,
                                 const std::vector<double>& candidates = {1e-2, 1e-3, 1e-4, 1e-5},
                                 double noise_cap = 1e-2);

}  // namespace qig::curvature
