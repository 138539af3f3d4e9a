// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qig/curvature.hpp"
#include "qig/linops.hpp"

namespace qig::noise {

using Matrix4c = Eigen::Matrix4cd;
using linops::Matrix2c;

enum class Channel { None, Depolarizing, AmpDamping };

struct NoiseSetting {
  Channel channel = Channel::None;
  double level = 0.0;
  int qubit = 1;  // amplitude damping target: 0 = A (kept), 1 = B (traced out)
};

/// D_p(rho) = (1-p) rho + (p/4) I.
Matrix4c depolarize(const Matrix4c& rho, double p);

/// Single-qubit amplitude damping E0 = [[1,0],[0,sqrt(1-eta)]],
/// E1 = [[0,sqrt(eta)],[0,0]], tensored with identity on the other qubit.
Matrix4c amp_damp_on_qubit(const Matrix4c& rho, double eta, int which);

Matrix2c partial_trace_B(const Matrix4c& rho);
Matrix2c partial_trace_A(const Matrix4c& rho);

/// Reduced-variable jet of the noisy model. Channels are linear, so they
/// commute with parameter derivatives; damping the traced-out qubit leaves
/// rho_A unchanged (Kraus algebra), which this map reproduces exactly.
curvature::ReducedModel apply(curvature::ReducedModel base, const NoiseSetting& setting);

}  // namespace qig::noise
