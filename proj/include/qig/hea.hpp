// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qig/linops.hpp"

namespace qig::hea {

using Eigen::MatrixXd;
using Eigen::MatrixXcd;
using Eigen::Vector4d;
using Eigen::VectorXd;
using Eigen::VectorXcd;
using Vector4c = Eigen::Vector4cd;
using linops::Matrix2c;
using linops::cplx;

/// Two-qubit hardware-efficient ansatz.
///
/// One block = (R_y(2a) on A  tensor  R_y(2b) on B), then CNOT (control A),
/// then the optional entanglers exp(-i alpha Z@Z) and exp(-i beta X@X); a
/// final rotation layer closes the circuit. depth L = number of blocks.
/// Parameter layout per block: [a, b, (alpha), (beta)], then the final
/// [a, b]. Qubit A is the first tensor factor (state index = 2a + b).
///
/// For L=1 without entanglers this is the four-parameter family
/// (t0,t1,t2,t3) with closed-form real amplitudes; amplitudes() below is
/// that closed form and the gate oracle must reproduce it exactly.
struct CircuitSpec {
  int depth = 1;
  bool zz = false;
  bool xx = false;

  int param_count() const { return 2 * (depth + 1) + depth * ((zz ? 1 : 0) + (xx ? 1 : 0)); }
  std::string to_json() const;
  static CircuitSpec from_json(const std::string& text);
};

/// Closed-form amplitudes of the depth-1 circuit, phi_pm = t1 +- t3.
Vector4d amplitudes(const Vector4d& theta);

/// Gate-by-gate statevector. `shifts` adds k*pi/2 to parameter i before
/// evaluation; a single +pi/2 shift yields the exact derivative state for
/// every gate here (all generators square to the identity).
Vector4c statevector_oracle(const CircuitSpec& spec, const VectorXd& params,
                            const std::vector<std::pair<int, int>>& shifts = {});

/// One-qubit reduction in (x, z) coordinates.
struct ReducedQubitState {
  double x = 0;
  cplx z = 0;

  double delta() const { return x * (1.0 - x) - std::norm(z); }
  double concurrence() const;
  Eigen::Vector3d bloch() const {
    return {2.0 * z.real(), -2.0 * z.imag(), 2.0 * x - 1.0};
  }
  Matrix2c rho() const;
};

/// Partial trace over qubit B. Requires a normalized state.
ReducedQubitState reduce(const Vector4c& psi);

/// (C, S) with S the reduced von Neumann entropy in bits, via the closed
/// form in C; S(0) = 0 by continuous extension, S(1) = 1.
std::pair<double, double> concurrence_entropy(const ReducedQubitState& s);
double entropy_of_concurrence(double C);

/// Reduced-variable jet: x, z and their parameter derivatives (exact,
/// assembled from pi/2-shifted statevectors). Second order optional.
struct ReducedJet {
  double x = 0;
  cplx z = 0;
  VectorXd dx;    // m
  VectorXcd dz;   // m
  MatrixXd d2x;   // m x m (order 2 only)
  MatrixXcd d2z;  // m x m (order 2 only)
  int order = 1;
};
ReducedJet bloch_derivatives(const CircuitSpec& spec, const VectorXd& params, int order);

/// Pure-state QFIM F_ij = Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>].
MatrixXd pure_state_qfim(const CircuitSpec& spec, const VectorXd& params);

}  // namespace qig::hea
