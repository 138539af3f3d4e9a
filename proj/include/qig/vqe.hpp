// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qig/hea.hpp"

namespace qig::vqe {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

/// Two-qubit Hamiltonian as a weighted sum of Pauli strings ("ZZ", "XI", ...).
struct PauliSumHamiltonian {
  std::vector<std::pair<double, std::string>> terms;

  Matrix4c dense() const;
  static PauliSumHamiltonian from_json(const std::string& text);
  std::string to_json() const;
};

std::pair<double, Vector4c> exact_ground(const PauliSumHamiltonian& H);

struct ArmijoConfig {
  bool enabled = true;
  double c1 = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 30;
};

struct OptimizerConfig {
  std::string method = "natgrad";  // "euclidean" | "natgrad"
  double eta = 0.1;
  double ridge = 1e-3;
  double shrinkage = 0.0;            // active eigenvalues toward their mean
  double gnorm_cap = 0.0;            // 0 = off; cap on sqrt(step^T F step)
  double tr_radius = 0.0;            // 0 = off; cap on ||step||_2
  ArmijoConfig armijo;
  bool partial_fisher = false;       // reduced preconditioner only
  double ema_decay = 0.0;            // F_bar = (1-b) F + b F_bar
  std::string precond = "pure";      // "pure" | "reduced"
  std::string metric = "sld";        // Petz spec for the reduced preconditioner
  int grow_every = 0;                // layer-wise growth period; 0 = off
  unsigned long long seed = 42;
};

struct IterRow {
  int iter = 0;
  double energy = 0;
  double gap = 0;  // energy - E_star
  double grad_norm = 0;
  double grad_gnorm = 0;
  int fisher_rank = 0;
  double fisher_gap = 0;
  double projector_drift = 0;
  double step_norm = 0;
  int backtracks = 0;
  bool accepted = true;
};

struct VqeTrace {
  std::vector<IterRow> rows;
  double e_star = 0;
  std::string to_csv() const;
};

/// E = <psi|H|psi> and its exact parameter-shift gradient.
std::pair<double, VectorXd> energy_and_gradient(const hea::CircuitSpec& spec,
                                                const VectorXd& params,
                                                const PauliSumHamiltonian& H);

/// Support-projected natural-gradient step (before caps and line search):
///   step = -eta * Pi (F + ridge I)^+ Pi grad   restricted to the active split.
/// Falls back to -eta*grad when the active rank is zero.
VectorXd natgrad_step(const VectorXd& grad, const MatrixXd& fisher, double tau_spec,
                      const OptimizerConfig& cfg, int* rank_out = nullptr,
                      double* gap_out = nullptr, MatrixXd* projector_out = nullptr);

VqeTrace run(const hea::CircuitSpec& spec, const PauliSumHamiltonian& H,
             const OptimizerConfig& cfg, int max_iters);

/// AUC = trapezoidal sum of max(E_k - E*, 0); Hit@95 = first iteration with
/// E0 - E_k >= 0.95 (E0 - E*), nullopt if never reached.
std::pair<double, std::optional<int>> metrics(const VqeTrace& trace);

}  // namespace qig::vqe
