// SPDX-License-Identifier: Apache-2.0
#include "qig/vqe.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qig/curvature.hpp"
#include "qig/support.hpp"

namespace qig::vqe {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd pauli(char c) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -1i, 1i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: unknown letter");
  }
  return m;
}

}  // namespace

Matrix4c PauliSumHamiltonian::dense() const {
  Matrix4c H = Matrix4c::Zero();
  for (const auto& [coeff, str] : terms) {
    if (str.size() != 2) throw std::invalid_argument("PauliSumHamiltonian: need 2-letter strings");
    const Eigen::Matrix2cd a = pauli(str[0]), b = pauli(str[1]);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) H.block<2, 2>(2 * i, 2 * j) += coeff * a(i, j) * b;
  }
  if ((H - H.adjoint()).norm() > 1e-12 * std::max(1.0, H.norm()))
    throw std::invalid_argument("PauliSumHamiltonian: not Hermitian");
  return H;
}

PauliSumHamiltonian PauliSumHamiltonian::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PauliSumHamiltonian H;
  for (const auto& t : j.at("terms"))
    H.terms.emplace_back(t.at(0).get<double>(), t.at(1).get<std::string>());
  return H;
}

std::string PauliSumHamiltonian::to_json() const {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& [c, s] : terms) j["terms"].push_back({c, s});
  return j.dump();
}

std::pair<double, Vector4c> exact_ground(const PauliSumHamiltonian& H) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(H.dense());
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

std::pair<double, VectorXd> energy_and_gradient(const hea::CircuitSpec& spec,
                                                const VectorXd& params,
                                                const PauliSumHamiltonian& H) {
  const Matrix4c Hd = H.dense();
  const auto energy_at = [&](const std::vector<std::pair<int, int>>& shifts) {
    const Vector4c psi = hea::statevector_oracle(spec, params, shifts);
    return std::real(psi.dot(Hd * psi));
  };
  const double E = energy_at({});
  const int m = spec.param_count();
  VectorXd g(m);
  // all generators square to the identity: exact +-pi/4 shift rule
  for (int i = 0; i < m; ++i) {
    VectorXd tp = params, tm = params;
    tp(i) += kPi / 4.0;
    tm(i) -= kPi / 4.0;
    const Vector4c a = hea::statevector_oracle(spec, tp);
    const Vector4c b = hea::statevector_oracle(spec, tm);
    g(i) = std::real(a.dot(Hd * a)) - std::real(b.dot(Hd * b));
  }
  return {E, g};
}

VectorXd natgrad_step(const VectorXd& grad, const MatrixXd& fisher, double tau_spec,
                      const OptimizerConfig& cfg, int* rank_out, double* gap_out,
                      MatrixXd* projector_out) {
  const auto split = support::split_spectrum(fisher, tau_spec);
  if (rank_out) *rank_out = split.rank;
  if (gap_out) *gap_out = std::isfinite(split.gap) ? split.gap : 0.0;
  if (projector_out) *projector_out = split.projector();
  if (split.rank == 0) return -cfg.eta * grad;  // logged fallback upstream

  // spectral shrinkage toward the active mean, then the ridge pseudoinverse
  double mean = 0;
  for (int a = 0; a < split.rank; ++a) mean += split.eigenvalues(a);
  mean /= split.rank;

  const VectorXd pg = split.projector() * grad;
  VectorXd step = VectorXd::Zero(grad.size());
  for (int a = 0; a < split.rank; ++a) {
    double lam = split.eigenvalues(a);
    lam = (1.0 - cfg.shrinkage) * lam + cfg.shrinkage * mean;
    const VectorXd va = split.vectors.col(a);
    step += (va.dot(pg) / (lam + cfg.ridge)) * va;
  }
  step = split.projector() * step;
  return -cfg.eta * step;
}

namespace {

MatrixXd reduced_fisher(const hea::CircuitSpec& spec, const VectorXd& params,
                        const OptimizerConfig& cfg) {
  curvature::MetricOptions opt;
  opt.spec = petz::OperatorMonotoneSpec::from_name(cfg.metric);
  opt.scale = 1.0;
  opt.partial_fisher = cfg.partial_fisher;
  const curvature::PetzGeometry geom(curvature::circuit_model(spec), opt);
  return geom.qfim(params);
}

}  // namespace

VqeTrace run(const hea::CircuitSpec& spec, const PauliSumHamiltonian& H,
             const OptimizerConfig& cfg, int max_iters) {
  const int m = spec.param_count();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, kPi);
  VectorXd params(m);
  for (int i = 0; i < m; ++i) params(i) = uni(rng);

  const auto [e_star, ground] = exact_ground(H);
  (void)ground;

  VqeTrace trace;
  trace.e_star = e_star;

  const bool natural = cfg.method == "natgrad";
  MatrixXd fisher_ema;
  MatrixXd prev_projector;
  support::GuardConfig guards;

  for (int k = 0; k < max_iters; ++k) {
    auto [E, grad] = energy_and_gradient(spec, params, H);

    IterRow row;
    row.iter = k;
    row.energy = E;
    row.gap = E - e_star;
    row.grad_norm = grad.norm();

    // layer-wise growth: freeze parameters of not-yet-grown blocks
    if (cfg.grow_every > 0) {
      const int per_block = 2 + (spec.zz ? 1 : 0) + (spec.xx ? 1 : 0);
      const int grown_blocks = std::min(spec.depth, 1 + k / cfg.grow_every);
      const int live = grown_blocks * per_block + 2;
      for (int i = live; i < m; ++i) grad(i) = 0.0;
    }

    VectorXd step;
    if (!natural) {
      step = -cfg.eta * grad;
      row.fisher_rank = 0;
      row.fisher_gap = 0;
      row.projector_drift = 0;
      row.grad_gnorm = 0;
    } else {
      MatrixXd F = cfg.precond == "reduced" ? reduced_fisher(spec, params, cfg)
                                            : hea::pure_state_qfim(spec, params);
      if (cfg.ema_decay > 0.0) {
        if (fisher_ema.size() == 0)
          fisher_ema = F;
        else
          fisher_ema = (1.0 - cfg.ema_decay) * F + cfg.ema_decay * fisher_ema;
        F = fisher_ema;
      }
      const double tau = support::tau_spec_of(F, guards);
      int rank = 0;
      double gap = 0;
      MatrixXd P;
      step = natgrad_step(grad, F, tau, cfg, &rank, &gap, &P);
      row.fisher_rank = rank;
      row.fisher_gap = gap;
      row.projector_drift = prev_projector.size() ? (P - prev_projector).norm() : 0.0;
      prev_projector = P;
      row.grad_gnorm = std::sqrt(std::max(step.dot(F * step), 0.0)) / std::max(cfg.eta, 1e-300);

      if (cfg.gnorm_cap > 0.0) {
        const double gn = std::sqrt(std::max(step.dot(F * step), 0.0));
        if (gn > cfg.gnorm_cap) step *= cfg.gnorm_cap / gn;
      }
    }
    if (cfg.tr_radius > 0.0 && step.norm() > cfg.tr_radius)
      step *= cfg.tr_radius / step.norm();

    double t = 1.0;
    int backtracks = 0;
    bool accepted = true;
    if (cfg.armijo.enabled) {
      const double slope = grad.dot(step);
      accepted = false;
      for (int b = 0; b <= cfg.armijo.max_backtracks; ++b) {
        const auto [Enew, gnew] = energy_and_gradient(spec, params + t * step, H);
        (void)gnew;
        if (Enew <= E + cfg.armijo.c1 * t * slope) {
          accepted = true;
          break;
        }
        t *= cfg.armijo.backtrack;
        ++backtracks;
      }
      if (!accepted) t = 0.0;
    }
    row.step_norm = t * step.norm();
    row.backtracks = backtracks;
    row.accepted = accepted;
    trace.rows.push_back(row);

    params += t * step;
  }
  return trace;
}

std::string VqeTrace::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "iter,energy,gap,grad_norm,grad_gnorm,fisher_rank,fisher_gap,projector_drift,step_norm,"
        "backtracks,accepted\n";
  for (const auto& r : rows)
    os << r.iter << ',' << r.energy << ',' << r.gap << ',' << r.grad_norm << ',' << r.grad_gnorm
       << ',' << r.fisher_rank << ',' << r.fisher_gap << ',' << r.projector_drift << ','
       << r.step_norm << ',' << r.backtracks << ',' << (r.accepted ? 1 : 0) << '\n';
  return os.str();
}

std::pair<double, std::optional<int>> metrics(const VqeTrace& trace) {
  if (trace.rows.empty()) return {0.0, std::nullopt};
  double auc = 0.0;
  for (size_t k = 1; k < trace.rows.size(); ++k) {
    const double a = std::max(trace.rows[k - 1].gap, 0.0);
    const double b = std::max(trace.rows[k].gap, 0.0);
    auc += 0.5 * (a + b);
  }
  const double e0 = trace.rows.front().energy;
  const double total = e0 - trace.e_star;
  std::optional<int> hit;
  if (total <= 0.0) {
    hit = 0;
  } else {
    for (const auto& r : trace.rows)
      if (e0 - r.energy >= 0.95 * total) {
        hit = r.iter;
        break;
      }
  }
  return {auc, hit};
}

}  // namespace qig::vqe
