// SPDX-License-Identifier: Apache-2.0
#include "qig/hea.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace qig::hea {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2d ry2(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Eigen::Matrix2d m;
  m << c, -s, s, c;
  return m;
}

// CNOT, control = qubit A (first factor): swaps |10> and |11>.
Vector4c apply_cnot(const Vector4c& v) {
  Vector4c w = v;
  std::swap(w(2), w(3));
  return w;
}

Vector4c apply_local(const Eigen::Matrix2d& ga, const Eigen::Matrix2d& gb, const Vector4c& v) {
  Vector4c w;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cplx acc = 0;
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) acc += ga(a, a2) * gb(b, b2) * v(2 * a2 + b2);
      w(2 * a + b) = acc;
    }
  return w;
}

// exp(-i t Z@Z): diagonal phases e^{-it}, e^{+it}, e^{+it}, e^{-it}.
Vector4c apply_zz(double t, const Vector4c& v) {
  const cplx em = std::polar(1.0, -t), ep = std::polar(1.0, t);
  Vector4c w;
  w << em * v(0), ep * v(1), ep * v(2), em * v(3);
  return w;
}

// exp(-i t X@X) = cos t I - i sin t (X@X); X@X reverses the basis order.
Vector4c apply_xx(double t, const Vector4c& v) {
  const double c = std::cos(t), s = std::sin(t);
  const cplx mi(0.0, -1.0);
  Vector4c w;
  for (int k = 0; k < 4; ++k) w(k) = c * v(k) + mi * s * v(3 - k);
  return w;
}

}  // namespace

std::string CircuitSpec::to_json() const {
  nlohmann::json j;
  j["depth"] = depth;
  auto ent = nlohmann::json::array();
  if (zz) ent.push_back("zz");
  if (xx) ent.push_back("xx");
  j["entanglers"] = ent;
  return j.dump();
}

CircuitSpec CircuitSpec::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CircuitSpec spec;
  spec.depth = j.value("depth", 1);
  if (spec.depth < 1 || spec.depth > 12)
    throw std::invalid_argument("CircuitSpec: depth must be in [1,12]");
  if (j.contains("entanglers"))
    for (const auto& e : j["entanglers"]) {
      if (e == "zz") spec.zz = true;
      else if (e == "xx") spec.xx = true;
      else throw std::invalid_argument("CircuitSpec: unknown entangler");
    }
  return spec;
}

Vector4d amplitudes(const Vector4d& th) {
  const double c0 = std::cos(th(0)), s0 = std::sin(th(0));
  const double c2 = std::cos(th(2)), s2 = std::sin(th(2));
  const double fp = th(1) + th(3), fm = th(1) - th(3);
  Vector4d v;
  v(0) = c0 * c2 * std::cos(fp) - s0 * s2 * std::sin(fm);
  v(1) = c0 * c2 * std::sin(fp) - s0 * s2 * std::cos(fm);
  v(2) = c0 * s2 * std::cos(fp) + s0 * c2 * std::sin(fm);
  v(3) = s0 * c2 * std::cos(fm) + c0 * s2 * std::sin(fp);
  return v;
}

Vector4c statevector_oracle(const CircuitSpec& spec, const VectorXd& params,
                            const std::vector<std::pair<int, int>>& shifts) {
  if (params.size() != spec.param_count())
    throw std::invalid_argument("statevector_oracle: parameter count mismatch");
  VectorXd th = params;
  for (const auto& [i, k] : shifts) th(i) += k * kPi / 2.0;

  Vector4c psi;
  psi << 1, 0, 0, 0;
  int idx = 0;
  for (int l = 0; l < spec.depth; ++l) {
    psi = apply_local(ry2(th(idx)), ry2(th(idx + 1)), psi);
    idx += 2;
    psi = apply_cnot(psi);
    if (spec.zz) psi = apply_zz(th(idx++), psi);
    if (spec.xx) psi = apply_xx(th(idx++), psi);
  }
  psi = apply_local(ry2(th(idx)), ry2(th(idx + 1)), psi);
  return psi;
}

double ReducedQubitState::concurrence() const {
  return 2.0 * std::sqrt(std::max(delta(), 0.0));
}

Matrix2c ReducedQubitState::rho() const {
  Matrix2c m;
  m << cplx(x, 0), z, std::conj(z), cplx(1.0 - x, 0);
  return m;
}

ReducedQubitState reduce(const Vector4c& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("reduce: statevector not normalized");
  ReducedQubitState s;
  s.x = std::norm(psi(0)) + std::norm(psi(1));
  s.z = psi(0) * std::conj(psi(2)) + psi(1) * std::conj(psi(3));
  return s;
}

double entropy_of_concurrence(double C) {
  const double w = std::sqrt(std::max(1.0 - C * C, 0.0));
  const double lp = 0.5 * (1.0 + w), lm = 0.5 * (1.0 - w);
  double S = 0.0;
  if (lp > 0.0) S -= lp * std::log2(lp);
  if (lm > 0.0) S -= lm * std::log2(lm);
  return S;
}

std::pair<double, double> concurrence_entropy(const ReducedQubitState& s) {
  const double C = s.concurrence();
  return {C, entropy_of_concurrence(C)};
}

ReducedJet bloch_derivatives(const CircuitSpec& spec, const VectorXd& params, int order) {
  const int m = spec.param_count();
  // x and z are bilinear in the state; polarize to reuse shifted states.
  const auto bz = [](const Vector4c& p, const Vector4c& q) {
    return 0.5 * (p(0) * std::conj(q(2)) + q(0) * std::conj(p(2)) + p(1) * std::conj(q(3)) +
                  q(1) * std::conj(p(3)));
  };

  const Vector4c psi = statevector_oracle(spec, params);
  std::vector<Vector4c> d1(m);
  for (int i = 0; i < m; ++i) d1[i] = statevector_oracle(spec, params, {{i, 1}});

  ReducedJet jet;
  jet.order = order;
  jet.x = std::norm(psi(0)) + std::norm(psi(1));
  jet.z = psi(0) * std::conj(psi(2)) + psi(1) * std::conj(psi(3));
  jet.dx = VectorXd(m);
  jet.dz = VectorXcd(m);
  for (int i = 0; i < m; ++i) {
    jet.dx(i) = 2.0 * std::real(std::conj(psi(0)) * d1[i](0) + std::conj(psi(1)) * d1[i](1));
    jet.dz(i) = 2.0 * bz(psi, d1[i]);
  }
  if (order < 2) return jet;

  jet.d2x = MatrixXd(m, m);
  jet.d2z = MatrixXcd(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Vector4c dij = (i == j) ? statevector_oracle(spec, params, {{i, 2}})
                                    : statevector_oracle(spec, params, {{i, 1}, {j, 1}});
      const double x2 =
          2.0 * std::real(std::conj(psi(0)) * dij(0) + std::conj(psi(1)) * dij(1)) +
          2.0 * std::real(std::conj(d1[i](0)) * d1[j](0) + std::conj(d1[i](1)) * d1[j](1));
      const cplx z2 = 2.0 * bz(psi, dij) + 2.0 * bz(d1[i], d1[j]);
      jet.d2x(i, j) = x2;
      jet.d2x(j, i) = x2;
      jet.d2z(i, j) = z2;
      jet.d2z(j, i) = z2;
    }
  return jet;
}

MatrixXd pure_state_qfim(const CircuitSpec& spec, const VectorXd& params) {
  const int m = spec.param_count();
  const Vector4c psi = statevector_oracle(spec, params);
  MatrixXcd dpsi(4, m);
  for (int i = 0; i < m; ++i) dpsi.col(i) = statevector_oracle(spec, params, {{i, 1}});
  const VectorXcd ov = dpsi.adjoint() * psi;  // <d_i psi | psi>
  MatrixXd F(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const cplx term = dpsi.col(i).dot(dpsi.col(j)) - ov(i) * std::conj(ov(j));
      F(i, j) = std::real(term);
      F(j, i) = F(i, j);
    }
  return F;
}

}  // namespace qig::hea
