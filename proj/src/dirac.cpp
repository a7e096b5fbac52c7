#include "relexp/dirac.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <Eigen/Eigenvalues>

#include "relexp/error.hpp"
#include "relexp/specfun.hpp"
#include "relexp/summation.hpp"

namespace relexp {

DiracParams derive(const DiracOrbital& o) {
  auto invalid = [](const std::string& what) { throw Error(ErrorKind::InvalidOrbital, what); };
  if (!(o.Z > 0.0)) invalid("Z > 0 violated");
  if (!(o.alpha >= 0.0)) invalid("alpha >= 0 violated");
  if (o.n < 1) invalid("n >= 1 violated");
  if (o.kappa == 0) invalid("kappa != 0 violated");
  const int ak = std::abs(o.kappa);
  if (ak > o.n) invalid("|kappa| <= n violated");
  const int n_r = o.n - ak;
  if (n_r == 0 && o.kappa > 0) invalid("kappa < 0 for n_r = 0 violated");
  const double az = o.alpha * o.Z;
  if (!(az < ak)) invalid("alpha*Z < |kappa| violated");

  DiracParams p;
  p.n_r = n_r;
  p.gamma = std::sqrt((ak - az) * (ak + az));
  p.N_app = std::sqrt(n_r * (n_r + 2.0 * p.gamma) + double(o.kappa) * o.kappa);
  if (n_r == 0) p.N_app = ak;
  p.zeta = 2.0 * o.Z / p.N_app;
  const double g2 = 2.0 * p.gamma;
  const double log_ratio = gamma_ratio(n_r + g2 + 1.0, g2 + 1.0).log_mag - ln_gamma_signed(g2 + 1.0).log_mag -
                           log_factorial(n_r);
  p.norm = std::sqrt(o.Z / (2.0 * (p.N_app - o.kappa)) * std::exp(log_ratio)) / p.N_app;
  return p;
}

namespace {

struct Components {
  double P, Q;
};

// P = 𝒩 √(1+s) x^γ e^{−x/2} (u − v),  Q = −𝒩 √(1−s) x^γ e^{−x/2} (u + v)
// with u = (N − κ) F(−n_r), v = n_r F(1 − n_r) and s = (n_r + γ)/N.
Components components(const DiracOrbital& o, double r) {
  const DiracParams p = derive(o);
  if (r <= 0.0) return {0.0, 0.0};
  const double x = p.zeta * r;
  const double b = 2.0 * p.gamma + 1.0;
  const double u = (p.N_app - o.kappa) * hyp1f1_terminating(-p.n_r, b, x);
  const double v = p.n_r == 0 ? 0.0 : p.n_r * hyp1f1_terminating(1 - p.n_r, b, x);
  const double s = (p.n_r + p.gamma) / p.N_app;
  const double env = p.norm * std::exp(p.gamma * std::log(x) - 0.5 * x);
  return {std::sqrt(1.0 + s) * env * (u - v), -std::sqrt(1.0 - s) * env * (u + v)};
}

}  // namespace

double radial_P(const DiracOrbital& o, double r) { return components(o, r).P; }
double radial_Q(const DiracOrbital& o, double r) { return components(o, r).Q; }

std::vector<double> density_polynomial(const DiracOrbital& o) {
  const DiracParams p = derive(o);
  const int m = p.n_r;
  const double b = 2.0 * p.gamma + 1.0;
  auto series = [&](int degree, double scale) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    double term = scale;
    for (int s = 0; s <= degree; ++s) {
      c[s] = term;
      term *= (s - degree) / ((b + s) * (s + 1.0));
    }
    return c;
  };
  const std::vector<double> u = series(m, p.N_app - o.kappa);
  const std::vector<double> v = m == 0 ? std::vector<double>{0.0} : series(m - 1, m);
  // P² + Q² = 𝒩² x^{2γ} e^{−x} [2(u² + v²) − 4A uv], A = (n_r + γ)/N
  const double A = (m + p.gamma) / p.N_app;
  std::vector<double> c(2 * static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) c[i + j] += 2.0 * u[i] * u[j];
    for (std::size_t j = 0; j < v.size(); ++j) c[i + j] -= 4.0 * A * u[i] * v[j];
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) c[i + j] += 2.0 * v[i] * v[j];
  for (double& ci : c) ci *= p.norm * p.norm;
  return c;
}

QuadratureRule gauss_laguerre(int n, double a) {
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + a + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + a));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::exp(ln_gamma_signed(a + 1.0).log_mag);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = solver.eigenvalues()[i];
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double normalization_integral(const DiracOrbital& o) {
  const DiracParams p = derive(o);
  // Integrand in x is x^{2γ} e^{−x} · polynomial of degree 2 n_r; dr = dx/ζ.
  const QuadratureRule rule = gauss_laguerre(2 * p.n_r + 4, 2.0 * p.gamma);
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double r = x / p.zeta;
    const Components c = components(o, r);
    const double scale = std::exp(-2.0 * p.gamma * std::log(x) + x);
    sum += rule.weights[i] * (c.P * c.P + c.Q * c.Q) * scale;
  }
  return sum.value() / p.zeta;
}

}  // namespace relexp
