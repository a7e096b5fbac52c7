#include "relexp/nonrel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "relexp/continuation.hpp"
#include "relexp/error.hpp"
#include "relexp/laguerre.hpp"
#include "relexp/specfun.hpp"

namespace relexp {

namespace {

void check(const VKParams& p) {
  if (p.n < 1 || p.ell < 0 || p.ell_prime < 0 || p.ell >= p.n || p.ell_prime >= p.n)
    throw Error(ErrorKind::DomainError, "0 <= l, l' < n violated");
  if (p.delta != p.ell - p.ell_prime || p.delta < 0)
    throw Error(ErrorKind::DomainError, "delta = l - l' >= 0 violated");
  if (!(p.k + p.ell + p.ell_prime > -3))
    throw Error(ErrorKind::ConvergenceViolation, "k + l + l' > -3 violated");
  if (p.k + 1 >= 0 && p.delta > p.k + 1)
    throw Error(ErrorKind::DomainError,
                "(k+1-delta)! with negative argument " + std::to_string(p.k + 1 - p.delta));
}

GammaLedger factor_ledger(const VKParams& p) {
  const double k = p.k, d = p.delta, ls = p.ell + p.ell_prime;
  GammaLedger f;
  f.factorial(k + 1 - d, 0.5).factorial(k + 1 + d, 0.5).factorial(ls + k + 2, 0.5);
  f.factorial(k + 1, -1.0).factorial(ls - k - 1, -0.5);
  return f;
}

}  // namespace

VKParams make_vk_params(int n, int ell, int ell_prime, int k) {
  if (ell < ell_prime) std::swap(ell, ell_prime);
  return {n, ell, ell_prime, k, ell - ell_prime};
}

RegularizedValue vk_factor(const VKParams& p) {
  check(p);
  const ContinuedValue v = factor_ledger(p).evaluate();
  return {v.coefficient(), v.order()};
}

VKElement vk_matrix_element(const VKParams& p, double Z) {
  check(p);
  const double n = p.n, l = p.ell, lp = p.ell_prime, k = p.k;
  // C^{ℓ n}_{ℓ' n, (k+1) 0}; below k = −1 the coefficient with −(k+2) and an
  // extra (−1)^{ℓ−ℓ'} takes its place, f stays at the original k.
  RacahExpansion ex = p.k + 1 >= 0 ? clebsch_expansion(lp, n, k + 1, 0.0, l, n)
                                   : clebsch_expansion(lp, n, -(k + 2), 0.0, l, n);
  if (p.k + 1 < 0) ex.prefactor.phase(l - lp);
  ex.prefactor *= factor_ledger(p);
  ex.prefactor.phase(0.5 * p.delta);  // i^Δ
  ex.prefactor.real(std::pow(n / 2.0, k) / (2.0 * n * std::sqrt(2.0 * l + 1.0)));
  const double v = ex.evaluate().to_real() * std::pow(Z, -k);
  // The coupling expression fixes the phase of each |nℓ⟩ as σ_ℓ = (−1)^{ℓn − ℓ(ℓ+1)/2}
  // relative to radial functions that are positive at the origin.
  auto sigma = [&](int ell) { return (ell * p.n - ell * (ell + 1) / 2) % 2 == 0 ? 1 : -1; };
  const int convention = sigma(p.ell) * sigma(p.ell_prime);
  return {convention * v, v < 0 ? -1 : 1, p.delta};
}

double schrodinger_expectation(int n, int ell, int ell_prime, int k, double Z) {
  if (n < 1 || ell < 0 || ell_prime < 0 || ell >= n || ell_prime >= n)
    throw Error(ErrorKind::DomainError, "0 <= l, l' < n violated");
  if (!(k + ell + ell_prime > -3))
    throw Error(ErrorKind::ConvergenceViolation, "k + l + l' > -3 violated");
  // R_nℓ = 𝒩 x^ℓ e^{−x/2} L_{n−ℓ−1}^{(2ℓ+1)}(x), x = 2Zr/n,
  // 𝒩² = (2Z/n)³ (n−ℓ−1)! / (2n (n+ℓ)!)
  auto log_norm = [&](int l) {
    return 0.5 * (3.0 * std::log(2.0 * Z / n) + log_factorial(n - l - 1) - std::log(2.0 * n) -
                  log_factorial(n + l));
  };
  LaguerreIntegralSpec spec;
  spec.m = n - ell - 1;
  spec.n = n - ell_prime - 1;
  spec.alpha_idx = 2.0 * ell + 1.0;
  spec.beta_idx = 2.0 * ell_prime + 1.0;
  spec.gamma_exp = ell + ell_prime + k + 2.0;
  const double integral = laguerre_integral_direct(spec);
  return integral * std::exp(log_norm(ell) + log_norm(ell_prime) + (k + 3.0) * std::log(n / (2.0 * Z)));
}

}  // namespace relexp
