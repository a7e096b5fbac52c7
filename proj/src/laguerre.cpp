#include "relexp/laguerre.hpp"

#include <cmath>
#include <string>

#include "relexp/error.hpp"
#include "relexp/jet.hpp"
#include "relexp/specfun.hpp"

namespace relexp {

namespace {

void check(const LaguerreIntegralSpec& sp) {
  if (sp.m < 0 || sp.n < 0) throw Error(ErrorKind::DomainError, "m, n >= 0 violated");
  if (!(sp.c > 0.0)) throw Error(ErrorKind::ConvergenceViolation, "c > 0 violated");
  if (!(sp.gamma_exp > -1.0)) throw Error(ErrorKind::ConvergenceViolation, "gamma > -1 violated");
}

// Γ(γ+1) / c^{γ+1}
double base_integral(const LaguerreIntegralSpec& sp) {
  const SignedLogValue g = ln_gamma_signed(sp.gamma_exp + 1.0);
  return std::exp(g.log_mag - (sp.gamma_exp + 1.0) * std::log(sp.c));
}

// L_n^{(α)} monomial coefficients in extended precision: the sums below can
// cancel by many orders of magnitude.
std::vector<long double> coefficients(int n, long double alpha) {
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  long double c0 = 1.0L;  // binom(n + α, n) = (α+1)_n / n!
  for (int i = 1; i <= n; ++i) c0 *= (alpha + i) / i;
  c[0] = c0;
  for (int i = 0; i < n; ++i) c[i + 1] = -c[i] * (n - i) / ((alpha + i + 1) * (i + 1));
  return c;
}

}  // namespace

double laguerre_integral_direct(const LaguerreIntegralSpec& sp) {
  check(sp);
  const auto u = coefficients(sp.m, sp.alpha_idx);
  const auto v = coefficients(sp.n, sp.beta_idx);
  // ∫ x^{γ+p} e^{−cx} = Γ(γ+1) (γ+1)_p / c^{γ+1+p}
  const int deg = sp.m + sp.n;
  std::vector<long double> moment(deg + 1);
  long double mp = 1.0L;
  for (int p = 0; p <= deg; ++p) {
    moment[p] = mp;
    mp *= (sp.gamma_exp + 1.0L + p) / sp.c;
  }
  long double sum = 0.0L;
  for (int i = 0; i <= sp.m; ++i) {
    const long double ui = u[i] * std::pow(static_cast<long double>(sp.a), i);
    for (int j = 0; j <= sp.n; ++j)
      sum += ui * v[j] * std::pow(static_cast<long double>(sp.b), j) * moment[i + j];
  }
  return base_integral(sp) * static_cast<double>(sum);
}

double laguerre_integral_magnitude(const LaguerreIntegralSpec& sp) {
  check(sp);
  const auto u = coefficients(sp.m, sp.alpha_idx);
  const auto v = coefficients(sp.n, sp.beta_idx);
  long double sum = 0.0L, mp = 1.0L;
  std::vector<long double> moment(sp.m + sp.n + 1);
  for (std::size_t p = 0; p < moment.size(); ++p) {
    moment[p] = mp;
    mp *= (sp.gamma_exp + 1.0L + p) / sp.c;
  }
  for (int i = 0; i <= sp.m; ++i)
    for (int j = 0; j <= sp.n; ++j)
      sum += std::fabs(u[i] * std::pow(static_cast<long double>(sp.a), i) * v[j] *
                       std::pow(static_cast<long double>(sp.b), j)) * moment[i + j];
  return base_integral(sp) * static_cast<double>(sum);
}

double laguerre_integral_genfun(const LaguerreIntegralSpec& sp) {
  check(sp);
  if (sp.m > kLaguerreDegreeCap || sp.n > kLaguerreDegreeCap)
    throw Error(ErrorKind::UnsupportedPower,
                "m, n <= " + std::to_string(kLaguerreDegreeCap) + " violated");
  const int M = sp.m, N = sp.n;
  const Jet2 s = Jet2::var_s(M, N), t = Jet2::var_t(M, N), one(M, N, 1.0);
  const Jet2 one_minus_s = one - s, one_minus_t = one - t;

  const Jet2 g = Jet2(M, N, sp.c) + sp.a * (s * one_minus_s.reciprocal()) +
                 sp.b * (t * one_minus_t.reciprocal());
  const Jet2 f = one_minus_s.pow(-sp.alpha_idx - 1.0) * one_minus_t.pow(-sp.beta_idx - 1.0) *
                 g.pow(-sp.gamma_exp - 1.0);
  // g.pow carries c^{−γ−1}; only Γ(γ+1) is left.
  const SignedLogValue gam = ln_gamma_signed(sp.gamma_exp + 1.0);
  return std::exp(gam.log_mag) * static_cast<double>(f(M, N));
}

}  // namespace relexp
