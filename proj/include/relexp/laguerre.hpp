#pragma once

namespace relexp {

// Degree cap for the generating-function route.
inline constexpr int kLaguerreDegreeCap = 12;

/// I = ∫₀^∞ x^γ e^{−cx} L_m^{(α)}(ax) L_n^{(β)}(bx) dx
struct LaguerreIntegralSpec {
  int m = 0;
  int n = 0;
  double alpha_idx = 0.0;
  double beta_idx = 0.0;
  double gamma_exp = 0.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};

/// Monomial expansion of both polynomials, integrated term by term.
double laguerre_integral_direct(const LaguerreIntegralSpec& spec);

/// Σ of the absolute values of the terms summed by the direct route. Integrals
/// far below this scale have cancelled, many of them to exactly zero.
double laguerre_integral_magnitude(const LaguerreIntegralSpec& spec);

/// Coefficient of s^m t^n in the generating-function closed form.
double laguerre_integral_genfun(const LaguerreIntegralSpec& spec);

}  // namespace relexp
