#pragma once

#include <vector>

namespace relexp {

inline constexpr double kDefaultAlpha = 1.0 / 137.035999084;

struct DiracOrbital {
  double Z = 1.0;
  int n = 1;
  int kappa = -1;
  double alpha = kDefaultAlpha;
};

struct DiracParams {
  double gamma;  // √(κ² − α²Z²)
  int n_r;       // n − |κ|
  double N_app;  // √(n_r² + 2 n_r γ + κ²)
  double zeta;   // 2Z / N
  double norm;
};

/// Throws InvalidOrbital naming the violated constraint.
DiracParams derive(const DiracOrbital& orbital);

/// Large and small radial components at radius r (atomic units).
double radial_P(const DiracOrbital& orbital, double r);
double radial_Q(const DiracOrbital& orbital, double r);

/// c_s with P² + Q² = x^{2γ} e^{−x} Σ c_s x^s, x = ζr; degree 2 n_r.
std::vector<double> density_polynomial(const DiracOrbital& orbital);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule for ∫₀^∞ x^a e^{−x} f(x) dx (Golub–Welsch).
QuadratureRule gauss_laguerre(int nodes, double a);

/// ∫₀^∞ (P² + Q²) dr by Gauss–Laguerre quadrature of the wavefunctions.
double normalization_integral(const DiracOrbital& orbital);

}  // namespace relexp
