#pragma once

#include <vector>

#include "relexp/half_int.hpp"
#include "relexp/signed_log.hpp"

namespace relexp {

inline constexpr double kPoleTolerance = 1e-13;
inline constexpr double kShiftTolerance = 1e-12;
inline constexpr double kTerminationTolerance = 1e-10;

// Largest 2j for which Racah-sum factorials come from the table.
#ifndef RELEXP_FACTORIAL_CACHE_CAP
#define RELEXP_FACTORIAL_CACHE_CAP 200
#endif
inline constexpr int kFactorialCacheCap = RELEXP_FACTORIAL_CACHE_CAP;

/// Sign and log|Γ(x)|. Throws ErrorKind::Pole at non-positive integers.
SignedLogValue ln_gamma_signed(double x);

/// ln(n!) for n ≥ 0; tabulated up to the cache cap.
double log_factorial(int n);

/// Γ(a)/Γ(b) for integer a − b. Where both arguments are poles the ratio
/// is the limit of Γ(a+ε)/Γ(b+ε).
SignedLogValue gamma_ratio(double a, double b);

/// Rising factorial (a)_n.
double pochhammer(double a, int n);

/// ₁F₁(−m; b; x) as a polynomial of degree m (neg_m = −m ≤ 0).
double hyp1f1_terminating(int neg_m, double b, double x);

/// ₃F₂(a1, a2, a3; b1, b2; 1) for a terminating series.
double hyp3f2_terminating(double a1, double a2, double a3, double b1, double b2);

/// Coefficients of L_n^{(alpha)}(x) in the monomial basis, lowest first.
std::vector<double> laguerre_coefficients(int n, double alpha);

/// Wigner 3j symbol for physical arguments; selection-rule violations give 0.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// ⟨j1 m1 j2 m2 | j m⟩ = (−1)^{j1−j2+m} √(2j+1) (j1 j2 j; m1 m2 −m).
double clebsch(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

}  // namespace relexp
