#pragma once

#include <vector>

namespace relexp {

// Distance from an integer below which a Gamma argument is treated as a pole
// of the continued expression (or two arguments as differing by an integer).
inline constexpr double kContinuationTolerance = 1e-13;
inline constexpr double kPhaseTolerance = 1e-9;

/// A quantity of the form e^{iπ·phase} · exp(log_mag) · ε^{order}, the leading
/// behaviour of an expression whose Gamma arguments are all shifted by +ε.
/// Phases are kept unreduced so that square roots follow a fixed branch.
class ContinuedValue {
 public:
  ContinuedValue() = default;  // exact zero

  static ContinuedValue one() { return from_parts(0.0, 0.0, 0.0); }
  static ContinuedValue from_real(double v);
  static ContinuedValue from_parts(double phase, double log_mag, double order);

  bool is_zero() const { return zero_; }
  double phase() const { return phase_; }
  double log_mag() const { return log_mag_; }
  double order() const { return order_; }

  ContinuedValue& operator*=(const ContinuedValue& o);
  ContinuedValue& operator/=(const ContinuedValue& o) { return *this *= o.reciprocal(); }
  friend ContinuedValue operator*(ContinuedValue a, const ContinuedValue& b) { return a *= b; }
  friend ContinuedValue operator/(ContinuedValue a, const ContinuedValue& b) { return a /= b; }

  ContinuedValue reciprocal() const;
  ContinuedValue pow(double e) const;  // factor-wise: phase, log and order all scale by e
  ContinuedValue sqrt() const { return pow(0.5); }

  /// Coefficient of ε^order as a real number. Throws PhaseAmbiguity when the
  /// phase is not a multiple of π.
  double coefficient(double phase_tol = kPhaseTolerance) const;

  /// The ε → 0 limit. Throws Divergent for a net pole.
  double to_real(double phase_tol = kPhaseTolerance) const;

 private:
  bool zero_ = true;
  double phase_ = 0.0;
  double log_mag_ = 0.0;
  double order_ = 0.0;
};

/// Product of Γ(x)^e factors, real powers and phases, evaluated as a whole so
/// that arguments differing by integers share one Gamma evaluation.
class GammaLedger {
 public:
  struct Factor {
    double arg;
    double exponent;
  };

  GammaLedger& gamma(double x, double exponent = 1.0);
  GammaLedger& factorial(double x, double exponent = 1.0) { return gamma(x + 1.0, exponent); }
  GammaLedger& real(double v, double exponent = 1.0);
  GammaLedger& phase(double p);  // multiply by (−1)^p = e^{iπp}
  GammaLedger& operator*=(const GammaLedger& o);

  const std::vector<Factor>& factors() const { return factors_; }
  const ContinuedValue& scalar() const { return scalar_; }

  ContinuedValue evaluate() const;

 private:
  std::vector<Factor> factors_;
  ContinuedValue scalar_ = ContinuedValue::one();
};

/// common · Σ terms, keeping only the terms of lowest ε-order.
ContinuedValue evaluate_sum(const GammaLedger& common, const std::vector<GammaLedger>& terms);

/// Racah single sum with the factorials left symbolic, so callers can fold
/// their own Gamma prefactors into the same evaluation.
struct RacahExpansion {
  GammaLedger prefactor;
  std::vector<GammaLedger> terms;

  ContinuedValue evaluate() const { return evaluate_sum(prefactor, terms); }
};

RacahExpansion wigner3j_expansion(double j1, double j2, double j3, double m1, double m2,
                                  double m3);
RacahExpansion clebsch_expansion(double j1, double m1, double j2, double m2, double j, double m);

ContinuedValue wigner3j_continued(double j1, double j2, double j3, double m1, double m2,
                                  double m3);

/// Clebsch–Gordan coefficient continued to real (nonphysical) arguments.
double clebsch_continued(double j1, double m1, double j2, double m2, double j, double m);

/// ₃F₂(a, b, c; d, e; 1) through its representation as a Gamma prefactor
/// times a continued Clebsch–Gordan coefficient.
double hyp3f2_via_clebsch(double a, double b, double c, double d, double e);

}  // namespace relexp
