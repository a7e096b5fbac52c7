#pragma once

#include <cmath>
#include <limits>

namespace relexp {

/// Real number stored as sign · exp(log_mag). Products and quotients of
/// Gamma functions stay finite in this form long after double overflows.
struct SignedLogValue {
  int sign = 0;  // −1, 0 or +1; 0 means exactly zero and log_mag is ignored
  double log_mag = -std::numeric_limits<double>::infinity();

  static SignedLogValue zero() { return {}; }
  static SignedLogValue one() { return {1, 0.0}; }

  static SignedLogValue from_double(double v) {
    if (v == 0.0) return zero();
    return {v < 0 ? -1 : 1, std::log(std::fabs(v))};
  }

  bool is_zero() const { return sign == 0; }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }

  SignedLogValue reciprocal() const { return {sign, -log_mag}; }

  SignedLogValue& operator*=(const SignedLogValue& o) {
    sign *= o.sign;
    log_mag = sign == 0 ? zero().log_mag : log_mag + o.log_mag;
    return *this;
  }

  SignedLogValue& operator/=(const SignedLogValue& o) {
    return *this *= o.reciprocal();
  }

  friend SignedLogValue operator*(SignedLogValue a, const SignedLogValue& b) {
    return a *= b;
  }
  friend SignedLogValue operator/(SignedLogValue a, const SignedLogValue& b) {
    return a /= b;
  }
};

}  // namespace relexp
