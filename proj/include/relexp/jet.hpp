#pragma once

#include <vector>

namespace relexp {

/// Bivariate Taylor polynomial in (s, t) truncated at degrees (M, N):
/// coefficient (i, j) multiplies s^i t^j.
class Jet2 {
 public:
  Jet2(int M, int N, long double constant = 0.0L);

  static Jet2 var_s(int M, int N);
  static Jet2 var_t(int M, int N);

  int order_s() const { return M_; }
  int order_t() const { return N_; }

  long double& operator()(int i, int j) { return c_[index(i, j)]; }
  long double operator()(int i, int j) const { return c_[index(i, j)]; }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(long double v);
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, long double v) { return a *= v; }
  friend Jet2 operator*(long double v, Jet2 a) { return a *= v; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);

  /// g^p for a series with positive constant term.
  Jet2 pow(long double p) const;
  Jet2 reciprocal() const { return pow(-1.0L); }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (N_ + 1) + j; }

  int M_, N_;
  std::vector<long double> c_;  // extended precision absorbs the binomial growth in pow()
};

}  // namespace relexp
