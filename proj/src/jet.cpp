#include "relexp/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace relexp {

Jet2::Jet2(int M, int N, long double constant)
    : M_(M), N_(N), c_(static_cast<std::size_t>(M + 1) * (N + 1), 0.0L) {
  c_[0] = constant;
}

Jet2 Jet2::var_s(int M, int N) {
  Jet2 j(M, N);
  if (M > 0) j(1, 0) = 1.0;
  return j;
}

Jet2 Jet2::var_t(int M, int N) {
  Jet2 j(M, N);
  if (N > 0) j(0, 1) = 1.0;
  return j;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet2& Jet2::operator*=(long double v) {
  for (long double& x : c_) x *= v;
  return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.M_, a.N_);
  for (int i = 0; i <= a.M_; ++i)
    for (int j = 0; j <= a.N_; ++j) {
      const long double x = a(i, j);
      if (x == 0.0) continue;
      for (int p = 0; i + p <= a.M_; ++p)
        for (int q = 0; j + q <= a.N_; ++q) r(i + p, j + q) += x * b(p, q);
    }
  return r;
}

Jet2 Jet2::pow(long double p) const {
  const long double g0 = c_[0];
  if (!(g0 > 0.0L)) throw std::domain_error("Jet2::pow needs a positive constant term");
  // g^p = g0^p (1 + h)^p, h without constant term, so h^j vanishes for j > M + N
  Jet2 h = *this * (1.0L / g0);
  h.c_[0] = 0.0L;
  Jet2 result(M_, N_, 1.0L);
  Jet2 hj(M_, N_, 1.0L);
  long double binom = 1.0L;
  for (int j = 1; j <= M_ + N_; ++j) {
    hj = hj * h;
    binom *= (p - (j - 1)) / j;
    result += hj * binom;
  }
  return result * std::pow(g0, p);
}

}  // namespace relexp
