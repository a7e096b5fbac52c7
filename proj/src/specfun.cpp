#include "relexp/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "relexp/error.hpp"
#include "relexp/summation.hpp"

namespace relexp {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double lanczos_log(double x) {  // x >= 0.5
  x -= 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

bool near_nonpositive_integer(double x, double tol) {
  return x < 0.5 && std::fabs(x - std::round(x)) <= tol;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct FactorialTable {
  std::vector<double> values;
  FactorialTable() {
    // Racah sums with 2j <= cap touch factorials up to (j1+j2+j3+1)!.
    const int size = 3 * kFactorialCacheCap / 2 + 2;
    values.resize(static_cast<std::size_t>(size) + 1);
    values[0] = 0.0;
    for (int i = 1; i <= size; ++i) values[i] = values[i - 1] + std::log(static_cast<double>(i));
  }
};

const FactorialTable& factorial_table() {
  static const FactorialTable table;  // thread-safe one-time construction
  return table;
}

}  // namespace

SignedLogValue ln_gamma_signed(double x) {
  if (near_nonpositive_integer(x, kPoleTolerance))
    throw Error(ErrorKind::Pole, "Gamma pole at x = " + fmt(x));
  if (x >= 0.5) return {1, lanczos_log(x)};
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  const double s = sin_pi(x);
  return {s < 0 ? -1 : 1, std::log(kPi / std::fabs(s)) - lanczos_log(1.0 - x)};
}

double log_factorial(int n) {
  if (n < 0) throw Error(ErrorKind::Pole, "factorial of negative integer " + std::to_string(n));
  const auto& t = factorial_table().values;
  if (static_cast<std::size_t>(n) < t.size()) return t[n];
  return lanczos_log(n + 1.0);
}

SignedLogValue gamma_ratio(double a, double b) {
  const double d = a - b;
  const double shift = std::round(d);
  if (std::fabs(d - shift) > kShiftTolerance)
    throw Error(ErrorKind::NonIntegerShift, "gamma_ratio: a - b = " + fmt(d) + " is not an integer");
  const bool pole_a = near_nonpositive_integer(a, kPoleTolerance);
  const bool pole_b = near_nonpositive_integer(b, kPoleTolerance);
  if (pole_a != pole_b)
    throw Error(ErrorKind::UncancelledPole,
                "gamma_ratio: uncancelled pole in Gamma(" + fmt(pole_a ? a : b) + ")");
  if (pole_a) {
    // Both poles: snap to the exact integers so every factor is an exact nonzero integer.
    a = std::round(a);
    b = std::round(b);
  }
  const int n = static_cast<int>(shift);
  // Gamma(b + n)/Gamma(b) = b (b+1) ... (b+n-1)
  const double base = n >= 0 ? b : a;
  SignedLogValue r = SignedLogValue::one();
  for (int i = 0; i < std::abs(n); ++i) r *= SignedLogValue::from_double(base + i);
  return n >= 0 ? r : r.reciprocal();
}

double pochhammer(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

double hyp1f1_terminating(int neg_m, double b, double x) {
  const int m = -neg_m;
  CompensatedSum sum;
  double term = 1.0;
  sum += term;
  for (int s = 0; s < m; ++s) {
    if (std::fabs(b + s) <= kTerminationTolerance)
      throw Error(ErrorKind::DenominatorPole, "1F1: (b)_s vanishes at s = " + std::to_string(s + 1));
    term *= (neg_m + s) * x / ((b + s) * (s + 1));
    sum += term;
  }
  return sum.value();
}

double hyp3f2_terminating(double a1, double a2, double a3, double b1, double b2) {
  std::array<double, 3> a = {a1, a2, a3};
  int length = -1;
  for (double& ai : a) {
    if (near_nonpositive_integer(ai, kTerminationTolerance)) {
      ai = std::round(ai);
      const int len = static_cast<int>(-ai);
      if (length < 0 || len < length) length = len;
    }
  }
  if (length < 0)
    throw Error(ErrorKind::NonTerminating, "3F2: no top parameter is a non-positive integer");

  CompensatedSum sum;
  double term = 1.0;
  sum += term;
  for (int s = 0; s < length; ++s) {
    const double d1 = b1 + s, d2 = b2 + s;
    if (std::fabs(d1) <= kTerminationTolerance || std::fabs(d2) <= kTerminationTolerance)
      throw Error(ErrorKind::DenominatorPole,
                  "3F2: bottom Pochhammer vanishes at s = " + std::to_string(s + 1));
    term *= (a[0] + s) * (a[1] + s) * (a[2] + s) / (d1 * d2 * (s + 1));
    sum += term;
  }
  return sum.value();
}

std::vector<double> laguerre_coefficients(int n, double alpha) {
  // (-1)^i binom(n + alpha, n - i) / i!
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const SignedLogValue top = gamma_ratio(n + alpha + 1.0, alpha + i + 1.0);
    const double v = top.value() * std::exp(-log_factorial(n - i) - log_factorial(i));
    c[i] = (i % 2 == 0) ? v : -v;
  }
  return c;
}

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if ((m1 + m2 + m3).twice() != 0) return 0.0;
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m3) > j3) return 0.0;
  if (!(j1 + m1).is_integer() || !(j2 + m2).is_integer() || !(j3 + m3).is_integer()) return 0.0;
  const HalfInt sum = j1 + j2 + j3;
  if (!sum.is_integer()) return 0.0;
  const int a = (j1 + j2 - j3).twice(), b = (j1 - j2 + j3).twice(), c = (-j1 + j2 + j3).twice();
  if (a < 0 || b < 0 || c < 0) return 0.0;

  auto lf = [](HalfInt h) { return log_factorial(h.to_int()); };
  const double log_delta = 0.5 * (lf(j1 + j2 - j3) + lf(j1 - j2 + j3) + lf(-j1 + j2 + j3) -
                                  lf(sum + HalfInt(1)) + lf(j1 + m1) + lf(j1 - m1) +
                                  lf(j2 + m2) + lf(j2 - m2) + lf(j3 + m3) + lf(j3 - m3));

  const int t_min = std::max({0, (j2 - j3 - m1).to_int(), (j1 - j3 + m2).to_int()});
  const int t_max = std::min({(j1 + j2 - j3).to_int(), (j1 - m1).to_int(), (j2 + m2).to_int()});
  CompensatedSum acc;
  for (int t = t_min; t <= t_max; ++t) {
    const HalfInt ht(t);
    const double lt = log_factorial(t) + lf(j3 - j2 + ht + m1) + lf(j3 - j1 + ht - m2) +
                      lf(j1 + j2 - j3 - ht) + lf(j1 - ht - m1) + lf(j2 - ht + m2);
    const double v = std::exp(log_delta - lt);
    acc += (t % 2 == 0) ? v : -v;
  }
  const int phase = (j1 - j2 - m3).to_int();
  const double r = acc.value();
  return (phase % 2 == 0) ? r : -r;
}

double clebsch(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  const double w = wigner3j(j1, j2, j, m1, m2, -m);
  if (w == 0.0) return 0.0;
  const HalfInt p = j1 - j2 + m;  // integer whenever w != 0
  const double r = std::sqrt(j.twice() + 1.0) * w;
  return (p.to_int() % 2 == 0) ? r : -r;
}

}  // namespace relexp
