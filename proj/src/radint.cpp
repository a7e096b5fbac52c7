#include "relexp/radint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relexp/continuation.hpp"
#include "relexp/error.hpp"
#include "relexp/specfun.hpp"
#include "relexp/summation.hpp"

namespace relexp {

namespace {

struct Setup {
  DiracParams p;
  double kappa;
  double Z;
  int k;
};

Setup prepare(const MomentRequest& req) {
  const DiracParams p = derive(req.orbital);
  if (std::abs(req.k) > kMaxPower)
    throw Error(ErrorKind::UnsupportedPower,
                "|k| <= " + std::to_string(kMaxPower) + " violated (k = " + std::to_string(req.k) + ")");
  if (!(req.k + 2.0 * p.gamma > -1.0))
    throw Error(ErrorKind::ConvergenceViolation, "k + 2*gamma > -1 violated");
  return {p, static_cast<double>(req.orbital.kappa), req.orbital.Z, req.k};
}

// ζ^{−k} Γ(2γ+n_r+k)/Γ(2γ+n_r+1) / (2N), common to the ₃F₂ and 3j routes.
SignedLogValue common_prefactor(const Setup& s) {
  const double g2 = 2.0 * s.p.gamma;
  SignedLogValue pre = gamma_ratio(g2 + s.p.n_r + s.k, g2 + s.p.n_r + 1.0);
  pre.log_mag -= s.k * std::log(s.p.zeta) + std::log(2.0 * s.p.N_app);
  return pre;
}

MomentResult result(double v, Method m, const MomentRequest& req) { return {v, m, req}; }

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Hyp3F2: return "hyp3f2";
    case Method::ClebschGordan: return "cg";
    case Method::Alternative: return "alt";
    case Method::ClosedForm: return "closed";
    case Method::Oracle: return "oracle";
    case Method::Pochhammer: return "pochhammer";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

MomentResult expval_hyp3f2(const MomentRequest& req) {
  const Setup s = prepare(req);
  const double g = s.p.gamma, g2 = 2.0 * g, N = s.p.N_app, kap = s.kappa;
  const double nr = s.p.n_r, k = s.k;

  CompensatedSum sum;
  sum += (N - kap) * (g2 + nr + k) * hyp3f2_terminating(-k, -k, -nr, 1.0, -g2 - nr - k);
  if (s.p.n_r > 0) {
    sum += (N + kap) * (g2 + nr) * hyp3f2_terminating(-k, -k, 1.0 - nr, 1.0, -g2 - nr - k + 1.0);
    if (s.k != 0)
      sum += (2.0 * k / N) * nr * (nr + g) * (nr + g2) *
             hyp3f2_terminating(-k, 1.0 - k, 1.0 - nr, 2.0, -g2 - nr - k + 1.0);
  }
  return result(common_prefactor(s).value() * sum.value(), Method::Hyp3F2, req);
}

MomentResult expval_cg(const MomentRequest& req, ThirdTermPhase variant) {
  const Setup s = prepare(req);
  const double g = s.p.gamma, g2 = 2.0 * g, N = s.p.N_app, kap = s.kappa;
  const double nr = s.p.n_r, k = s.k;
  const double jj = -0.5 - g;  // both lower j's

  // √Γ(1+k−2γ)/√Γ(−k−2γ), shared by all three terms
  GammaLedger root;
  root.gamma(1.0 + k - g2, 0.5).gamma(-k - g2, -0.5);

  double total = 0.0;
  {
    RacahExpansion ex = wigner3j_expansion(k, jj, jj, 0.0, 0.5 + nr + g, -0.5 - nr - g);
    ex.prefactor *= root;
    ex.prefactor.real((N - kap) * (g2 + nr + k)).phase(1.0 + k + nr + g2);
    ex.prefactor.gamma(-k - nr - g2).gamma(-nr - g2, -1.0);
    total += ex.evaluate().to_real();
  }
  if (s.p.n_r > 0) {
    RacahExpansion ex = wigner3j_expansion(k, jj, jj, 0.0, -0.5 + nr + g, 0.5 - nr - g);
    ex.prefactor *= root;
    ex.prefactor.real((N + kap) * (g2 + nr)).phase(k + nr + g2);
    ex.prefactor.gamma(1.0 - k - nr - g2).gamma(1.0 - nr - g2, -1.0);
    total += ex.evaluate().to_real();

    if (s.k != 0) {
      RacahExpansion ex3 = wigner3j_expansion(k, jj, jj, 1.0, -0.5 + nr + g, -0.5 - nr - g);
      GammaLedger& p = ex3.prefactor;
      p *= root;
      p.real((2.0 * k / N) * nr * (nr + g) * (nr + g2));
      p.phase(1.0 + k + nr + (variant == ThirdTermPhase::TwoGamma ? g2 : 2.0));
      p.gamma(1.0 - k - nr - g2);
      // 1/√(k(k+1)) written as √(Γ(k)/Γ(k+2)) so that k = −1 is a regular limit
      p.gamma(k, 0.5).gamma(k + 2.0, -0.5);
      p.real(nr, -0.5).gamma(-nr - g2, -0.5).gamma(1.0 - nr - g2, -0.5);
      total += ex3.evaluate().to_real();
    }
  }
  return result(common_prefactor(s).value() * total, Method::ClebschGordan, req);
}

MomentResult expval_alt(const MomentRequest& req) {
  const Setup s = prepare(req);
  const double g = s.p.gamma, g2 = 2.0 * g, N = s.p.N_app, kap = s.kappa;
  const double nr = s.p.n_r, k = s.k;
  const double D = 2.0 * g2 + 2.0 * nr + k + 1.0;
  if (std::fabs(D) < 1e-12)
    throw Error(ErrorKind::DomainError, "4*gamma + 2*n_r + k + 1 != 0 violated");
  const double m = nr + g, a = g2 + nr + k;

  const double A = -(D * kap * (N - kap) + (nr + g2) * (nr + g2) * (g2 + k + 1.0)) * a;
  const double B = 2.0 * m * (nr + g2) * a * (a + 1.0);
  CompensatedSum sum;
  sum += A * hyp3f2_terminating(-k, -k, -nr, 1.0, -a);
  sum += B * hyp3f2_terminating(-k - 1.0, -k - 1.0, -nr, 1.0, -a - 1.0);
  if (s.p.n_r > 0) {
    const double C = (N + kap) * (g2 + nr) * (N * (g2 + k + 1.0) + 2.0 * kap * m);
    sum += C * hyp3f2_terminating(-k, -k, 1.0 - nr, 1.0, -a + 1.0);
  }
  SignedLogValue pre = common_prefactor(s);  // carries 1/(2N)
  pre.log_mag -= std::log(N * D);
  return result(pre.value() * sum.value(), Method::Alternative, req);
}

ClosedFormPair closed_form_pair(const MomentRequest& req) {
  const DiracParams p = derive(req.orbital);
  const double g = p.gamma, N = p.N_app, kap = req.orbital.kappa, Z = req.orbital.Z;
  const double nr = p.n_r, m = nr + g;
  const double az = req.orbital.alpha * Z;
  const double s = std::sqrt(1.0 - az * az / (N * N));
  const double k2 = kap * kap, N2 = N * N;

  switch (req.k) {
    case -3: {
      if (!(g > 1.0)) throw Error(ErrorKind::PoleInClosedForm, "gamma<=1 pole");
      const double f1 = 8.0 * Z * Z * Z * (6.0 * k2 * m * m + 2.0 * N2 * (1.0 - g * g) - 6.0 * N * kap * m) /
                        ((2 * g - 2) * (2 * g - 1) * (2 * g) * (2 * g + 1) * (2 * g + 2) * std::pow(N, 5));
      const double f2 = 2.0 * Z * Z * Z *
                        (-3.0 * N2 * kap * s + N2 + 2.0 * g * g * k2 + (N2 - k2) * (3.0 * k2 - g * g)) /
                        ((g - 1) * g * (g + 1) * (2 * g - 1) * (2 * g + 1) * std::pow(N, 5));
      return {f1, f2};
    }
    case -2: {
      if (!(2.0 * g > 1.0)) throw Error(ErrorKind::PoleInClosedForm, "2*gamma<=1 pole");
      const double v = 4.0 * Z * Z * (2.0 * k2 * m - N * kap) /
                       ((2 * g - 1) * (2 * g) * (2 * g + 1) * N2 * N2);
      return {v, v};
    }
    case -1: {
      const double v = Z * (k2 + nr * g) / (g * N2 * N);
      return {v, v};
    }
    case 1:
      return {(3.0 * N2 * m - N * kap - k2 * m) / (2.0 * Z * N),
              ((3.0 * N2 - k2) * s - kap) / (2.0 * Z)};
    case 2:
      return {(N2 * (5.0 * m * m + 1.0 - g * g) - 3.0 * N * kap * m - 2.0 * k2 * m * m) / (2.0 * Z * Z),
              N2 * ((5.0 * N2 - 2.0 * k2) * (1.0 - az * az / N2) + (1.0 - g * g) - 3.0 * kap * s) /
                  (2.0 * Z * Z)};
    default:
      throw Error(ErrorKind::UnsupportedPower,
                  "closed form exists only for k in {-3,-2,-1,1,2} (k = " + std::to_string(req.k) + ")");
  }
}

double closed_form_k2_printed(const MomentRequest& req) {
  const DiracParams p = derive(req.orbital);
  const double g = p.gamma, N = p.N_app, kap = req.orbital.kappa, Z = req.orbital.Z;
  const double m = p.n_r + g;
  return (N * N * (5.0 * m * m + 1.0 - g * g) - 6.0 * N * kap * m - 4.0 * kap * kap * m * m) / (2.0 * Z * Z);
}

MomentResult expval_closed(const MomentRequest& req) {
  // Pole checks come before the convergence check so that the reported reason
  // names the denominator.
  const ClosedFormPair pair = closed_form_pair(req);
  prepare(req);
  return result(pair.first, Method::ClosedForm, req);
}

MomentResult expval_nr0(const MomentRequest& req) {
  const Setup s = prepare(req);
  if (s.p.n_r != 0) throw Error(ErrorKind::NotApplicable, "n_r = 0 required");
  const double b = 2.0 * s.p.gamma + 1.0;
  SignedLogValue v = gamma_ratio(b + s.k, b);  // (2γ+1)_k, also for k < 0
  v.log_mag -= s.k * std::log(s.p.zeta);
  return result(v.value(), Method::Pochhammer, req);
}

MomentResult expval_oracle(const MomentRequest& req) {
  const Setup s = prepare(req);
  const std::vector<double> c = density_polynomial(req.orbital);
  const double g2 = 2.0 * s.p.gamma;
  // ∫ r^k x^{2γ+s} e^{−x} dr with x = ζr gives Γ(2γ+s+k+1)/ζ^{k+1}. Γ(a+s) = Γ(a)(a)_s
  // keeps one Gamma evaluation outside the alternating sum.
  const long double a = g2 + s.k + 1.0;
  long double sum = 0.0L, rising = 1.0L;
  for (std::size_t i = 0; i < c.size(); ++i) {
    sum += static_cast<long double>(c[i]) * rising;
    rising *= a + static_cast<long double>(i);
  }
  const SignedLogValue ga = ln_gamma_signed(static_cast<double>(a));
  const double scale = ga.sign * std::exp(ga.log_mag - (s.k + 1) * std::log(s.p.zeta));
  return result(scale * static_cast<double>(sum), Method::Oracle, req);
}

MomentResult expval(const MomentRequest& req, Method method) {
  switch (method) {
    case Method::Hyp3F2: return expval_hyp3f2(req);
    case Method::ClebschGordan: return expval_cg(req);
    case Method::Alternative: return expval_alt(req);
    case Method::ClosedForm: return expval_closed(req);
    case Method::Oracle: return expval_oracle(req);
    case Method::Pochhammer: return expval_nr0(req);
  }
  throw Error(ErrorKind::NotApplicable, "unknown method");
}

double max_relative_deviation(std::span<const double> values) {
  double worst = 0.0;
  for (double a : values)
    for (double b : values)
      if (b != 0.0) worst = std::max(worst, std::fabs(a - b) / std::fabs(b));
  return worst;
}

}  // namespace relexp
