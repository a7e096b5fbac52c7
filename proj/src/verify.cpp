#include "relexp/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "relexp/continuation.hpp"
#include "relexp/dirac.hpp"
#include "relexp/error.hpp"
#include "relexp/laguerre.hpp"
#include "relexp/nonrel.hpp"
#include "relexp/radint.hpp"
#include "relexp/specfun.hpp"

namespace relexp {

namespace {

constexpr double kGridZ[] = {1.0, 20.0, 80.0};

// Valid κ for n in ascending order: −n … −1, 1 … n−1.
std::vector<int> kappas(int n) {
  std::vector<int> out;
  for (int k = -n; k < n; ++k)
    if (k != 0) out.push_back(k);
  return out;
}

int ell_of(int kappa) { return kappa > 0 ? kappa : -kappa - 1; }

std::string where(double Z, int n, int kappa, int k) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "Z=%g n=%d kappa=%d k=%d", Z, n, kappa, k);
  return buf;
}

class Tracker {
 public:
  Tracker(std::string name, double tol) { r_.name = std::move(name); r_.tol = tol; }

  void record(double dev, const std::string& at) {
    ++r_.cases;
    if (!(dev <= r_.worst) || std::isnan(dev)) {  // NaN counts as a failure
      r_.worst = std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev;
      r_.where = at;
    }
  }

  void fail(const std::string& at, const std::exception& e) {
    ++r_.cases;
    r_.worst = std::numeric_limits<double>::infinity();
    r_.where = at + ": " + e.what();
  }

  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

SuiteResult verify_specfun(std::uint64_t seed) {
  SuiteResult s{"specfun", {}};

  Tracker ortho("3j orthogonality (j<=4)", 1e-12);
  for (int tj1 = 0; tj1 <= 8; ++tj1)
    for (int tj2 = 0; tj2 <= 8; ++tj2)
      for (int tj3 = std::abs(tj1 - tj2); tj3 <= std::min(tj1 + tj2, 8); tj3 += 2)
        for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2) {
          double sum = 0.0;
          for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
            const int tm2 = -tm1 - tm3;
            if (std::abs(tm2) > tj2) continue;
            const double w = wigner3j(HalfInt::from_twice(tj1), HalfInt::from_twice(tj2),
                                      HalfInt::from_twice(tj3), HalfInt::from_twice(tm1),
                                      HalfInt::from_twice(tm2), HalfInt::from_twice(tm3));
            sum += (tj3 + 1) * w * w;
          }
          char buf[64];
          std::snprintf(buf, sizeof buf, "2j=(%d,%d,%d) 2m3=%d", tj1, tj2, tj3, tm3);
          ortho.record(std::fabs(sum - 1.0), buf);
        }
  s.checks.push_back(ortho.result());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-20.0, 20.0);
  Tracker recur("Gamma recurrence", 1e-12), refl("Gamma reflection", 1e-11);
  for (int i = 0; i < 1000;) {
    const double x = ux(rng);
    if (x < 0.5 && std::fabs(x - std::round(x)) <= 1e-3) continue;
    ++i;
    const std::string at = "x=" + std::to_string(x);
    const SignedLogValue g0 = ln_gamma_signed(x), g1 = ln_gamma_signed(x + 1.0);
    recur.record(std::fabs(g1.sign * g0.sign * std::exp(g1.log_mag - g0.log_mag) / x - 1.0), at);
    const SignedLogValue gm = ln_gamma_signed(1.0 - x);
    const double prod = g0.sign * gm.sign * std::exp(g0.log_mag + gm.log_mag) *
                        std::sin(std::numbers::pi * x) / std::numbers::pi;
    refl.record(std::fabs(prod - 1.0), at);
  }
  s.checks.push_back(recur.result());
  s.checks.push_back(refl.result());

  Tracker cont("continued CG = physical CG (200 random)", 1e-11);
  std::uniform_int_distribution<int> uj(0, 8);
  while (cont.result().cases < 200) {
    const int tj1 = uj(rng), tj2 = uj(rng);
    std::uniform_int_distribution<int> uj3(0, (tj1 + tj2 - std::abs(tj1 - tj2)) / 2);
    const int tj = std::abs(tj1 - tj2) + 2 * uj3(rng);
    std::uniform_int_distribution<int> um1(0, tj1), um2(0, tj2);
    const int tm1 = -tj1 + 2 * um1(rng), tm2 = -tj2 + 2 * um2(rng);
    const int tm = tm1 + tm2;
    if (std::abs(tm) > tj) continue;
    char buf[96];
    std::snprintf(buf, sizeof buf, "2(j1,m1,j2,m2,j,m)=(%d,%d,%d,%d,%d,%d)", tj1, tm1, tj2, tm2, tj, tm);
    try {
      const double phys = clebsch(HalfInt::from_twice(tj1), HalfInt::from_twice(tm1),
                                  HalfInt::from_twice(tj2), HalfInt::from_twice(tm2),
                                  HalfInt::from_twice(tj), HalfInt::from_twice(tm));
      const double c = clebsch_continued(tj1 / 2.0, tm1 / 2.0, tj2 / 2.0, tm2 / 2.0, tj / 2.0, tm / 2.0);
      cont.record(std::fabs(c - phys), buf);
    } catch (const std::exception& e) {
      cont.fail(buf, e);
    }
  }
  s.checks.push_back(cont.result());
  return s;
}

SuiteResult verify_normalization(int max_n) {
  SuiteResult s{"normalization", {}};
  Tracker quad("Gauss-Laguerre integral of P^2+Q^2", 1e-10), k0("k=0 on every route", 1e-12);
  for (double Z : kGridZ)
    for (int n = 1; n <= max_n; ++n)
      for (int kappa : kappas(n)) {
        const DiracOrbital o{Z, n, kappa};
        const std::string at = where(Z, n, kappa, 0);
        try {
          quad.record(std::fabs(normalization_integral(o) - 1.0), at);
        } catch (const std::exception& e) {
          quad.fail(at, e);
        }
        for (Method m : kAllMethods) {
          if (m == Method::ClosedForm) continue;  // no k = 0 row
          if (m == Method::Pochhammer && n != -kappa) continue;
          try {
            k0.record(std::fabs(expval({o, 0}, m).value - 1.0), at + " " + std::string(to_string(m)));
          } catch (const std::exception& e) {
            k0.fail(at, e);
          }
        }
      }
  s.checks.push_back(quad.result());
  s.checks.push_back(k0.result());
  return s;
}

SuiteResult verify_route_agreement(int max_n, double tol) {
  SuiteResult s{"route-agreement", {}};
  Tracker routes("hyp3f2/cg/alt/oracle (+closed, pochhammer)", tol);
  Tracker forms("closed-form rows: both forms", 1e-12);
  for (double Z : kGridZ)
    for (int n = 1; n <= max_n; ++n)
      for (int kappa : kappas(n))
        for (int k = -3; k <= 6; ++k) {
          const MomentRequest req{{Z, n, kappa}, k};
          const std::string at = where(Z, n, kappa, k);
          std::vector<double> v;
          try {
            v.push_back(expval_oracle(req).value);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::ConvergenceViolation) continue;
            routes.fail(at, e);
            continue;
          }
          try {
            v.push_back(expval_hyp3f2(req).value);
            v.push_back(expval_cg(req).value);
            v.push_back(expval_alt(req).value);
          } catch (const std::exception& e) {
            routes.fail(at, e);
            continue;
          }
          for (Method m : {Method::ClosedForm, Method::Pochhammer}) {
            try {
              v.push_back(expval(req, m).value);
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::NotApplicable && e.kind() != ErrorKind::UnsupportedPower &&
                  e.kind() != ErrorKind::PoleInClosedForm)
                routes.fail(at, e);
            }
          }
          routes.record(max_relative_deviation(v), at);
          try {
            const ClosedFormPair p = closed_form_pair(req);
            forms.record(rel(p.first, p.second), at);
          } catch (const Error&) {
          }
        }
  s.checks.push_back(routes.result());
  s.checks.push_back(forms.result());
  return s;
}

SuiteResult verify_laguerre() {
  SuiteResult s{"laguerre", {}};
  Tracker nonzero("genfun = direct (relative)", 1e-10);
  Tracker vanishing("genfun = direct on vanishing integrals (|diff|/sum|terms|)", 1e-10);
  const double vals[] = {0.5, 1.0, 2.0};
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (double al : vals)
        for (double be : vals)
          for (double g : vals)
            for (double a : vals)
              for (double b : vals)
                for (double c : vals) {
                  const LaguerreIntegralSpec sp{m, n, al, be, g, a, b, c};
                  char buf[128];
                  std::snprintf(buf, sizeof buf, "m=%d n=%d alpha=%g beta=%g gamma=%g a=%g b=%g c=%g",
                                m, n, al, be, g, a, b, c);
                  const double x = laguerre_integral_direct(sp), y = laguerre_integral_genfun(sp);
                  const double scale = laguerre_integral_magnitude(sp);
                  if (std::fabs(x) < 1e-12 * scale)
                    vanishing.record(std::fabs(x - y) / scale, buf);
                  else
                    nonzero.record(rel(y, x), buf);
                }
  s.checks.push_back(nonzero.result());
  s.checks.push_back(vanishing.result());
  return s;
}

SuiteResult verify_vk_oracle(int max_n) {
  SuiteResult s{"vk-oracle", {}};
  Tracker t("VK relation = Schrodinger integral", 1e-9);
  Tracker sym("symmetry l <-> l'", 1e-13);
  for (int n = 1; n <= max_n; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp < n; ++lp)
        for (int k = -2; k <= 4; ++k) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "n=%d l=%d l'=%d k=%d", n, l, lp, k);
          const VKParams p = make_vk_params(n, l, lp, k);
          if (k + 1 >= 0 && p.delta > k + 1) continue;  // outside the relation's domain
          try {
            const double ref = schrodinger_expectation(n, l, lp, k, 1.0);
            const double v = vk_matrix_element(p, 1.0).value;
            // Off-diagonal k = −2 elements vanish; compare those absolutely.
            t.record(std::fabs(ref) < 1e-12 ? std::fabs(v - ref) : rel(v, ref), buf);
            const double w = vk_matrix_element(make_vk_params(n, lp, l, k), 1.0).value;
            sym.record(std::fabs(v - w), buf);
          } catch (const std::exception& e) {
            t.fail(buf, e);
          }
        }
  s.checks.push_back(t.result());
  s.checks.push_back(sym.result());
  return s;
}

SuiteResult verify_nr_limit(int max_n) {
  SuiteResult s{"nr-limit", {}};
  Tracker lim("alpha=1e-6 relativistic = Schrodinger", 1e-8);
  Tracker slope("alpha-scan log-log slope - 2", 0.2);
  const double scan[] = {1e-2, 1e-3, 1e-4};
  for (int n = 1; n <= max_n; ++n)
    for (int kappa : kappas(n))
      for (int k = -2; k <= 4; ++k) {
        const std::string at = where(1.0, n, kappa, k);
        const int l = ell_of(kappa);
        try {
          const double nr = schrodinger_expectation(n, l, l, k, 1.0);
          for (Method m : {Method::Hyp3F2, Method::ClebschGordan, Method::Oracle}) {
            const double v = expval({{1.0, n, kappa, 1e-6}, k}, m).value;
            lim.record(rel(v, nr), at + " " + std::string(to_string(m)));
          }
          if (k == 0) continue;  // exactly 1 for every alpha
          // least-squares slope of log|error| against log alpha
          double sx = 0, sy = 0, sxx = 0, sxy = 0;
          for (double a : scan) {
            const double e = rel(expval_hyp3f2({{1.0, n, kappa, a}, k}).value, nr);
            const double x = std::log(a), y = std::log(e);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
          }
          const double b = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
          slope.record(std::fabs(b - 2.0), at);
        } catch (const std::exception& e) {
          lim.fail(at, e);
        }
      }
  s.checks.push_back(lim.result());
  s.checks.push_back(slope.result());
  return s;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& o) {
  return {verify_specfun(o.seed),        verify_normalization(o.max_n),
          verify_route_agreement(o.max_n, o.route_tol), verify_laguerre(),
          verify_vk_oracle(o.max_n),     verify_nr_limit(o.max_n)};
}

}  // namespace relexp
