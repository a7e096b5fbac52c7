#include "relexp/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "relexp/error.hpp"
#include "relexp/specfun.hpp"

namespace relexp {

namespace {

constexpr double kOrderTolerance = 1e-9;

bool near_integer(double x) { return std::fabs(x - std::round(x)) <= kContinuationTolerance; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

// ---- ContinuedValue ---------------------------------------------------------

ContinuedValue ContinuedValue::from_real(double v) {
  if (v == 0.0) return {};
  return from_parts(v < 0 ? 1.0 : 0.0, std::log(std::fabs(v)), 0.0);
}

ContinuedValue ContinuedValue::from_parts(double phase, double log_mag, double order) {
  ContinuedValue c;
  c.zero_ = false;
  c.phase_ = phase;
  c.log_mag_ = log_mag;
  c.order_ = order;
  return c;
}

ContinuedValue& ContinuedValue::operator*=(const ContinuedValue& o) {
  if (zero_ || o.zero_) return *this = ContinuedValue{};
  phase_ += o.phase_;
  log_mag_ += o.log_mag_;
  order_ += o.order_;
  return *this;
}

ContinuedValue ContinuedValue::reciprocal() const {
  if (zero_) throw Error(ErrorKind::Divergent, "reciprocal of exact zero");
  return from_parts(-phase_, -log_mag_, -order_);
}

ContinuedValue ContinuedValue::pow(double e) const {
  if (zero_) {
    if (e > 0) return {};
    if (e == 0) return one();
    throw Error(ErrorKind::Divergent, "negative power of exact zero");
  }
  return from_parts(phase_ * e, log_mag_ * e, order_ * e);
}

double ContinuedValue::coefficient(double phase_tol) const {
  if (zero_) return 0.0;
  const double s = std::sin(std::numbers::pi * phase_);
  if (std::fabs(s) > phase_tol)
    throw Error(ErrorKind::PhaseAmbiguity,
                "continued value has residual phase exp(i*pi*" + fmt(phase_) + ")");
  const double mag = std::exp(log_mag_);
  return std::cos(std::numbers::pi * phase_) < 0 ? -mag : mag;
}

double ContinuedValue::to_real(double phase_tol) const {
  if (zero_ || order_ > kOrderTolerance) return 0.0;
  if (order_ < -kOrderTolerance)
    throw Error(ErrorKind::Divergent, "continued value has a pole of order " + fmt(-order_));
  return coefficient(phase_tol);
}

// ---- GammaLedger ------------------------------------------------------------

GammaLedger& GammaLedger::gamma(double x, double exponent) {
  if (exponent != 0.0) factors_.push_back({x, exponent});
  return *this;
}

GammaLedger& GammaLedger::real(double v, double exponent) {
  scalar_ *= ContinuedValue::from_real(v).pow(exponent);
  return *this;
}

GammaLedger& GammaLedger::phase(double p) {
  scalar_ *= ContinuedValue::from_parts(p, 0.0, 0.0);
  return *this;
}

GammaLedger& GammaLedger::operator*=(const GammaLedger& o) {
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  scalar_ *= o.scalar_;
  return *this;
}

ContinuedValue GammaLedger::evaluate() const { return evaluate_sum(GammaLedger{}, {*this}); }

// ---- evaluation ---------------------------------------------------------------

namespace {

// Arguments that differ by integers form one class. Non-integral classes are
// evaluated relative to their largest member x0: Γ(x0 − d) = Γ(x0) / Π_{j=1..d}(x0 − j),
// so Γ(x0) enters only through the class's net exponent. Integral classes
// use exact factorials and pole residues.
struct ArgClass {
  double rep;
  double base;
  bool integral;
  SignedLogValue base_gamma;
};

class ClassTable {
 public:
  void add(double x) {
    for (auto& c : classes_) {
      if (near_integer(x - c.rep)) {
        c.base = std::max(c.base, x);
        return;
      }
    }
    classes_.push_back({x, x, near_integer(x), {}});
  }

  void finalize() {
    for (auto& c : classes_) {
      if (!c.integral) c.base_gamma = ln_gamma_signed(c.base);
    }
  }

  std::size_t find(double x) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (near_integer(x - classes_[i].rep)) return i;
    return classes_.size();  // unreachable after add()
  }

  const ArgClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const { return classes_.size(); }

 private:
  std::vector<ArgClass> classes_;
};

struct PartialEval {
  ContinuedValue value;     // everything except Γ(x0)^net of each class
  std::vector<double> net;  // net exponent of Γ(x0) per class
};

PartialEval evaluate_partial(const GammaLedger& ledger, const ClassTable& table) {
  PartialEval out{ledger.scalar(), std::vector<double>(table.size(), 0.0)};
  if (out.value.is_zero()) return out;
  double phase = 0.0, log_mag = 0.0, order = 0.0;
  for (const auto& f : ledger.factors()) {
    const std::size_t ci = table.find(f.arg);
    const ArgClass& c = table[ci];
    if (c.integral) {
      const long n = std::lround(f.arg);
      if (n >= 1) {
        log_mag += f.exponent * log_factorial(static_cast<int>(n - 1));
      } else {
        // Γ(−p + ε) ≈ (−1)^p / (p! ε)
        const int p = static_cast<int>(-n);
        log_mag -= f.exponent * log_factorial(p);
        if (p % 2 != 0) phase += f.exponent;
        order -= f.exponent;
      }
      continue;
    }
    const long d = std::lround(c.base - f.arg);
    int sign = c.base_gamma.sign;
    double rel = 0.0;
    for (long j = 1; j <= d; ++j) {
      const double v = c.base - static_cast<double>(j);
      if (v < 0) sign = -sign;
      rel -= std::log(std::fabs(v));
    }
    log_mag += f.exponent * rel;
    if (sign < 0) phase += f.exponent;
    out.net[ci] += f.exponent;
  }
  out.value *= ContinuedValue::from_parts(phase, log_mag, order);
  return out;
}

ContinuedValue class_factor(const ClassTable& table, const std::vector<double>& net) {
  double log_mag = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (net[i] != 0.0) log_mag += net[i] * table[i].base_gamma.log_mag;
  return ContinuedValue::from_parts(0.0, log_mag, 0.0);
}

}  // namespace

ContinuedValue evaluate_sum(const GammaLedger& common, const std::vector<GammaLedger>& terms) {
  if (terms.empty()) return {};
  ClassTable table;
  for (const auto& f : common.factors()) table.add(f.arg);
  for (const auto& t : terms)
    for (const auto& f : t.factors()) table.add(f.arg);
  table.finalize();

  const PartialEval head = evaluate_partial(common, table);
  if (head.value.is_zero()) return {};

  std::vector<PartialEval> parts;
  parts.reserve(terms.size());
  double min_order = std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    parts.push_back(evaluate_partial(t, table));
    if (!parts.back().value.is_zero()) min_order = std::min(min_order, parts.back().value.order());
  }
  if (!std::isfinite(min_order)) return {};

  // Terms normally share the same class exponents; any difference is folded
  // into the term itself relative to the first surviving term.
  const PartialEval* ref = nullptr;
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<ContinuedValue> lead;
  for (const auto& p : parts) {
    if (p.value.is_zero() || p.value.order() > min_order + kOrderTolerance) continue;
    if (!ref) ref = &p;
    std::vector<double> diff(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) diff[i] = p.net[i] - ref->net[i];
    lead.push_back(p.value * class_factor(table, diff));
    max_log = std::max(max_log, lead.back().log_mag());
  }

  ContinuedValue sum;
  if (lead.size() == 1) {
    sum = lead.front();
  } else {
    std::complex<double> acc = 0.0, comp = 0.0;
    double abs_total = 0.0;
    for (const auto& v : lead) {
      const double mag = std::exp(v.log_mag() - max_log);
      const std::complex<double> z = std::polar(mag, std::numbers::pi * v.phase());
      // Neumaier-compensated complex accumulation
      const std::complex<double> t = acc + z;
      auto fix = [](double s, double x, double tt) {
        return std::fabs(s) >= std::fabs(x) ? (s - tt) + x : (x - tt) + s;
      };
      comp += std::complex<double>(fix(acc.real(), z.real(), t.real()),
                                   fix(acc.imag(), z.imag(), t.imag()));
      acc = t;
      abs_total += mag;
    }
    acc += comp;
    if (std::abs(acc) == 0.0) return {};
    double ph;
    if (std::fabs(acc.imag()) <= 1e-15 * abs_total)
      ph = acc.real() < 0 ? 1.0 : 0.0;
    else
      ph = std::arg(acc) / std::numbers::pi;
    sum = ContinuedValue::from_parts(ph, std::log(std::abs(acc)) + max_log, min_order);
  }

  std::vector<double> total(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) total[i] = head.net[i] + ref->net[i];
  return head.value * sum * class_factor(table, total);
}

// ---- Racah sums -------------------------------------------------------------

RacahExpansion wigner3j_expansion(double j1, double j2, double j3, double m1, double m2,
                                  double m3) {
  RacahExpansion ex;
  if (std::fabs(m1 + m2 + m3) > kContinuationTolerance) return ex;  // no terms: zero

  ex.prefactor.phase(-(j1 - j2 - m3));
  for (double x : {j1 + m1, j1 - m1, j2 + m2, j2 - m2, j3 + m3, j3 - m3, j1 + j2 - j3,
                   j1 - j2 + j3, -j1 + j2 + j3})
    ex.prefactor.factorial(x, 0.5);
  ex.prefactor.factorial(j1 + j2 + j3 + 1.0, -0.5);

  // t enters as (d − t)! for the three "decreasing" arguments and (u + t)! for
  // the two "increasing" ones; a term's ε-order counts the poles among them.
  const double dec[3] = {j1 + j2 - j3, j1 - m1, j2 + m2};
  const double inc[2] = {j3 - j2 + m1, j3 - j1 - m2};
  int asymptotic = 0;
  long t_end = 0;
  for (double d : dec) {
    if (near_integer(d)) {
      ++asymptotic;
      t_end = std::max(t_end, std::lround(d) + 1);
    }
  }
  if (asymptotic == 0)
    throw Error(ErrorKind::NonTerminating,
                "continued 3j: Racah sum has no terminating argument");
  for (double u : inc)
    if (near_integer(u)) t_end = std::max(t_end, -std::lround(u));

  auto order_at = [&](long t) {
    int o = 0;
    for (double d : dec)
      if (near_integer(d) && std::lround(d) - t < 0) ++o;
    for (double u : inc)
      if (near_integer(u) && std::lround(u) + t < 0) ++o;
    return o;
  };
  int min_order = asymptotic;
  for (long t = 0; t <= t_end; ++t) min_order = std::min(min_order, order_at(t));
  if (min_order >= asymptotic)
    throw Error(ErrorKind::NonTerminating,
                "continued 3j: infinitely many terms contribute at leading order");

  for (long t = 0; t <= t_end; ++t) {
    if (order_at(t) != min_order) continue;
    const double td = static_cast<double>(t);
    GammaLedger term;
    term.phase(td);
    term.factorial(td, -1.0);
    term.factorial(inc[0] + td, -1.0);
    term.factorial(inc[1] + td, -1.0);
    for (double d : dec) term.factorial(d - td, -1.0);
    ex.terms.push_back(std::move(term));
  }
  return ex;
}

RacahExpansion clebsch_expansion(double j1, double m1, double j2, double m2, double j, double m) {
  RacahExpansion ex = wigner3j_expansion(j1, j2, j, m1, m2, -m);
  ex.prefactor.phase(j1 - j2 + m);
  ex.prefactor.real(2.0 * j + 1.0, 0.5);
  return ex;
}

ContinuedValue wigner3j_continued(double j1, double j2, double j3, double m1, double m2,
                                  double m3) {
  return wigner3j_expansion(j1, j2, j3, m1, m2, m3).evaluate();
}

double clebsch_continued(double j1, double m1, double j2, double m2, double j, double m) {
  return clebsch_expansion(j1, m1, j2, m2, j, m).evaluate().to_real();
}

double hyp3f2_via_clebsch(double a, double b, double c, double d, double e) {
  const double j1 = (d - a - b - 1) / 2, m1 = (b + d - a - 1) / 2;
  const double j2 = (e - a - c - 1) / 2, m2 = (a - c - e + 1) / 2;
  const double j = (d + e - b - c) / 2 - 1, m = (b + d - c - e) / 2;

  RacahExpansion ex = clebsch_expansion(j1, m1, j2, m2, j, m);
  GammaLedger& p = ex.prefactor;
  p.gamma(1 - a, 0.5).gamma(1 - b, 0.5).gamma(1 - c, 0.5);
  p.real(d + e - b - c - 1, -0.5);
  p.gamma(d - a, -0.5).gamma(d - b, -0.5).gamma(d - c, -0.5);
  p.gamma(-a - b - c + d + e, 0.5);
  p.gamma(e - a, -0.5).gamma(e - b, -0.5).gamma(e - c, -0.5);
  p.gamma(d).gamma(e);
  return ex.evaluate().to_real();
}

}  // namespace relexp
