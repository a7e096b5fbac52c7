#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "relexp/dirac.hpp"

namespace relexp {

enum class Method { Hyp3F2, ClebschGordan, Alternative, ClosedForm, Oracle, Pochhammer };

inline constexpr Method kAllMethods[] = {Method::Hyp3F2,     Method::ClebschGordan,
                                         Method::Alternative, Method::ClosedForm,
                                         Method::Oracle,     Method::Pochhammer};

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

// Largest |k| accepted. The formulas themselves have no upper bound; series
// length and cancellation grow with k.
inline constexpr int kMaxPower = 12;

struct MomentRequest {
  DiracOrbital orbital;
  int k = 0;
};

struct MomentResult {
  double value;
  Method method;
  MomentRequest request;
};

/// Three terminating ₃F₂ at unit argument.
MomentResult expval_hyp3f2(const MomentRequest& req);

/// Sign convention for the prefactor of the third term of the 3j route.
enum class ThirdTermPhase {
  TwoGamma,   // (−1)^{1+k+n_r+2γ}; the only variant that yields a real result
  AsPrinted,  // (−1)^{1+k+n_r+2}; kept so the choice stays testable
};

/// Three analytically continued 3j symbols with Gamma prefactors.
MomentResult expval_cg(const MomentRequest& req, ThirdTermPhase phase = ThirdTermPhase::TwoGamma);

/// Form using ₃F₂ at powers k and k + 1.
MomentResult expval_alt(const MomentRequest& req);

/// Closed forms for k ∈ {−3, −2, −1, 1, 2}.
MomentResult expval_closed(const MomentRequest& req);

/// n_r = 0 only: (2γ+1)_k / ζ^k.
MomentResult expval_nr0(const MomentRequest& req);

/// Term-by-term Gamma integration of the exact density polynomial.
MomentResult expval_oracle(const MomentRequest& req);

MomentResult expval(const MomentRequest& req, Method method);

/// Both written forms of a closed-form row; rows with a single form repeat it.
struct ClosedFormPair {
  double first;
  double second;
};
ClosedFormPair closed_form_pair(const MomentRequest& req);

/// The k = 2 first form exactly as printed (with its factor-2 slip); tests only.
double closed_form_k2_printed(const MomentRequest& req);

/// max_{i,j} |v_i − v_j| / |v_j|
double max_relative_deviation(std::span<const double> values);

}  // namespace relexp
