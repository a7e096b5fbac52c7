#include <doctest.h>

#include <cmath>

#include "relexp/error.hpp"
#include "relexp/nonrel.hpp"

using namespace relexp;
using doctest::Approx;

TEST_SUITE("nonrel") {

TEST_CASE("parameter canonicalisation") {
  const VKParams p = make_vk_params(4, 1, 3, 2);
  CHECK(p.ell == 3);
  CHECK(p.ell_prime == 1);
  CHECK(p.delta == 2);
}

TEST_CASE("vk_factor") {
  const RegularizedValue a = vk_factor(make_vk_params(1, 0, 0, 0));
  CHECK(a.coefficient == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a.eps_order == Approx(0.5));
  // ℓ=ℓ'=2, k=1: √(2!·2!·7!/(2!²·2!)) = √2520
  const RegularizedValue b = vk_factor(make_vk_params(3, 2, 2, 1));
  CHECK(b.eps_order == 0.0);
  CHECK(b.coefficient == Approx(std::sqrt(2.0 * 2.0 * 5040.0 / (4.0 * 2.0))).epsilon(1e-14));
  const RegularizedValue c = vk_factor(make_vk_params(4, 3, 0, 2));
  CHECK(c.eps_order == 0.0);
  CHECK(c.coefficient == Approx(std::sqrt(720.0 * 5040.0 / 36.0)).epsilon(1e-14));
}

TEST_CASE("domain and convergence errors") {
  try {
    vk_matrix_element(make_vk_params(4, 3, 0, 1), 1.0);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  try {
    vk_matrix_element(make_vk_params(2, 0, 0, -3), 1.0);
    FAIL("expected ConvergenceViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceViolation);
  }
}

TEST_CASE("known hydrogen values") {
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l) CHECK(vk_matrix_element(make_vk_params(n, l, l, 0), 1.0).value == Approx(1.0).epsilon(1e-13));
  CHECK(vk_matrix_element(make_vk_params(1, 0, 0, 1), 1.0).value == Approx(1.5).epsilon(1e-14));
  CHECK(vk_matrix_element(make_vk_params(2, 1, 1, 1), 1.0).value == Approx(5.0).epsilon(1e-14));
  CHECK(vk_matrix_element(make_vk_params(1, 0, 0, -1), 1.0).value == Approx(1.0).epsilon(1e-14));
  CHECK(schrodinger_expectation(2, 1, 0, 1, 1.0) == Approx(-5.19615242270663188058).epsilon(1e-14));
  CHECK(schrodinger_expectation(3, 2, 1, 2, 1.0) == Approx(-140.872282582486750874).epsilon(1e-13));
  CHECK(schrodinger_expectation(1, 0, 0, -1, 1.0) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetry and charge scaling") {
  for (int k = 1; k <= 5; ++k) {
    const double a = vk_matrix_element(make_vk_params(4, 3, 1, k), 1.0).value;
    const double b = vk_matrix_element(make_vk_params(4, 1, 3, k), 1.0).value;
    CHECK(a == b);
    const double z = vk_matrix_element(make_vk_params(4, 3, 1, k), 3.0).value;
    CHECK(z == Approx(a * std::pow(3.0, -k)).epsilon(1e-13));
  }
}

TEST_CASE("matches the Schroedinger integral on the full grid") {
  long cases = 0;
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp <= l; ++lp)
        for (int k = -2; k <= 6; ++k) {
          if (k + l + lp <= -3 || l - lp > k + 1) continue;
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(lp);
          CAPTURE(k);
          const double ref = schrodinger_expectation(n, l, lp, k, 1.0);
          const double v = vk_matrix_element(make_vk_params(n, l, lp, k), 1.0).value;
          CHECK(std::fabs(v - ref) <= 1e-9 * std::max(1.0, std::fabs(ref)));
          ++cases;
        }
  CHECK(cases > 100);
}

}  // TEST_SUITE
