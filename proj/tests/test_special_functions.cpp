#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genfrac/error.hpp"
#include "support.hpp"
#include "genfrac/quadrature.hpp"
#include "genfrac/special_functions.hpp"

using genfrac::Error;
using genfrac::ErrorCode;
using testing::rel;

TEST_CASE("gamma at reference points") {
  CHECK(genfrac::gamma(1.0) == 1.0);
  CHECK(rel(genfrac::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(rel(genfrac::gamma(1.5), 0.5 * std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(rel(genfrac::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel(genfrac::gamma(171.0), std::tgamma(171.0)) < 1e-13);
}

TEST_CASE("gamma poles") {
  for (double x : {0.0, -1.0, -2.0, -7.0}) {
    CHECK_THROWS_AS(genfrac::gamma(x), Error);
    try {
      genfrac::gamma(x);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleArgument);
    }
  }
}

TEST_CASE("gamma recurrence on 0.1 .. 50") {
  for (int i = 1; i <= 500; ++i) {
    const double x = 0.1 * i;
    CAPTURE(x);
    CHECK(rel(genfrac::gamma(x + 1.0), x * genfrac::gamma(x)) < 1e-12);
  }
}

TEST_CASE("gamma against libm on negative and large arguments") {
  for (double x = -169.75; x < 170.0; x += 0.5) {
    CAPTURE(x);
    CHECK(rel(genfrac::gamma(x), std::tgamma(x)) < 1e-13);
  }
}

TEST_CASE("log_gamma") {
  CHECK(genfrac::log_gamma(1.0) == 0.0);
  CHECK(genfrac::log_gamma(2.0) == 0.0);
  CHECK(rel(genfrac::log_gamma(10.0), std::log(362880.0)) < 1e-15);
  CHECK_THROWS_AS(genfrac::log_gamma(0.0), Error);
  CHECK_THROWS_AS(genfrac::log_gamma(-3.5), Error);
  for (double x = 0.05; x < 170.0; x *= 1.3) {
    CAPTURE(x);
    CHECK(rel(std::exp(genfrac::log_gamma(x)), genfrac::gamma(x)) < 1e-12);
    CHECK(std::abs(genfrac::log_gamma(x) - std::lgamma(x)) <= 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("beta values and symmetry") {
  CHECK(genfrac::beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(genfrac::beta(1.0, 0.5), 2.0) < 1e-14);
  CHECK(rel(genfrac::beta(0.5, 0.5), std::numbers::pi) < 1e-12);
  CHECK(rel(genfrac::beta(300.0, 2.5), std::exp(std::lgamma(300.0) + std::lgamma(2.5) - std::lgamma(302.5))) < 1e-11);
  for (double p : {0.3, 1.7, 4.2, 90.0})
    for (double q : {0.6, 2.0, 85.5}) CHECK(std::abs(genfrac::beta(p, q) - genfrac::beta(q, p)) <= 1e-15 * genfrac::beta(p, q));
  CHECK_THROWS_AS(genfrac::beta(0.0, 1.0), Error);
  CHECK_THROWS_AS(genfrac::beta(1.0, -1.0), Error);
}

TEST_CASE("beta matches numeric integration") {
  for (double p = 0.5; p <= 4.0; p += 0.5) {
    for (double q = 0.5; q <= 4.0; q += 0.5) {
      CAPTURE(p);
      CAPTURE(q);
      // split at 1/2; each piece sees the distance to its singular end
      auto near0 = [&](double u, double d) { return std::pow(d, p - 1.0) * std::pow(1.0 - u, q - 1.0); };
      auto near1 = [&](double u, double d) { return std::pow(u, p - 1.0) * std::pow(d, q - 1.0); };
      const double lo =
          genfrac::graded_mesh_singular(near0, 0.0, 0.5, genfrac::SingularEnd::Lo, std::min(0.0, p - 1.0), 64).value;
      const double hi =
          genfrac::graded_mesh_singular(near1, 0.5, 1.0, genfrac::SingularEnd::Hi, std::min(0.0, q - 1.0), 64).value;
      CHECK(rel(lo + hi, genfrac::beta(p, q)) < 1e-9);
    }
  }
}

TEST_CASE("sin_pi and gamma_ratio") {
  CHECK(genfrac::sin_pi(1.0) == 0.0);
  CHECK(genfrac::sin_pi(0.5) == 1.0);
  CHECK(genfrac::sin_pi(-2.5) == -1.0);
  CHECK(rel(genfrac::gamma_ratio(200.5, 200.0), std::exp(std::lgamma(200.5) - std::lgamma(200.0))) < 1e-12);
  CHECK(rel(genfrac::gamma_ratio(3.0, 5.0), 2.0 / 24.0) < 1e-15);
}
