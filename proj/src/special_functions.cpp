#include "genfrac/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "genfrac/error.hpp"

namespace genfrac {
namespace {

// Godfrey's coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

// Lanczos series A_g(z) for z = x - 1.
double lanczos_sum(double z) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return sum;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double factorial_product(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

double gamma_positive(double x) {
  if (x == std::floor(x) && x <= 171.0) return factorial_product(static_cast<int>(x) - 1);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // t^(z+0.5) split in two halves so that it does not overflow before exp(-t).
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return kSqrtTwoPi * half * std::exp(-t) * half * lanczos_sum(z);
}

}  // namespace

double sin_pi(double x) {
  // x - 2 * round(x / 2) is exact in binary floating point.
  double r = x - 2.0 * std::round(0.5 * x);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw Error(ErrorCode::PoleArgument, "gamma has a pole at " + format_number(x));
  if (x >= 0.5) return gamma_positive(x);
  return std::numbers::pi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveArgument, "log_gamma requires x > 0");
  if (x == std::floor(x) && x <= 171.0) return std::log(factorial_product(static_cast<int>(x) - 1));
  if (x < 0.5) return std::log(gamma(x));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double gamma_ratio(double num, double den) {
  if (!(num > 0.0) || !(den > 0.0)) throw Error(ErrorCode::NonPositiveArgument, "gamma_ratio requires positive arguments");
  if (num < 170.0 && den < 170.0) return gamma(num) / gamma(den);
  return std::exp(log_gamma(num) - log_gamma(den));
}

double beta(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw Error(ErrorCode::NonPositiveArgument, "beta requires p > 0 and q > 0");
  if (p + q < 170.0) return gamma(p) * gamma(q) / gamma(p + q);
  return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

}  // namespace genfrac
