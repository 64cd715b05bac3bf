#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "genfrac/error.hpp"
#include "genfrac/special_functions.hpp"

namespace genfrac {

/// Gauss rule on [0, 1] for the weight (1 - u)^exp_right * u^exp_left.
template <typename Scalar>
struct JacobiRule {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int n = 0;
  Scalar exp_right = 0;
  Scalar exp_left = 0;
  Vector nodes;
  Vector weights;
};

using JacobiRuled = JacobiRule<double>;

struct QuadratureEstimate {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  // false when the adaptive driver hit its depth or evaluation cap
  bool converged = true;
};

namespace detail {

template <typename Scalar>
void jacobi_recurrence(int n, Scalar a, Scalar b, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                       Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& offdiag) {
  // Monic Jacobi recurrence on [-1, 1] for (1 - x)^a (1 + x)^b, shifted to [0, 1].
  diag.resize(n);
  offdiag.resize(std::max(n - 1, 0));
  const Scalar ab = a + b;
  for (int k = 0; k < n; ++k) {
    Scalar d;
    if (k == 0) {
      d = (b - a) / (ab + 2);
    } else {
      const Scalar s = 2 * Scalar(k) + ab;
      d = (b - a) * (b + a) / (s * (s + 2));
    }
    diag(k) = (d + 1) / 2;
  }
  for (int k = 1; k < n; ++k) {
    Scalar bk;
    if (k == 1) {
      bk = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      const Scalar kk = Scalar(k);
      const Scalar s = 2 * kk + ab;
      bk = 4 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1) * (s - 1));
    }
    offdiag(k - 1) = std::sqrt(bk) / 2;
  }
}

template <typename F>
inline constexpr bool takes_complement_v = std::is_invocable_r_v<double, F, double, double>;

template <typename F>
double call_with_complement(F& f, double s, double sc) {
  if constexpr (takes_complement_v<F>) {
    return f(s, sc);
  } else {
    return f(s);
  }
}

inline void require_finite(double v, double at) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFiniteIntegrand, "integrand is not finite at " + std::to_string(at));
  }
}

// Gauss-Kronrod 15/7 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KronrodPanel {
  double value;
  double error;
  double abs_value;
};

/// One 15-point Kronrod panel on [lo, hi]; g(x) is evaluated 15 times.
template <typename G>
KronrodPanel kronrod15(G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<double, 15> fv{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[2 * j] = g(center - dx);
    fv[2 * j + 1] = g(center + dx);
    require_finite(fv[2 * j], center - dx);
    require_finite(fv[2 * j + 1], center + dx);
  }
  fv[14] = g(center);
  require_finite(fv[14], center);

  double kron = kKronrodWeights[7] * fv[14];
  double gauss = kGaussWeights[3] * fv[14];
  double abs_k = std::abs(kron);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[2 * j] + fv[2 * j + 1];
    kron += kKronrodWeights[j] * pair;
    abs_k += kKronrodWeights[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kron;
  double asc = kKronrodWeights[7] * std::abs(fv[14] - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }
  double err = std::abs((kron - gauss) * half);
  asc *= std::abs(half);
  // QUADPACK error scaling
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double abs_val = abs_k * std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_val;
  err = std::max(err, roundoff);
  return {kron * half, err, abs_val};
}

}  // namespace detail

/// Golub-Welsch construction of the n-point Gauss rule on [0, 1] for the
/// weight (1 - u)^exp_right * u^exp_left. Nodes come back strictly increasing.
template <typename Scalar = double>
JacobiRule<Scalar> gauss_jacobi_rule(int n, Scalar exp_right, Scalar exp_left) {
  if (n < 1) throw Error(ErrorCode::ArgsOutOfRange, "gauss_jacobi_rule needs n >= 1");
  if (!(exp_right > Scalar(-1)) || !(exp_left > Scalar(-1))) {
    throw Error(ErrorCode::ExponentOutOfRange, "Jacobi weight exponents must exceed -1");
  }
  using Vector = typename JacobiRule<Scalar>::Vector;
  Vector diag, offdiag;
  detail::jacobi_recurrence<Scalar>(n, exp_right, exp_left, diag, offdiag);

  JacobiRule<Scalar> rule;
  rule.n = n;
  rule.exp_right = exp_right;
  rule.exp_left = exp_left;
  const Scalar mu0 = static_cast<Scalar>(beta(static_cast<double>(exp_left) + 1.0, static_cast<double>(exp_right) + 1.0));
  if (n == 1) {
    rule.nodes = diag;
    rule.weights = Vector::Constant(1, mu0);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "tridiagonal eigen-solver did not converge for n=" + std::to_string(n));
  }
  rule.nodes = solver.eigenvalues();
  rule.weights = mu0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

/// Shared, thread-safe cache of double-precision rules keyed by (n, exp_right, exp_left).
std::shared_ptr<const JacobiRuled> cached_jacobi_rule(int n, double exp_right, double exp_left);

/// Sum of w_i g(u_i). Throws NonFiniteIntegrand if g misbehaves at any node.
template <typename Scalar, typename G>
Scalar integrate_weighted(const JacobiRule<Scalar>& rule, G&& g) {
  Scalar total = 0;
  for (int i = 0; i < rule.n; ++i) {
    const Scalar v = g(rule.nodes(i));
    detail::require_finite(static_cast<double>(v), static_cast<double>(rule.nodes(i)));
    total += rule.weights(i) * v;
  }
  return total;
}

/// Globally adaptive Gauss-Kronrod 15/7 quadrature on a finite interval.
/// Intervals deeper than 40 bisections are not split further; in that case
/// (or when the evaluation budget runs out) the best estimate is returned
/// with converged = false.
template <typename F>
QuadratureEstimate integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                                      std::int64_t max_evaluations = 400000) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::ArgsOutOfRange, "integrate_adaptive needs finite lo < hi");
  }
  if (!(rel_tol > 0.0 && rel_tol <= 0.1)) {
    throw Error(ErrorCode::ArgsOutOfRange, "integrate_adaptive needs rel_tol in (0, 0.1]");
  }
  constexpr int kMaxDepth = 40;
  struct Interval {
    double lo, hi, value, error, abs_value;
    int depth;
    bool operator<(const Interval& o) const { return error < o.error; }
  };

  QuadratureEstimate est;
  std::priority_queue<Interval> heap;
  std::vector<Interval> frozen;
  auto first = detail::kronrod15(f, lo, hi);
  est.evaluations = 15;
  heap.push({lo, hi, first.value, first.error, first.abs_value, 0});
  double total = first.value, total_err = first.error, total_abs = first.abs_value;

  auto tolerance = [&] { return std::max(rel_tol * std::abs(total), 1e-15 * total_abs); };
  while (!heap.empty() && total_err > tolerance()) {
    if (est.evaluations + 30 > max_evaluations) {
      est.converged = false;
      break;
    }
    Interval worst = heap.top();
    heap.pop();
    if (worst.depth >= kMaxDepth) {
      frozen.push_back(worst);
      est.converged = false;
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::kronrod15(f, worst.lo, mid);
    auto right = detail::kronrod15(f, mid, worst.hi);
    est.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push({worst.lo, mid, left.value, left.error, left.abs_value, worst.depth + 1});
    heap.push({mid, worst.hi, right.value, right.error, right.abs_value, worst.depth + 1});
  }
  if (!frozen.empty() && total_err > tolerance()) est.converged = false;
  // re-sum to shed the drift of the running updates
  double value = 0.0, error = 0.0;
  for (; !heap.empty(); heap.pop()) {
    value += heap.top().value;
    error += heap.top().error;
  }
  for (const auto& iv : frozen) {
    value += iv.value;
    error += iv.error;
  }
  est.value = value;
  est.abs_error_estimate = error;
  return est;
}

enum class SingularEnd { Lo, Hi };

/// Panels graded algebraically toward an endpoint singularity of the form
/// |t - t_end|^strength. The grading exponent is q = max(2, 3 / (1 + strength)),
/// each panel gets a 15-point Kronrod rule in the uniform grading variable.
///
/// f may take (t) or (t, d) where d >= 0 is the distance from t to the
/// singular end, computed without cancellation.
template <typename F>
QuadratureEstimate graded_mesh_singular(F&& f, double lo, double hi, SingularEnd singular_end, double strength,
                                        int n_panels) {
  if (!(strength > -1.0)) {
    throw Error(ErrorCode::NonIntegrableSingularity, "singularity strength must exceed -1");
  }
  if (n_panels < 2) throw Error(ErrorCode::ArgsOutOfRange, "graded_mesh_singular needs n_panels >= 2");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::ArgsOutOfRange, "graded_mesh_singular needs finite lo < hi");
  }
  const double q = std::max(2.0, 3.0 / (1.0 + strength));
  const double length = hi - lo;
  const double n = static_cast<double>(n_panels);

  auto in_grading_variable = [&](double t) -> double {
    const double d = length * std::pow(t / n, q);
    if (d == 0.0) return 0.0;  // t^(q(1+strength)-1) -> 0 at the singular end
    const double x = singular_end == SingularEnd::Lo ? lo + d : hi - d;
    double v;
    if constexpr (std::is_invocable_r_v<double, F, double, double>) {
      v = f(x, d);
    } else {
      // without the distance, a node that rounds onto the end is treated like d = 0
      if (x == (singular_end == SingularEnd::Lo ? lo : hi)) return 0.0;
      v = f(x);
    }
    return v * q * d / t;
  };

  QuadratureEstimate est;
  for (int j = 0; j < n_panels; ++j) {
    auto panel = detail::kronrod15(in_grading_variable, static_cast<double>(j), static_cast<double>(j + 1));
    est.value += panel.value;
    est.abs_error_estimate += panel.error;
  }
  est.evaluations = 15 * static_cast<std::int64_t>(n_panels);
  return est;
}

/// Settings for integrate_jacobi_composite.
struct CompositeJacobiOptions {
  int points_per_panel = 12;
  int levels = 40;
  double ratio = 0.2;
  bool grade_lo = false;
  bool grade_hi = false;
};

/// Integral of (1 - s)^exp_right s^exp_left h(s) over [0, 1].
///
/// Without grading this is one Gauss-Jacobi rule with points_per_panel
/// nodes. With grading at an end, a geometric mesh with the given ratio and
/// number of levels is laid toward that end; the innermost panel carries the
/// end's Jacobi weight and the remaining panels use Gauss-Legendre. This
/// restores fast convergence when h has a non-analytic factor such as
/// s^(1/3) at the graded end.
///
/// h may take (s) or (s, 1 - s); the complement is formed without cancellation.
template <typename H>
double integrate_jacobi_composite(H&& h, double exp_right, double exp_left, const CompositeJacobiOptions& opt) {
  const int m = opt.points_per_panel;
  if (!opt.grade_lo && !opt.grade_hi) {
    auto rule = cached_jacobi_rule(m, exp_right, exp_left);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      const double s = rule->nodes(i);
      const double v = detail::call_with_complement(h, s, 1.0 - s);
      detail::require_finite(v, s);
      total += rule->weights(i) * v;
    }
    return total;
  }

  auto legendre = cached_jacobi_rule(m, 0.0, 0.0);
  const double split = opt.grade_lo && opt.grade_hi ? 0.5 : (opt.grade_lo ? 1.0 : 0.0);

  // g(s, sc) with sc = 1 - s, times the full weight
  auto weighted = [&](double s, double sc) {
    const double v = detail::call_with_complement(h, s, sc);
    detail::require_finite(v, s);
    return std::pow(sc, exp_right) * std::pow(s, exp_left) * v;
  };

  // One graded side of length `span`, laid out in the distance d from the
  // graded end. lo_side selects whether that end is s = 0 or s = 1.
  auto graded_side = [&](double span, bool lo_side, bool far_is_endpoint) {
    const double exp_near = lo_side ? exp_left : exp_right;
    const double exp_far = lo_side ? exp_right : exp_left;
    auto to_s = [lo_side](double d) { return lo_side ? std::pair{d, 1.0 - d} : std::pair{1.0 - d, d}; };
    auto far_factor = [lo_side](double s, double sc) { return lo_side ? sc : s; };

    double total = 0.0;
    // innermost panel [0, c] with weight d^exp_near
    const double c = span * std::pow(opt.ratio, opt.levels);
    auto inner = cached_jacobi_rule(m, 0.0, exp_near);
    const double scale = std::pow(c, exp_near + 1.0);
    for (int i = 0; i < m; ++i) {
      const auto [s, sc] = to_s(c * inner->nodes(i));
      const double v = detail::call_with_complement(h, s, sc);
      detail::require_finite(v, s);
      total += scale * inner->weights(i) * std::pow(far_factor(s, sc), exp_far) * v;
    }
    for (int k = opt.levels - 1; k >= 1; --k) {
      const double lo_d = span * std::pow(opt.ratio, k + 1);
      const double hi_d = span * std::pow(opt.ratio, k);
      for (int i = 0; i < m; ++i) {
        const auto [s, sc] = to_s(lo_d + (hi_d - lo_d) * legendre->nodes(i));
        total += (hi_d - lo_d) * legendre->weights(i) * weighted(s, sc);
      }
    }
    // outermost panel [ratio * span, span]
    const double lo_d = span * opt.ratio;
    const double width = span - lo_d;
    if (far_is_endpoint) {
      // this panel touches the other endpoint of [0, 1]; carry its weight
      auto outer = cached_jacobi_rule(m, exp_far, 0.0);
      const double outer_scale = std::pow(width, exp_far + 1.0);
      for (int i = 0; i < m; ++i) {
        const double r = outer->nodes(i);
        const double d = lo_d + width * r;
        const double far = width * (1.0 - r);
        const double s = lo_side ? d : far;
        const double sc = lo_side ? far : d;
        const double v = detail::call_with_complement(h, s, sc);
        detail::require_finite(v, s);
        total += outer_scale * outer->weights(i) * std::pow(d, exp_near) * v;
      }
    } else {
      for (int i = 0; i < m; ++i) {
        const auto [s, sc] = to_s(lo_d + width * legendre->nodes(i));
        total += width * legendre->weights(i) * weighted(s, sc);
      }
    }
    return total;
  };

  double total = 0.0;
  if (opt.grade_lo) {
    total += graded_side(split, true, !opt.grade_hi);
  }
  if (opt.grade_hi) {
    total += graded_side(1.0 - split, false, !opt.grade_lo);
  }
  return total;
}

}  // namespace genfrac
