#pragma once

#include <algorithm>
#include <cmath>

namespace nlsh {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_level = 12;
};

// Tanh-sinh (double exponential) quadrature on a finite interval.
//
// Nodes cluster doubly exponentially at both endpoints, so integrable
// endpoint singularities such as (1 - s^2)^q with q > -1 converge to near
// machine precision. The distance-based form hands the integrand its exact
// offsets from both endpoints; singular factors like (1 - s) must be built
// from those offsets, because reconstructing them from s alone loses all
// precision within ~1e-16 of the endpoint.
//
// f(from_a, from_b): integrand evaluated at the point x with x - a = from_a
// and b - x = from_b (up to one rounding each; the smaller offset is exact).
template <class F>
double tanh_sinh_distances(F&& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return 0.0;
  if (a > b) return -tanh_sinh_distances(f, b, a, opt);

  const double width = b - a;
  const double half = 0.5 * width;
  constexpr double kPiHalf = 1.57079632679489661923;
  constexpr double kTMax = 6.5;

  // Summed contribution of the node pair at +-t.
  auto node_pair = [&](double t) -> double {
    const double u = kPiHalf * std::sinh(t);
    if (u > 350.0) return 0.0;  // weight underflows
    const double e2u = std::exp(2.0 * u);
    const double one_minus_tanh = 2.0 / (1.0 + e2u);
    const double one_plus_tanh = 2.0 * e2u / (1.0 + e2u);
    const double w = half * kPiHalf * std::cosh(t) * one_minus_tanh * one_plus_tanh;
    if (w == 0.0 || !std::isfinite(w)) return 0.0;
    const double offset = half * one_minus_tanh;  // distance to the near endpoint
    if (offset <= 0.0 || offset >= width) return 0.0;
    return w * (f(width - offset, offset) + f(offset, width - offset));
  };

  double h = 1.0;
  double integral = h * half * kPiHalf * f(half, half);
  for (double t = h; t <= kTMax; t += h) integral += h * node_pair(t);

  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    double odd = 0.0;
    for (double t = h; t <= kTMax; t += 2.0 * h) odd += node_pair(t);
    const double refined = 0.5 * integral + h * odd;
    const double change = std::abs(refined - integral);
    integral = refined;
    if (level >= 3 &&
        change <= std::max(opt.abs_tol, opt.rel_tol * std::abs(integral))) {
      break;
    }
  }
  return integral;
}

// Plain point-evaluated form for integrands without endpoint singularities.
template <class F>
double tanh_sinh(F&& f, double a, double b, QuadratureOptions opt = {}) {
  auto from_distances = [&](double from_a, double from_b) {
    const double x = from_a <= from_b ? a + from_a : b - from_b;
    return f(x);
  };
  if (a > b) return -tanh_sinh(f, b, a, opt);
  return tanh_sinh_distances(from_distances, a, b, opt);
}

}  // namespace nlsh
