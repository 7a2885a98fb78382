#pragma once

#include <functional>

namespace nlsh {

struct RootOptions {
  double x_tol_rel = 1e-14;
  double x_tol_abs = 0.0;
  int max_iter = 200;
};

// Brent-style bracketed root finding: inverse quadratic / secant steps with a
// bisection fallback. f(lo) and f(hi) must have opposite signs (or one of
// them must vanish); throws ConvergenceError otherwise.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opt = {});

// Expand hi geometrically (hi *= factor) until f changes sign on [lo, hi].
// Returns the expanded hi; throws ConvergenceError after max_steps.
double grow_upper(const std::function<double(double)>& f, double lo, double hi0,
                  double factor, int max_steps);

}  // namespace nlsh
