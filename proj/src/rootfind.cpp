#include "nlsh/rootfind.hpp"

#include <cmath>
#include <limits>

#include "nlsh/errors.hpp"

namespace nlsh {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opt) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw ConvergenceError("find_root: non-finite function value at bracket endpoint");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw ConvergenceError("find_root: no sign change on bracket");
  }

  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a, fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b, b = c, c = a;
      fa = fb, fb = fc, fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) +
                        0.5 * (opt.x_tol_rel * std::abs(b) + opt.x_tol_abs);
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b, fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += std::copysign(tol1, xm);
    }
    fb = f(b);
  }
  return b;
}

double grow_upper(const std::function<double(double)>& f, double lo, double hi0,
                  double factor, int max_steps) {
  const double flo = f(lo);
  if (!std::isfinite(flo)) {
    throw ConvergenceError("grow_upper: non-finite value at lower endpoint");
  }
  double hi = hi0;
  for (int k = 0; k < max_steps; ++k) {
    const double fhi = f(hi);
    if (std::isfinite(fhi) && (flo == 0.0 || fhi == 0.0 || (flo > 0.0) != (fhi > 0.0))) {
      return hi;
    }
    hi *= factor;
  }
  throw ConvergenceError("grow_upper: no sign change within expansion limit");
}

}  // namespace nlsh
