#include "nlsh/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nlsh/closedform.hpp"
#include "nlsh/errors.hpp"
#include "nlsh/rootfind.hpp"

namespace nlsh::thresholds {

namespace {

void require_alpha(double alpha, const char* who) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw std::domain_error(std::string(who) + ": alpha must be finite and nonzero");
  }
}

void require_two_branch_regime(double p, double alpha, const char* who) {
  if (!(p > 4.0 && p < 6.0)) {
    throw std::domain_error(std::string(who) + ": requires 4 < p < 6");
  }
  if (!(alpha > 0.0)) {
    throw std::domain_error(std::string(who) + ": requires alpha > 0");
  }
}

double invert_monotone_increasing(double p, double alpha, double mu, double lo) {
  auto g = [p, alpha, mu](double w) {
    return boundstate::mass_any(p, alpha, w) - mu;
  };
  const double hi = grow_upper(g, lo, 2.0 * lo + 1.0, 2.0, 200);
  return find_root(g, lo, hi, {1e-14, 0.0, 200});
}

}  // namespace

double band(double x) { return kRelBand * std::max(1.0, std::abs(x)); }

double soliton_mass_at_alpha_sq(double p, double alpha) {
  require_alpha(alpha, "soliton_mass_at_alpha_sq");
  return closedform::soliton_mass_line(p, alpha * alpha);
}

double omega_star(double p, double alpha) {
  require_two_branch_regime(p, alpha, "omega_star");
  const double a2 = alpha * alpha;
  auto dmass = [p, alpha](double w) {
    return boundstate::mass_derivative(p, alpha, w);
  };
  // The width of the negative-slope region shrinks like C^{-(p-2)/(p-4)} as
  // p -> 4+, so the seed offset has to adapt; below a few ulp of alpha^2 the
  // interior minimum is not representable in double precision.
  double lo = 0.0;
  bool seeded = false;
  for (double offset = 1e-6; offset > 1e-15; offset *= 0.1) {
    lo = a2 * (1.0 + offset);
    if (dmass(lo) < 0.0) {
      seeded = true;
      break;
    }
  }
  if (!seeded) {
    throw ConvergenceError(
        "omega_star: interior mass minimum unresolvable at working precision");
  }
  const double hi = grow_upper(dmass, lo, 2.0 * a2, 2.0, 80);
  return find_root(dmass, lo, hi, {1e-14, 0.0, 200});
}

double mu_star(double p, double alpha) {
  return boundstate::mass(p, alpha, omega_star(p, alpha));
}

double invert_mass(double p, double alpha, double mu, BranchSelector branch) {
  require_alpha(alpha, "invert_mass");
  if (!(p > 2.0 && p <= 6.0)) {
    throw std::domain_error("invert_mass: p must lie in (2, 6]");
  }
  if (!(mu > 0.0)) {
    throw std::domain_error("invert_mass: mu must be positive");
  }
  const double a2 = alpha * alpha;

  if (p == 6.0) {
    if (branch != BranchSelector::Unique) {
      throw BranchInvalidError("invert_mass: critical mass map is monotone, use Unique");
    }
    const auto range = boundstate::mass_critical_range(alpha);
    if (mu <= range.low + band(range.low) || mu >= range.high - band(range.high)) {
      throw OutOfRangeError("invert_mass: mu outside the critical mass range");
    }
    // arcsin(alpha/sqrt(omega)) = 2 mu / sqrt(3) - pi/2
    const double c = std::cos(2.0 * mu / std::sqrt(3.0));
    return a2 / (c * c);
  }

  const bool two_branch = (p > 4.0 && alpha > 0.0);
  if (branch == BranchSelector::Unique && two_branch) {
    throw BranchInvalidError("invert_mass: two-branch regime requires Lower or Upper");
  }
  if (branch != BranchSelector::Unique && !two_branch) {
    throw BranchInvalidError("invert_mass: monotone regime requires Unique");
  }

  if (!two_branch) {
    if (alpha > 0.0) {
      const double mb = soliton_mass_at_alpha_sq(p, alpha);
      if (mu <= mb + band(mb)) {
        throw OutOfRangeError("invert_mass: mu at or below the mass-map infimum");
      }
    }
    return invert_monotone_increasing(p, alpha, mu, a2 * (1.0 + 1e-13));
  }

  const double ws = omega_star(p, alpha);
  const double ms = boundstate::mass(p, alpha, ws);
  if (mu < ms - band(ms)) {
    throw OutOfRangeError("invert_mass: mu below the bound-state onset mass");
  }
  if (std::abs(mu - ms) <= band(ms)) return ws;  // branches meet here

  if (branch == BranchSelector::Upper) {
    auto g = [p, alpha, mu](double w) { return boundstate::mass(p, alpha, w) - mu; };
    const double hi = grow_upper(g, ws, 2.0 * ws, 2.0, 200);
    return find_root(g, ws, hi, {1e-14, 0.0, 200});
  }

  const double mb = soliton_mass_at_alpha_sq(p, alpha);
  if (mu >= mb - band(mb)) {
    throw OutOfRangeError("invert_mass: mu at or above the lower-branch supremum");
  }
  auto g = [p, alpha, mu](double w) { return boundstate::mass(p, alpha, w) - mu; };
  const double lo = a2 * (1.0 + 1e-14);
  if (!(g(lo) > 0.0)) {
    // mu indistinguishable from the open endpoint at working precision
    throw OutOfRangeError("invert_mass: mu too close to the lower-branch supremum");
  }
  return find_root(g, lo, ws, {1e-14, 0.0, 200});
}

int count_bound_states(double p, double alpha, double mu) {
  require_alpha(alpha, "count_bound_states");
  if (!(p > 2.0 && p <= 6.0)) {
    throw std::domain_error("count_bound_states: p must lie in (2, 6]");
  }
  if (!(mu > 0.0)) {
    throw std::domain_error("count_bound_states: mu must be positive");
  }

  if (p == 6.0) {
    const double c4 = closedform::critical_mass_halfline();
    const double c2 = closedform::critical_mass_line();
    if (alpha < 0.0) return mu < c4 - band(c4) ? 1 : 0;
    return (mu > c4 + band(c4) && mu < c2 - band(c2)) ? 1 : 0;
  }

  if (alpha < 0.0) return 1;

  const double mb = soliton_mass_at_alpha_sq(p, alpha);
  if (p <= 4.0) return mu > mb + band(mb) ? 1 : 0;

  double ms;
  try {
    ms = mu_star(p, alpha);
  } catch (const ConvergenceError&) {
    // p barely above 4: the dip below mb is too shallow to resolve, and the
    // numeric mass map is monotone; count accordingly
    return mu > mb + band(mb) ? 1 : 0;
  }
  if (mu < ms - band(ms)) return 0;
  if (mu <= ms + band(ms)) return 1;  // tangent mass
  return mu < mb - band(mb) ? 2 : 1;
}

boundstate::BoundState least_energy_bound_state(double p, double alpha, double mu) {
  const int count = count_bound_states(p, alpha, mu);
  if (count == 0) {
    throw NoBoundStateError("least_energy_bound_state: no bound state at this mass");
  }
  double omega;
  if (p == 6.0 || alpha < 0.0 || p <= 4.0) {
    omega = invert_mass(p, alpha, mu, BranchSelector::Unique);
  } else {
    try {
      const double ws = omega_star(p, alpha);
      const double ms = boundstate::mass(p, alpha, ws);
      omega = std::abs(mu - ms) <= band(ms)
                  ? ws
                  : invert_mass(p, alpha, mu, BranchSelector::Upper);
    } catch (const ConvergenceError&) {
      // numerically monotone map (p barely above 4): single candidate
      omega = invert_monotone_increasing(p, alpha, mu, alpha * alpha * (1.0 + 1e-13));
    }
  }
  return boundstate::make(p, alpha, omega);
}

double gamma_p(double p) {
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error("gamma_p: p must lie in (2, 6)");
  }
  const double i0 = closedform::profile_shape_integral(p);
  return std::pow(2.0 / p, 2.0 / (6.0 - p)) *
         std::pow((p - 2.0) / (4.0 * i0), (p - 2.0) / (6.0 - p));
}

double mu_tilde(double p, double alpha) {
  require_two_branch_regime(p, alpha, "mu_tilde");
  const double ws = omega_star(p, alpha);
  const double ms = boundstate::mass(p, alpha, ws);
  const double mb = soliton_mass_at_alpha_sq(p, alpha);
  const auto constants = closedform::compute_constants(p);
  const double power = 2.0 * constants.beta + 1.0;

  auto k_excess = [&](double m) {
    const double w = invert_mass(p, alpha, m, BranchSelector::Upper);
    return boundstate::energy(p, alpha, w) / std::pow(m, power) + constants.theta_p;
  };

  const double lo = ms + 10.0 * band(ms);
  const double hi = mb - 10.0 * band(mb);
  if (!(k_excess(lo) > 0.0 && k_excess(hi) < 0.0)) {
    throw ConvergenceError("mu_tilde: bracket signs violated on (mu_star, mass at alpha^2)");
  }
  const double mt = find_root(k_excess, lo, hi, {1e-13, 0.0, 200});

  // the root must sit on the rising part of the mass map
  const double wt = invert_mass(p, alpha, mt, BranchSelector::Upper);
  const double rhs = std::pow(0.5 * p, 2.0 / (p - 2.0)) * alpha *
                     std::pow(wt - alpha * alpha, (4.0 - p) / (p - 2.0));
  if (!(0.5 * (6.0 - p) * mt > rhs)) {
    throw ConvergenceError("mu_tilde: root violates the upper-branch constraint");
  }
  return mt;
}

double alpha_threshold(double p, double mu) {
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error("alpha_threshold: p must lie in (2, 6)");
  }
  if (!(mu > 0.0)) {
    throw std::domain_error("alpha_threshold: mu must be positive");
  }
  const double expo = (p - 2.0) / (6.0 - p);
  const double gamma_level = gamma_p(p) * std::pow(mu, expo);
  if (p <= 4.0) return gamma_level;

  auto g = [p, mu](double a) { return mu_tilde(p, a) - mu; };
  double lo = gamma_level;
  int guard = 0;
  while (!(g(lo) < 0.0)) {
    // gamma_level lies strictly below the threshold; back off if rounding bites
    lo *= 0.9;
    if (++guard > 40) {
      throw ConvergenceError("alpha_threshold: failed to seed lower bracket");
    }
  }
  const double hi = grow_upper(g, lo, 2.0 * lo, 2.0, 60);
  return find_root(g, lo, hi, {1e-12, 0.0, 200});
}

double omega_asymptotics_ratio(double p, double alpha, double mu) {
  require_alpha(alpha, "omega_asymptotics_ratio");
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error("omega_asymptotics_ratio: p must lie in (2, 6)");
  }
  const BranchSelector branch = (p > 4.0 && alpha > 0.0) ? BranchSelector::Upper
                                                         : BranchSelector::Unique;
  const double w = invert_mass(p, alpha, mu, branch);
  const auto constants = closedform::compute_constants(p);
  const double predicted = std::pow(2.0, 2.0 * constants.beta + 1.0) *
                           constants.theta_p * (2.0 * constants.beta + 1.0) *
                           std::pow(mu, 2.0 * constants.beta);
  return w / predicted;
}

ThresholdReport compute_report(double p, double alpha) {
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error("compute_report: p must lie in (2, 6)");
  }
  require_alpha(alpha, "compute_report");
  ThresholdReport report;
  report.p = p;
  report.alpha = alpha;
  report.soliton_mass_at_alpha_sq = soliton_mass_at_alpha_sq(p, alpha);
  report.gamma_p = gamma_p(p);
  if (p > 4.0 && alpha > 0.0) {
    report.omega_star = omega_star(p, alpha);
    report.mu_star = boundstate::mass(p, alpha, *report.omega_star);
    report.mu_tilde = mu_tilde(p, alpha);
  }
  return report;
}

}  // namespace nlsh::thresholds
