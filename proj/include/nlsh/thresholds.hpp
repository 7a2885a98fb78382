#pragma once

#include <optional>

#include "nlsh/boundstate.hpp"

namespace nlsh::thresholds {

// Mass values within this relative band of a threshold are classified
// "at-threshold" instead of being resolved by raw floating-point comparison.
inline constexpr double kRelBand = 1e-9;
double band(double x);

enum class BranchSelector { Lower, Upper, Unique };

// ||phi_{alpha^2}||^2_{L2(R)}: the mass-map limit as omega -> alpha^2 for
// repulsive interactions, and the bound/ground state onset mass for p <= 4.
double soliton_mass_at_alpha_sq(double p, double alpha);

// Interior minimum of the mass map, 4 < p < 6 and alpha > 0 only. Located by
// bracketed root-finding on M'(omega); M' -> -infinity at alpha^2+ and is
// eventually positive, so the bracket always exists.
double omega_star(double p, double alpha);
double mu_star(double p, double alpha);

// Invert M(., alpha) = mu on the selected monotone branch, p in (2, 6].
// Throws OutOfRangeError when mu is outside the branch image and
// BranchInvalidError when the selector does not match the regime.
double invert_mass(double p, double alpha, double mu, BranchSelector branch);

// Number of positive stationary profiles of mass mu (0, 1 or 2).
int count_bound_states(double p, double alpha, double mu);

// In the two-branch regime the higher-frequency profile has lower energy;
// elsewhere the profile is unique.
boundstate::BoundState least_energy_bound_state(double p, double alpha, double mu);

// gamma_p = (2/p)^(2/(6-p)) * ((p-2) / (4 I0))^((p-2)/(6-p)),
// I0 the shape integral: the coefficient of the interaction-strength
// threshold alpha = gamma_p mu^((p-2)/(6-p)) for p <= 4.
double gamma_p(double p);

// Ground-state onset mass for 4 < p < 6, alpha > 0: the unique mu in
// (mu_star, ||phi_{alpha^2}||^2) where the bound-state energy per mu^(2b+1)
// crosses the line-soliton coefficient -theta_p. Bracketed root on the upper
// branch.
double mu_tilde(double p, double alpha);

// Largest interaction strength at which a ground state of mass mu exists:
// p <= 4: gamma_p mu^((p-2)/(6-p)) (existence strict below it);
// p  > 4: the inverse of the increasing map alpha -> mu_tilde(alpha)
//         (existence non-strict at it).
double alpha_threshold(double p, double mu);

// omega(mu) / (2^(2 beta + 1) theta_p (2 beta + 1) mu^(2 beta)); tends to 1
// for large mu on the unique/upper branch.
double omega_asymptotics_ratio(double p, double alpha, double mu);

struct ThresholdReport {
  double p = 0.0;
  double alpha = 0.0;
  std::optional<double> omega_star;
  std::optional<double> mu_star;
  std::optional<double> mu_tilde;
  double soliton_mass_at_alpha_sq = 0.0;
  double gamma_p = 0.0;
};

// p in (2, 6); omega_star/mu_star/mu_tilde populated only for p > 4, alpha > 0.
ThresholdReport compute_report(double p, double alpha);

}  // namespace nlsh::thresholds
