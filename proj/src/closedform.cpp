#include "nlsh/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nlsh/errors.hpp"
#include "nlsh/quadrature.hpp"
#include "nlsh/rootfind.hpp"

namespace nlsh::closedform {

namespace {

void require_subcritical(double p, const char* who) {
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error(std::string(who) + ": p must lie in (2, 6), got " +
                            std::to_string(p));
  }
}

void require_admissible(double p, const char* who) {
  if (!(p > 2.0 && p <= 6.0)) {
    throw std::domain_error(std::string(who) + ": p must lie in (2, 6], got " +
                            std::to_string(p));
  }
}

void require_positive(double v, const char* who, const char* name) {
  if (!(v > 0.0)) {
    throw std::domain_error(std::string(who) + ": " + name + " must be positive");
  }
}

}  // namespace

double critical_mass_line() { return 0.5 * std::sqrt(3.0) * M_PI; }
double critical_mass_halfline() { return 0.25 * std::sqrt(3.0) * M_PI; }

double soliton_value(double p, double omega, double x) {
  require_admissible(p, "soliton_value");
  require_positive(omega, "soliton_value", "omega");
  const double amplitude = std::pow(0.5 * p * omega, 1.0 / (p - 2.0));
  const double z = 0.5 * (p - 2.0) * std::sqrt(omega) * std::abs(x);
  // log sech(z) = log 2 - z - log(1 + e^{-2z})
  const double log_sech = std::log(2.0) - z - std::log1p(std::exp(-2.0 * z));
  return amplitude * std::exp((2.0 / (p - 2.0)) * log_sech);
}

double soliton_derivative(double p, double omega, double x) {
  const double v = soliton_value(p, omega, x);
  const double k = 0.5 * (p - 2.0) * std::sqrt(omega);
  return -std::sqrt(omega) * std::tanh(k * x) * v;
}

double soliton_peak(double p, double omega) {
  require_admissible(p, "soliton_peak");
  require_positive(omega, "soliton_peak", "omega");
  return std::pow(0.5 * p * omega, 1.0 / (p - 2.0));
}

double profile_shape_integral(double p) {
  return profile_shape_integral_from(p, 0.0);
}

double profile_shape_integral_from(double p, double lower) {
  require_admissible(p, "profile_shape_integral_from");
  if (!(lower >= -1.0 && lower <= 1.0)) {
    throw std::domain_error("profile_shape_integral_from: lower must lie in [-1, 1]");
  }
  const double q = (4.0 - p) / (p - 2.0);
  const double one_plus_lower = 1.0 + lower;
  // (1 - s) and (1 + s) built from the endpoint offsets: exact at s -> 1 and,
  // when lower -> -1, accurate at the second singular endpoint as well
  auto integrand = [q, one_plus_lower](double from_lower, double from_one) {
    return std::pow(from_one * (one_plus_lower + from_lower), q);
  };
  return tanh_sinh_distances(integrand, lower, 1.0, {1e-13, 1e-13, 12});
}

double soliton_mass_line(double p, double omega) {
  require_subcritical(p, "soliton_mass_line");
  require_positive(omega, "soliton_mass_line", "omega");
  const double pref = 4.0 * std::pow(0.5 * p, 2.0 / (p - 2.0)) / (p - 2.0);
  const double expo = (6.0 - p) / (2.0 * (p - 2.0));
  return pref * std::pow(omega, expo) * profile_shape_integral(p);
}

double unit_mass_frequency(double p) {
  require_subcritical(p, "unit_mass_frequency");
  auto g = [p](double t) { return soliton_mass_line(p, std::exp(t)) - 1.0; };
  double lo = std::log(1e-12);
  int guard = 0;
  while (g(lo) > 0.0) {
    lo -= 5.0;
    if (++guard > 120 || lo < -640.0) {
      throw ConvergenceError("unit_mass_frequency: omega(1) below representable range");
    }
  }
  double hi = lo + 5.0;
  guard = 0;
  while (g(hi) < 0.0) {
    hi += 5.0;
    if (++guard > 200) {
      throw ConvergenceError("unit_mass_frequency: failed to bracket omega(1)");
    }
  }
  // abs tolerance on log(omega) == rel tolerance on omega
  const double t = find_root(g, lo, hi, {0.0, 1e-14, 200});
  return std::exp(t);
}

UniversalConstants compute_constants(double p) {
  require_subcritical(p, "compute_constants");
  UniversalConstants c;
  c.p = p;
  c.beta = (p - 2.0) / (6.0 - p);
  c.omega_unit_mass = unit_mass_frequency(p);
  c.theta_p = c.omega_unit_mass / (2.0 * (2.0 * c.beta + 1.0));
  c.amplitude_coeff = std::pow(0.5 * p * c.omega_unit_mass, 1.0 / (p - 2.0));
  c.width_coeff = 0.5 * (p - 2.0) * std::sqrt(c.omega_unit_mass);
  return c;
}

double soliton_energy_line(double p, double mu) {
  require_subcritical(p, "soliton_energy_line");
  require_positive(mu, "soliton_energy_line", "mu");
  const UniversalConstants c = compute_constants(p);
  return -c.theta_p * std::pow(mu, 2.0 * c.beta + 1.0);
}

double neumann_halfline_energy(double p, double mu) {
  require_subcritical(p, "neumann_halfline_energy");
  require_positive(mu, "neumann_halfline_energy", "mu");
  const UniversalConstants c = compute_constants(p);
  return -c.theta_p * std::pow(2.0, 2.0 * c.beta) * std::pow(mu, 2.0 * c.beta + 1.0);
}

}  // namespace nlsh::closedform
