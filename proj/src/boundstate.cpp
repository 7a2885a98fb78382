#include "nlsh/boundstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nlsh/closedform.hpp"
#include "nlsh/errors.hpp"

namespace nlsh::boundstate {

namespace {

void require_p_subcritical(double p, const char* who) {
  if (!(p > 2.0 && p < 6.0)) {
    throw std::domain_error(std::string(who) + ": p must lie in (2, 6)");
  }
}

void require_interaction(double p, double alpha, double omega, const char* who) {
  if (!(p > 2.0 && p <= 6.0)) {
    throw std::domain_error(std::string(who) + ": p must lie in (2, 6]");
  }
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw std::domain_error(std::string(who) + ": alpha must be finite and nonzero");
  }
  if (!(omega > 0.0)) {
    throw std::domain_error(std::string(who) + ": omega must be positive");
  }
  if (omega <= alpha * alpha) {
    throw NoBoundStateError(std::string(who) + ": no bound state for omega = " +
                            std::to_string(omega) + " <= alpha^2 = " +
                            std::to_string(alpha * alpha));
  }
}

}  // namespace

double shift_a(double p, double alpha, double omega) {
  require_interaction(p, alpha, omega, "shift_a");
  return 2.0 * std::atanh(alpha / std::sqrt(omega)) / ((p - 2.0) * std::sqrt(omega));
}

BoundState make(double p, double alpha, double omega) {
  return BoundState{p, alpha, omega, shift_a(p, alpha, omega)};
}

double evaluate(const BoundState& state, double x) {
  return closedform::soliton_value(state.p, state.omega, x - state.shift);
}

double evaluate_derivative(const BoundState& state, double x) {
  return closedform::soliton_derivative(state.p, state.omega, x - state.shift);
}

double trace_value_sq(double p, double alpha, double omega) {
  require_interaction(p, alpha, omega, "trace_value_sq");
  return std::pow(0.5 * p * (omega - alpha * alpha), 2.0 / (p - 2.0));
}

double mass(double p, double alpha, double omega) {
  require_p_subcritical(p, "mass");
  require_interaction(p, alpha, omega, "mass");
  const double pref = 2.0 * std::pow(0.5 * p, 2.0 / (p - 2.0)) / (p - 2.0);
  const double expo = (6.0 - p) / (2.0 * (p - 2.0));
  const double lower = -alpha / std::sqrt(omega);
  return pref * std::pow(omega, expo) *
         closedform::profile_shape_integral_from(p, lower);
}

double mass_derivative(double p, double alpha, double omega) {
  require_p_subcritical(p, "mass_derivative");
  require_interaction(p, alpha, omega, "mass_derivative");
  const double m = mass(p, alpha, omega);
  const double trace_pow =
      std::pow(omega - alpha * alpha, (4.0 - p) / (p - 2.0));
  return (0.5 * (6.0 - p) * m -
          std::pow(0.5 * p, 2.0 / (p - 2.0)) * alpha * trace_pow) /
         ((p - 2.0) * omega);
}

double energy(double p, double alpha, double omega) {
  require_p_subcritical(p, "energy");
  require_interaction(p, alpha, omega, "energy");
  const double m = mass(p, alpha, omega);
  return -(6.0 - p) / (2.0 * (p + 2.0)) * omega * m +
         alpha * (p - 2.0) / (2.0 * (p + 2.0)) * trace_value_sq(p, alpha, omega);
}

double energy_derivative_omega(double p, double alpha, double omega) {
  require_p_subcritical(p, "energy_derivative_omega");
  require_interaction(p, alpha, omega, "energy_derivative_omega");
  const double coef = std::pow(0.5 * p, 2.0 / (p - 2.0)) / (2.0 * (p - 2.0));
  const double expo = (6.0 - p) / (2.0 * (p - 2.0));
  const double lower = -alpha / std::sqrt(omega);
  const double shape = closedform::profile_shape_integral_from(p, lower);
  const double trace_pow =
      std::pow(omega - alpha * alpha, (4.0 - p) / (p - 2.0));
  return coef * (-(6.0 - p) / (p - 2.0) * std::pow(omega, expo) * shape +
                 alpha * trace_pow);
}

double mass_critical(double alpha, double omega) {
  require_interaction(6.0, alpha, omega, "mass_critical");
  return 0.5 * std::sqrt(3.0) *
         (0.5 * M_PI + std::asin(alpha / std::sqrt(omega)));
}

double mass_critical_derivative(double alpha, double omega) {
  require_interaction(6.0, alpha, omega, "mass_critical_derivative");
  return -alpha * std::sqrt(3.0) /
         (4.0 * omega * std::sqrt(omega - alpha * alpha));
}

double energy_critical(double alpha, double omega) {
  require_interaction(6.0, alpha, omega, "energy_critical");
  return 0.25 * alpha * std::sqrt(3.0 * (omega - alpha * alpha));
}

double energy_critical_derivative(double alpha, double omega) {
  require_interaction(6.0, alpha, omega, "energy_critical_derivative");
  return 3.0 * alpha / (8.0 * std::sqrt(3.0 * (omega - alpha * alpha)));
}

MassRange mass_critical_range(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw std::domain_error("mass_critical_range: alpha must be finite and nonzero");
  }
  const double at_limit =
      0.5 * std::sqrt(3.0) * (0.5 * M_PI + std::asin(alpha > 0.0 ? 1.0 : -1.0));
  const double at_infinity = 0.5 * std::sqrt(3.0) * (0.5 * M_PI + std::asin(0.0));
  if (alpha < 0.0) return {at_limit, at_infinity};  // (0, sqrt(3) pi / 4)
  return {at_infinity, at_limit};                   // (sqrt(3) pi / 4, sqrt(3) pi / 2)
}

double mass_any(double p, double alpha, double omega) {
  return p == 6.0 ? mass_critical(alpha, omega) : mass(p, alpha, omega);
}

double mass_derivative_any(double p, double alpha, double omega) {
  return p == 6.0 ? mass_critical_derivative(alpha, omega)
                  : mass_derivative(p, alpha, omega);
}

double energy_any(double p, double alpha, double omega) {
  return p == 6.0 ? energy_critical(alpha, omega) : energy(p, alpha, omega);
}

double energy_derivative_any(double p, double alpha, double omega) {
  return p == 6.0 ? energy_critical_derivative(alpha, omega)
                  : energy_derivative_omega(p, alpha, omega);
}

}  // namespace nlsh::boundstate
