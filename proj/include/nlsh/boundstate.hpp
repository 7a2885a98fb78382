#pragma once

namespace nlsh::boundstate {

// Stationary profile on the half-line with a delta interaction of strength
// alpha at the origin: a soliton translated so that u'(0) = alpha u(0).
// Exists iff omega > alpha^2; the shift carries the sign of alpha.
struct BoundState {
  double p = 0.0;
  double alpha = 0.0;
  double omega = 0.0;
  double shift = 0.0;
};

// shift = 2 atanh(alpha / sqrt(omega)) / ((p - 2) sqrt(omega)).
// Throws NoBoundStateError when omega <= alpha^2.
double shift_a(double p, double alpha, double omega);

BoundState make(double p, double alpha, double omega);

double evaluate(const BoundState& state, double x);
double evaluate_derivative(const BoundState& state, double x);

// |u(0)|^2 = ((p/2) (omega - alpha^2))^(2/(p-2))
double trace_value_sq(double p, double alpha, double omega);

// Subcritical quantities, p in (2, 6). Mass uses endpoint-aware quadrature of
// the shape integral over [-alpha/sqrt(omega), 1]; the omega-derivatives are
// the closed forms obtained by differentiating under the integral sign.
double mass(double p, double alpha, double omega);
double mass_derivative(double p, double alpha, double omega);
double energy(double p, double alpha, double omega);
double energy_derivative_omega(double p, double alpha, double omega);

// Critical quantities, p = 6. The shape integral collapses to an arcsine:
//   M(omega) = (sqrt(3)/2) (pi/2 + arcsin(alpha / sqrt(omega))).
double mass_critical(double alpha, double omega);
double mass_critical_derivative(double alpha, double omega);
double energy_critical(double alpha, double omega);
double energy_critical_derivative(double alpha, double omega);

// Closed-form endpoints of the critical mass map image:
// alpha < 0: (0, sqrt(3) pi / 4); alpha > 0: (sqrt(3) pi / 4, sqrt(3) pi / 2).
struct MassRange {
  double low = 0.0;
  double high = 0.0;
};
MassRange mass_critical_range(double alpha);

// p-generic dispatch over (2, 6]; p == 6 routes to the critical formulas.
double mass_any(double p, double alpha, double omega);
double mass_derivative_any(double p, double alpha, double omega);
double energy_any(double p, double alpha, double omega);
double energy_derivative_any(double p, double alpha, double omega);

}  // namespace nlsh::boundstate
