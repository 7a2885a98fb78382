#pragma once

#include <cmath>

namespace nlsh::closedform {

// Sharp Gagliardo-Nirenberg constants. On the half-line the sextic constant
// is four times the line value; the sup-norm constants are 1 and 2.
inline constexpr double kSharpK6Line = 4.0 / (M_PI * M_PI);
inline constexpr double kSharpK6HalfLine = 16.0 / (M_PI * M_PI);
inline constexpr double kSharpKInfLine = 1.0;
inline constexpr double kSharpKInfHalfLine = 2.0;

// Mass of the sextic (p = 6) soliton, independent of frequency: sqrt(3)*pi/2
// on the whole line, half of that for the even restriction to the half-line.
double critical_mass_line();
double critical_mass_halfline();

// Constants of the one-parameter soliton family at a given power p:
//   mass-energy law   E(mu) = -theta_p * mu^(2*beta + 1),  beta = (p-2)/(6-p)
//   profile           phi_mu(x) = C * mu^(2/(6-p)) * sech^(2/(p-2))(c * mu^beta * x)
struct UniversalConstants {
  double p = 0.0;
  double beta = 0.0;
  double theta_p = 0.0;
  double omega_unit_mass = 0.0;  // frequency of the unit-mass soliton
  double amplitude_coeff = 0.0;  // C above
  double width_coeff = 0.0;      // c above
  double k6_halfline = kSharpK6HalfLine;
  double kinf_line = kSharpKInfLine;
  double kinf_halfline = kSharpKInfHalfLine;
};

// Soliton profile on the line at frequency omega > 0, p in (2, 6]:
//   phi(x) = [ (p/2) omega sech^2( ((p-2)/2) sqrt(omega) x ) ]^(1/(p-2)).
// Evaluated through log-sech arithmetic so large |x| underflows gracefully.
double soliton_value(double p, double omega, double x);
double soliton_derivative(double p, double omega, double x);
double soliton_peak(double p, double omega);

// L2(R) mass of the soliton, p in (2, 6): strictly increasing and unbounded
// in omega. p = 6 is rejected (the critical mass is omega-independent).
double soliton_mass_line(double p, double omega);

// omega(1): the unique frequency whose soliton has unit mass. Bracketed
// root-finding on the monotone mass map, performed in log(omega).
double unit_mass_frequency(double p);

UniversalConstants compute_constants(double p);

double soliton_energy_line(double p, double mu);      // -theta_p mu^(2 beta + 1)
double neumann_halfline_energy(double p, double mu);  // -theta_p 2^(2 beta) mu^(2 beta + 1)

// shape integral over [lower, 1] of (1 - s^2)^((4-p)/(p-2)); lower in [-1, 1].
double profile_shape_integral(double p);
double profile_shape_integral_from(double p, double lower);

}  // namespace nlsh::closedform
