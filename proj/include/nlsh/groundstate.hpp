#pragma once

#include <optional>
#include <vector>

#include "nlsh/boundstate.hpp"

namespace nlsh::groundstate {

enum class LevelKind { Finite, Zero, MinusInfinity };

// Ground-state energy level: a finite number, exactly zero, or unbounded
// below. Non-attained finite infima keep their numeric value and are flagged
// through GroundStateReport::attained.
struct EnergyLevel {
  LevelKind kind = LevelKind::Finite;
  double value = 0.0;

  static EnergyLevel finite(double v) { return {LevelKind::Finite, v}; }
  static EnergyLevel zero() { return {LevelKind::Zero, 0.0}; }
  static EnergyLevel minus_infinity() { return {LevelKind::MinusInfinity, 0.0}; }
};

struct GroundStateReport {
  double p = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  bool exists = false;
  bool at_threshold = false;  // mu within the tolerance band of a regime boundary
  bool attained = false;
  std::optional<boundstate::BoundState> minimizer;
  EnergyLevel level;
  std::optional<double> candidate_energy;     // least-energy bound state energy
  std::optional<double> line_soliton_level;   // -theta_p mu^(2 beta + 1), p < 6
  int bound_state_count = 0;
};

// Existence/uniqueness decision over the full parameter space p in (2, 6],
// alpha != 0, mu > 0:
//   p < 6, alpha < 0: a ground state exists at every mass;
//   p <= 4, alpha > 0: exists iff mu strictly exceeds ||phi_{alpha^2}||^2;
//   4 < p < 6, alpha > 0: exists iff mu >= mu_tilde (equality included);
//   p = 6, alpha < 0: exists iff mu < sqrt(3) pi / 4, level -infinity beyond;
//   p = 6, alpha > 0: never exists; level 0 up to sqrt(3) pi / 4, then -infinity.
GroundStateReport decide(double p, double alpha, double mu);

EnergyLevel ground_energy_level(double p, double alpha, double mu);

// K(mu) = F(eta^mu) / mu^(2 beta + 1) on the least-energy branch; a ground
// state exists (subcritical, alpha > 0) iff K <= -theta_p.
double K_diagnostic(double p, double alpha, double mu);

// Discrete energies of the mass-preserving concentration family
// f_nu = sqrt(nu) v_mu(nu x), v_mu the rescaled truncated critical soliton.
// In the unbounded-energy regime the sequence decreases without bound.
// Each member is sampled on a nu-adapted grid so resolution tracks the
// concentration scale.
std::vector<double> critical_scaling_demo(double alpha, double mu,
                                          const std::vector<double>& nu_list,
                                          int samples = 1 << 18);

}  // namespace nlsh::groundstate
