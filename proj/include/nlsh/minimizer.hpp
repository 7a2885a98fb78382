#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nlsh/boundstate.hpp"

namespace nlsh::minimizer {

// Uniform grid on [0, length] with `intervals` cells; node x_i = i * spacing.
struct Grid {
  double length = 0.0;
  int intervals = 0;
  double spacing() const { return length / intervals; }
};

// Samples u_0 .. u_n on the grid; u_n is pinned to zero (decay truncation).
struct DiscreteField {
  Grid grid;
  std::vector<double> u;
};

double discrete_mass(const DiscreteField& field);

// 1/2 sum ((u_{i+1}-u_i)/h)^2 h  -  (1/p) trapezoid(|u|^p)  +  (alpha/2) u_0^2.
// The interaction enters only through the boundary energy term; the Robin
// condition u'(0) = alpha u(0) then emerges as the natural condition of the
// discrete minimization.
double discrete_energy(const DiscreteField& field, double p, double alpha);

// Rescale to exact trapezoid mass mu.
void project_mass(DiscreteField& field, double mu);

DiscreteField sample_bound_state(const boundstate::BoundState& state, const Grid& grid);

enum class FlowStatus { Converged, MaxIterations, Divergent };

struct FlowOptions {
  double initial_step_factor = 1e-2;  // initial step = factor * h^2
  double tol = 1e-12;                 // relative energy decrease per window
  long max_iter = 200000;
  double energy_floor = -1e6;         // crossing it flags the run Divergent
  std::uint64_t seed = 0;
  int check_window = 50;
};

struct FlowResult {
  DiscreteField field;
  double energy = 0.0;
  long iterations = 0;
  FlowStatus status = FlowStatus::Converged;
};

// Projected gradient descent on the discrete energy: explicit L2-gradient
// steps with backtracking halving on energy increase, mass rescaling after
// every step. Initialized from the closed-form least-energy profile when one
// exists, otherwise from a positive bump at a seeded random station.
FlowResult normalized_gradient_flow(double p, double alpha, double mu,
                                    const Grid& grid, const FlowOptions& opt = {});

struct ElResidual {
  double omega_estimate = 0.0;  // (||u||_p^p - ||u'||^2 - alpha u_0^2) / ||u||^2
  double interior = 0.0;        // max | -D2 u - |u|^{p-2} u + omega u | over interior nodes
  double boundary = 0.0;        // | (u_1 - u_0)/h - alpha u_0 |
};

ElResidual el_residual(const DiscreteField& field, double p, double alpha);

struct RefinementRow {
  int intervals = 0;
  double energy = 0.0;
};

struct RefinementStudy {
  std::vector<RefinementRow> rows;
  std::vector<double> observed_orders;  // log2 of consecutive energy-difference ratios
  double extrapolated = 0.0;            // Richardson limit assuming second order
};

RefinementStudy refinement_study(double p, double alpha, double mu,
                                 std::span<const Grid> grids,
                                 const FlowOptions& opt = {});

}  // namespace nlsh::minimizer
