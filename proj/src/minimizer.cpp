#include "nlsh/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nlsh/closedform.hpp"
#include "nlsh/errors.hpp"
#include "nlsh/thresholds.hpp"

namespace nlsh::minimizer {

namespace {

void require_grid(const Grid& grid, const char* who) {
  if (!(grid.length > 0.0) || grid.intervals < 64) {
    throw std::domain_error(std::string(who) +
                            ": grid needs positive length and at least 64 intervals");
  }
}

double signed_power(double u, double e) {
  return std::copysign(std::pow(std::abs(u), e), u);
}

double trapezoid_weight(int i, int n) { return (i == 0 || i == n) ? 0.5 : 1.0; }

// L2 gradient of the discrete energy (u_n stays pinned).
void flow_gradient(const DiscreteField& field, double p, double alpha,
                   std::vector<double>& grad) {
  const int n = field.grid.intervals;
  const double h = field.grid.spacing();
  const auto& u = field.u;
  grad.resize(n);
  grad[0] = -2.0 * (u[1] - u[0]) / (h * h) + 2.0 * alpha * u[0] / h -
            signed_power(u[0], p - 1.0);
  for (int i = 1; i < n; ++i) {
    grad[i] = -(u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h) -
              signed_power(u[i], p - 1.0);
  }
}

DiscreteField initial_field(double p, double alpha, double mu, const Grid& grid,
                            std::uint64_t seed) {
  DiscreteField field{grid, std::vector<double>(grid.intervals + 1, 0.0)};
  const int n = grid.intervals;
  const double h = grid.spacing();

  int count = 0;
  try {
    count = thresholds::count_bound_states(p, alpha, mu);
  } catch (const std::exception&) {
    count = 0;
  }

  if (count >= 1) {
    const auto state = thresholds::least_energy_bound_state(p, alpha, mu);
    for (int i = 0; i < n; ++i) {
      field.u[i] = boundstate::evaluate(state, i * h);
    }
    return field;
  }

  // No stationary profile at this mass: start from a positive bump at a
  // seeded random station, soliton-shaped where the line frequency is
  // defined and Gaussian in the critical case.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> frac_dist(0.3, 0.6);
  const double center = frac_dist(rng) * grid.length;
  if (p < 6.0) {
    const auto constants = closedform::compute_constants(p);
    const double omega = constants.omega_unit_mass * std::pow(mu, 2.0 * constants.beta);
    for (int i = 0; i < n; ++i) {
      field.u[i] = closedform::soliton_value(p, omega, i * h - center);
    }
  } else {
    const double width = std::max(1.0, grid.length / 10.0);
    for (int i = 0; i < n; ++i) {
      const double z = (i * h - center) / width;
      field.u[i] = std::exp(-z * z);
    }
  }
  return field;
}

}  // namespace

double discrete_mass(const DiscreteField& field) {
  const int n = field.grid.intervals;
  const double h = field.grid.spacing();
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    sum += trapezoid_weight(i, n) * field.u[i] * field.u[i];
  }
  return sum * h;
}

double discrete_energy(const DiscreteField& field, double p, double alpha) {
  const int n = field.grid.intervals;
  const double h = field.grid.spacing();
  const auto& u = field.u;
  double kinetic = 0.0;
  for (int i = 0; i < n; ++i) {
    const double du = (u[i + 1] - u[i]) / h;
    kinetic += du * du;
  }
  kinetic *= 0.5 * h;
  double potential = 0.0;
  for (int i = 0; i <= n; ++i) {
    potential += trapezoid_weight(i, n) * std::pow(std::abs(u[i]), p);
  }
  potential *= h / p;
  return kinetic - potential + 0.5 * alpha * u[0] * u[0];
}

void project_mass(DiscreteField& field, double mu) {
  const double m = discrete_mass(field);
  if (!(m > 0.0)) {
    throw std::domain_error("project_mass: field has nonpositive mass");
  }
  const double scale = std::sqrt(mu / m);
  for (double& v : field.u) v *= scale;
}

DiscreteField sample_bound_state(const boundstate::BoundState& state, const Grid& grid) {
  require_grid(grid, "sample_bound_state");
  DiscreteField field{grid, std::vector<double>(grid.intervals + 1, 0.0)};
  const double h = grid.spacing();
  for (int i = 0; i < grid.intervals; ++i) {
    field.u[i] = boundstate::evaluate(state, i * h);
  }
  return field;
}

FlowResult normalized_gradient_flow(double p, double alpha, double mu,
                                    const Grid& grid, const FlowOptions& opt) {
  if (!(p > 2.0 && p <= 6.0)) {
    throw std::domain_error("normalized_gradient_flow: p must lie in (2, 6]");
  }
  if (!(mu > 0.0)) {
    throw std::domain_error("normalized_gradient_flow: mu must be positive");
  }
  require_grid(grid, "normalized_gradient_flow");

  const int n = grid.intervals;
  const double h = grid.spacing();

  FlowResult result;
  result.field = initial_field(p, alpha, mu, grid, opt.seed);
  project_mass(result.field, mu);
  result.energy = discrete_energy(result.field, p, alpha);
  result.status = FlowStatus::MaxIterations;

  double step = opt.initial_step_factor * h * h;
  const double step_max = 0.45 * h * h;

  std::vector<double> grad;
  DiscreteField trial{grid, std::vector<double>(n + 1, 0.0)};
  double window_energy = result.energy;
  long accepted = 0;

  for (long iter = 0; iter < opt.max_iter; ++iter) {
    flow_gradient(result.field, p, alpha, grad);

    bool moved = false;
    double trial_energy = 0.0;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      for (int i = 0; i < n; ++i) {
        trial.u[i] = result.field.u[i] - step * grad[i];
      }
      trial.u[n] = 0.0;
      project_mass(trial, mu);
      trial_energy = discrete_energy(trial, p, alpha);
      if (trial_energy <= result.energy) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {  // stalled at rounding level
      result.status = FlowStatus::Converged;
      result.iterations = iter;
      return result;
    }

    result.field.u.swap(trial.u);
    result.energy = trial_energy;
    ++accepted;
    step = std::min(step * 1.25, step_max);

    if (result.energy < opt.energy_floor) {
      result.status = FlowStatus::Divergent;
      result.iterations = iter + 1;
      return result;
    }
    if (accepted % opt.check_window == 0) {
      const double drop = window_energy - result.energy;
      if (drop <= opt.tol * std::max(std::abs(result.energy), 1e-12)) {
        result.status = FlowStatus::Converged;
        result.iterations = iter + 1;
        return result;
      }
      window_energy = result.energy;
    }
  }
  result.iterations = opt.max_iter;
  return result;
}

ElResidual el_residual(const DiscreteField& field, double p, double alpha) {
  const int n = field.grid.intervals;
  const double h = field.grid.spacing();
  const auto& u = field.u;

  double mass = 0.0, pnorm = 0.0, kinetic = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = trapezoid_weight(i, n);
    mass += w * u[i] * u[i];
    pnorm += w * std::pow(std::abs(u[i]), p);
  }
  mass *= h;
  pnorm *= h;
  for (int i = 0; i < n; ++i) {
    const double du = (u[i + 1] - u[i]) / h;
    kinetic += du * du;
  }
  kinetic *= h;

  ElResidual res;
  res.omega_estimate = (pnorm - kinetic - alpha * u[0] * u[0]) / mass;
  for (int i = 1; i < n; ++i) {
    const double lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
    const double r = std::abs(-lap - signed_power(u[i], p - 1.0) +
                              res.omega_estimate * u[i]);
    res.interior = std::max(res.interior, r);
  }
  res.boundary = std::abs((u[1] - u[0]) / h - alpha * u[0]);
  return res;
}

RefinementStudy refinement_study(double p, double alpha, double mu,
                                 std::span<const Grid> grids,
                                 const FlowOptions& opt) {
  if (grids.size() < 3) {
    throw std::domain_error("refinement_study: need at least three grids");
  }
  RefinementStudy study;
  for (const Grid& grid : grids) {
    const auto run = normalized_gradient_flow(p, alpha, mu, grid, opt);
    study.rows.push_back({grid.intervals, run.energy});
  }
  for (std::size_t k = 0; k + 2 < study.rows.size(); ++k) {
    const double d1 = study.rows[k].energy - study.rows[k + 1].energy;
    const double d2 = study.rows[k + 1].energy - study.rows[k + 2].energy;
    study.observed_orders.push_back(std::log2(std::abs(d1 / d2)));
  }
  const double last = study.rows.back().energy;
  const double prev = study.rows[study.rows.size() - 2].energy;
  study.extrapolated = last + (last - prev) / 3.0;
  return study;
}

}  // namespace nlsh::minimizer
