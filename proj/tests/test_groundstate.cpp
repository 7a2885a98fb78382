#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlsh/boundstate.hpp"
#include "nlsh/closedform.hpp"
#include "nlsh/errors.hpp"
#include "nlsh/groundstate.hpp"
#include "nlsh/thresholds.hpp"
#include "test_support.hpp"

using namespace nlsh;
using groundstate::LevelKind;
using test_support::rel_err;

TEST_CASE("attractive subcritical: a unique minimizer at every mass") {
  const auto report = groundstate::decide(3.0, -1.0, 1.0);
  CHECK(report.exists);
  CHECK(report.attained);
  CHECK(report.bound_state_count == 1);
  REQUIRE(report.minimizer.has_value());
  CHECK(rel_err(boundstate::mass(3.0, -1.0, report.minimizer->omega), 1.0) < 1e-8);
  CHECK(report.level.kind == LevelKind::Finite);
  CHECK(report.level.value < 0.0);

  // strict improvement over the interaction-free half-line level
  for (double p : {2.5, 3.0, 4.0, 5.0}) {
    for (double mu : {0.4, 1.0, 3.0}) {
      const auto r = groundstate::decide(p, -1.0, mu);
      CHECK(r.exists);
      CHECK(r.level.value < closedform::neumann_halfline_energy(p, mu));
    }
  }
}

TEST_CASE("repulsive sub-quartic: strict mass threshold") {
  const double mb = thresholds::soliton_mass_at_alpha_sq(3.0, 1.0);
  CHECK(!groundstate::decide(3.0, 1.0, 0.5 * mb).exists);
  const auto at = groundstate::decide(3.0, 1.0, mb);
  CHECK(!at.exists);
  CHECK(at.at_threshold);
  CHECK(groundstate::decide(3.0, 1.0, 1.5 * mb).exists);

  // below threshold the level equals the line-soliton value, not attained
  const auto below = groundstate::decide(3.0, 1.0, 0.5 * mb);
  CHECK(below.level.kind == LevelKind::Finite);
  CHECK(!below.attained);
  CHECK(rel_err(below.level.value,
                closedform::soliton_energy_line(3.0, 0.5 * mb)) < 1e-12);
  CHECK(below.bound_state_count == 0);
}

TEST_CASE("worked quartic example") {
  const auto report = groundstate::decide(4.0, 1.0, 6.0);
  CHECK(report.exists);
  CHECK(report.level.kind == LevelKind::Finite);
  CHECK(report.level.value == doctest::Approx(-3.0).epsilon(1e-12));
  // the attained level undercuts the line-soliton level -theta_4 * 6^3
  CHECK(report.level.value < -216.0 / 96.0);
  REQUIRE(report.line_soliton_level.has_value());
  CHECK(*report.line_soliton_level == doctest::Approx(-216.0 / 96.0).epsilon(1e-12));
}

TEST_CASE("repulsive super-quartic: window with bound states but no minimizer") {
  const double ms = thresholds::mu_star(5.0, 1.0);
  const double mt = thresholds::mu_tilde(5.0, 1.0);
  const double mb = thresholds::soliton_mass_at_alpha_sq(5.0, 1.0);

  const auto gap = groundstate::decide(5.0, 1.0, 0.5 * (ms + mt));
  CHECK(!gap.exists);
  CHECK(gap.bound_state_count == 2);
  REQUIRE(gap.candidate_energy.has_value());
  // the candidate sits strictly above the line level: not a minimizer
  CHECK(*gap.candidate_energy > *gap.line_soliton_level);

  const auto at_onset = groundstate::decide(5.0, 1.0, mt);
  CHECK(at_onset.exists);  // equality included in this regime
  CHECK(at_onset.at_threshold);

  const auto above = groundstate::decide(5.0, 1.0, 0.5 * (mt + mb));
  CHECK(above.exists);
  CHECK(above.bound_state_count == 2);
  CHECK(*above.candidate_energy <= *above.line_soliton_level + 1e-12);

  const auto far_above = groundstate::decide(5.0, 1.0, 3.0 * mb);
  CHECK(far_above.exists);
  CHECK(far_above.bound_state_count == 1);
}

TEST_CASE("critical attractive: finite negative level turning unbounded") {
  const double c4 = closedform::critical_mass_halfline();
  const auto below = groundstate::decide(6.0, -1.0, 1.0);
  CHECK(below.exists);
  CHECK(below.level.kind == LevelKind::Finite);
  CHECK(below.level.value < 0.0);
  REQUIRE(below.minimizer.has_value());
  CHECK(rel_err(boundstate::mass_critical(-1.0, below.minimizer->omega), 1.0) < 1e-10);

  const auto at = groundstate::decide(6.0, -1.0, c4);
  CHECK(!at.exists);
  CHECK(at.level.kind == LevelKind::MinusInfinity);
  CHECK(at.at_threshold);
  CHECK(groundstate::decide(6.0, -1.0, 2.0 * c4).level.kind ==
        LevelKind::MinusInfinity);
}

TEST_CASE("critical repulsive: never a minimizer") {
  const double c4 = closedform::critical_mass_halfline();
  const auto low = groundstate::decide(6.0, 1.0, 1.0);
  CHECK(!low.exists);
  CHECK(low.level.kind == LevelKind::Zero);

  const auto at = groundstate::decide(6.0, 1.0, c4);
  CHECK(!at.exists);
  CHECK(at.level.kind == LevelKind::Zero);  // closed at the threshold

  const auto above = groundstate::decide(6.0, 1.0, 1.5 * c4);
  CHECK(!above.exists);
  CHECK(above.level.kind == LevelKind::MinusInfinity);
  CHECK(above.bound_state_count == 1);  // a bound state that is not a minimizer
  REQUIRE(above.candidate_energy.has_value());
  CHECK(*above.candidate_energy > 0.0);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(groundstate::decide(2.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(groundstate::decide(7.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(groundstate::decide(3.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(groundstate::decide(3.0, 1.0, -1.0), std::domain_error);
}

TEST_CASE("regime grid: existence matches the independently evaluated tables") {
  const std::vector<double> ps = {2.3, 2.8, 3.3, 3.8, 4.0, 4.3, 4.7, 5.0,
                                  5.3, 5.6, 5.8, 6.0};
  std::vector<double> alphas, mus;
  for (int i = 0; i < 10; ++i) alphas.push_back(-2.0 + 4.2 * i / 9.0);  // skips 0
  for (int i = 0; i < 20; ++i) mus.push_back(0.05 * std::pow(400.0, i / 19.0));

  const double c4 = closedform::critical_mass_halfline();
  int checked = 0;
  for (double p : ps) {
    for (double alpha : alphas) {
      for (double mu : mus) {
        const auto report = groundstate::decide(p, alpha, mu);

        bool expected;
        if (p == 6.0) {
          expected = alpha < 0.0 && mu < c4 * (1.0 - 1e-12);
        } else if (alpha < 0.0) {
          expected = true;
        } else if (p <= 4.0) {
          const double mb = thresholds::soliton_mass_at_alpha_sq(p, alpha);
          expected = mu > mb * (1.0 + 1e-9);
        } else {
          try {
            const double mt = thresholds::mu_tilde(p, alpha);
            expected = mu >= mt * (1.0 - 1e-9);
          } catch (const ConvergenceError&) {
            const double mb = thresholds::soliton_mass_at_alpha_sq(p, alpha);
            expected = mu > mb * (1.0 + 1e-9);
          }
        }
        if (report.at_threshold) continue;  // band semantics checked elsewhere
        CHECK(report.exists == expected);
        if (report.exists) {
          REQUIRE(report.minimizer.has_value());
          CHECK(rel_err(boundstate::mass_any(p, alpha, report.minimizer->omega), mu) <
                1e-7);
          // least-energy candidate is the minimizer
          const auto least = thresholds::least_energy_bound_state(p, alpha, mu);
          CHECK(rel_err(report.minimizer->omega, least.omega) < 1e-12);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("subcritical minimizers never beat the line-soliton bound") {
  for (double p : {2.5, 3.0, 4.0, 4.8, 5.5}) {
    for (double alpha : {-1.5, -0.4, 0.6, 1.2}) {
      for (double mu : {0.3, 1.0, 4.0, 20.0}) {
        const auto report = groundstate::decide(p, alpha, mu);
        if (!report.exists) continue;
        REQUIRE(report.line_soliton_level.has_value());
        CHECK(report.level.value <= *report.line_soliton_level + 1e-10);
      }
    }
  }
}

TEST_CASE("energy-per-mass-power diagnostic") {
  // strictly decreasing in mu for repulsive sub-quartic interactions
  const double mb = thresholds::soliton_mass_at_alpha_sq(3.0, 1.0);
  double prev = groundstate::K_diagnostic(3.0, 1.0, mb * 1.0001);
  const auto c3 = closedform::compute_constants(3.0);
  CHECK(std::abs(prev + c3.theta_p) < 1e-3);  // limit value at the threshold
  for (double factor : {1.01, 1.1, 1.5, 3.0, 10.0}) {
    const double cur = groundstate::K_diagnostic(3.0, 1.0, mb * factor);
    CHECK(cur < prev);
    prev = cur;
  }

  // crossing value at the onset mass in the two-branch regime
  const double mt = thresholds::mu_tilde(5.0, 1.0);
  const auto c5 = closedform::compute_constants(5.0);
  CHECK(std::abs(groundstate::K_diagnostic(5.0, 1.0, mt) + c5.theta_p) < 1e-8);

  // large-mass limit: K -> -2^(2 beta) theta_p
  const double k_far = groundstate::K_diagnostic(5.0, 1.0, 500.0);
  const double limit = -std::pow(2.0, 2.0 * c5.beta) * c5.theta_p;
  CHECK(rel_err(k_far, limit) < 0.02);

  CHECK_THROWS_AS(groundstate::K_diagnostic(5.0, 1.0, 0.01), NoBoundStateError);
  CHECK_THROWS_AS(groundstate::K_diagnostic(6.0, -1.0, 1.0), std::domain_error);
}

TEST_CASE("ground level equals the report level") {
  const auto level = groundstate::ground_energy_level(4.0, 1.0, 6.0);
  CHECK(level.kind == LevelKind::Finite);
  CHECK(level.value == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("concentration family diverges in the unbounded regime") {
  const double c4 = closedform::critical_mass_halfline();

  // attractive at the threshold mass: linear divergence in nu
  const std::vector<double> nus{1.0, 2.0, 4.0, 8.0, 16.0};
  const auto attr = groundstate::critical_scaling_demo(-1.0, c4, nus, 1 << 15);
  REQUIRE(attr.size() == nus.size());
  CHECK(attr.front() < 0.0);
  for (std::size_t i = 1; i < attr.size(); ++i) CHECK(attr[i] < attr[i - 1]);

  // repulsive above the threshold: the seed profile already has negative
  // energy at the chosen concentration, then the family dives
  const auto rep = groundstate::critical_scaling_demo(1.0, 1.5 * c4, nus, 1 << 15);
  CHECK(rep.front() < 0.0);
  for (std::size_t i = 1; i < rep.size(); ++i) CHECK(rep[i] < rep[i - 1]);

  // bounded-energy inputs are rejected
  CHECK_THROWS_AS(groundstate::critical_scaling_demo(-1.0, 0.5 * c4, nus),
                  std::domain_error);
  CHECK_THROWS_AS(groundstate::critical_scaling_demo(1.0, c4, nus),
                  std::domain_error);
  CHECK_THROWS_AS(
      groundstate::critical_scaling_demo(1.0, 1.5 * c4, std::vector<double>{}),
      std::domain_error);
}
