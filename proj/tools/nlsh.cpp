// Command-line surface for the half-line NLS ground-state library.
//
// Subcommands: bound-state, curves, thresholds, phase-diagram, flow, verify.
// Exit codes: 0 ok, 1 usage/domain error, 2 no bound state / mass out of
// range, 3 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlsh/boundstate.hpp"
#include "nlsh/closedform.hpp"
#include "nlsh/errors.hpp"
#include "nlsh/groundstate.hpp"
#include "nlsh/minimizer.hpp"
#include "nlsh/thresholds.hpp"
#include "nlsh/verify.hpp"

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log_spaced = false;

  double at(int i) const {
    if (count == 1) return start;
    const double t = static_cast<double>(i) / (count - 1);
    if (log_spaced) {
      return start * std::pow(stop / start, t);
    }
    return start + t * (stop - start);
  }
};

Sweep parse_sweep(const std::string& text) {
  Sweep sweep;
  std::stringstream ss(text);
  std::string item;
  std::vector<std::string> parts;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) {
    throw CLI::ValidationError("sweep", "expected start:stop:count[:log]");
  }
  sweep.start = std::stod(parts[0]);
  sweep.stop = std::stod(parts[1]);
  sweep.count = std::stoi(parts[2]);
  if (parts.size() == 4) {
    if (parts[3] != "log") {
      throw CLI::ValidationError("sweep", "fourth field must be 'log'");
    }
    sweep.log_spaced = true;
    if (sweep.start <= 0.0 || sweep.stop <= 0.0) {
      throw CLI::ValidationError("sweep", "log spacing needs positive endpoints");
    }
  }
  if (sweep.count < 2) {
    throw CLI::ValidationError("sweep", "count must be at least 2");
  }
  return sweep;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void dump_profile(std::ostream& os, const nlsh::minimizer::DiscreteField& field) {
  const double h = field.grid.spacing();
  for (std::size_t i = 0; i < field.u.size(); ++i) {
    os << g17(i * h) << " " << g17(field.u[i]) << "\n";
  }
}

void print_kv(std::ostream& os, const std::string& key, double value) {
  os << key << "=" << g17(value) << "\n";
}

void print_kv(std::ostream& os, const std::string& key, const std::string& value) {
  os << key << "=" << value << "\n";
}

// --- subcommand payloads --------------------------------------------------

struct BoundStateArgs {
  double p = 0.0;
  double alpha = 0.0;
  std::optional<double> omega;
  std::optional<double> mu;
  std::string branch = "unique";
  std::string out;
  double length = 0.0;  // 0: derive from omega
  int intervals = 2048;
};

nlsh::thresholds::BranchSelector parse_branch(const std::string& name) {
  if (name == "lower") return nlsh::thresholds::BranchSelector::Lower;
  if (name == "upper") return nlsh::thresholds::BranchSelector::Upper;
  if (name == "unique") return nlsh::thresholds::BranchSelector::Unique;
  throw CLI::ValidationError("branch", "must be lower, upper or unique");
}

int run_bound_state(const BoundStateArgs& args) {
  if (args.omega.has_value() == args.mu.has_value()) {
    std::cerr << "bound-state: supply exactly one of --omega / --mu\n";
    return 1;
  }
  double omega;
  if (args.omega) {
    omega = *args.omega;
    // probe admissibility up front so the error carries the right exit code
    nlsh::boundstate::shift_a(args.p, args.alpha, omega);
  } else {
    omega = nlsh::thresholds::invert_mass(args.p, args.alpha, *args.mu,
                                          parse_branch(args.branch));
  }
  const auto state = nlsh::boundstate::make(args.p, args.alpha, omega);

  std::ostream& os = std::cout;
  print_kv(os, "p", args.p);
  print_kv(os, "alpha", args.alpha);
  print_kv(os, "omega", omega);
  print_kv(os, "shift", state.shift);
  print_kv(os, "mass", nlsh::boundstate::mass_any(args.p, args.alpha, omega));
  print_kv(os, "energy", nlsh::boundstate::energy_any(args.p, args.alpha, omega));
  print_kv(os, "dmass_domega",
           nlsh::boundstate::mass_derivative_any(args.p, args.alpha, omega));
  print_kv(os, "denergy_domega",
           nlsh::boundstate::energy_derivative_any(args.p, args.alpha, omega));
  print_kv(os, "trace", nlsh::boundstate::evaluate(state, 0.0));

  if (!args.out.empty()) {
    const double length =
        args.length > 0.0 ? args.length
                          : std::max(30.0, 50.0 / std::sqrt(omega));
    nlsh::minimizer::Grid grid{length, args.intervals};
    const auto field = nlsh::minimizer::sample_bound_state(state, grid);
    Output output(args.out);
    dump_profile(output.stream(), field);
  }
  return 0;
}

struct CurvesArgs {
  double p = 0.0;
  double alpha = 0.0;
  std::string sweep;
  std::string out;
};

int run_curves(const CurvesArgs& args) {
  const Sweep sweep = parse_sweep(args.sweep);
  Output output(args.out);
  std::ostream& os = output.stream();
  os << "# nlsh curves p=" << g17(args.p) << " alpha=" << g17(args.alpha)
     << " sweep=" << args.sweep << "\n";
  os << "omega,mass,energy,dmass,denergy\n";
  int skipped = 0;
  for (int i = 0; i < sweep.count; ++i) {
    const double omega = sweep.at(i);
    if (omega <= args.alpha * args.alpha) {
      ++skipped;
      continue;
    }
    os << g17(omega) << ","
       << g17(nlsh::boundstate::mass_any(args.p, args.alpha, omega)) << ","
       << g17(nlsh::boundstate::energy_any(args.p, args.alpha, omega)) << ","
       << g17(nlsh::boundstate::mass_derivative_any(args.p, args.alpha, omega)) << ","
       << g17(nlsh::boundstate::energy_derivative_any(args.p, args.alpha, omega))
       << "\n";
  }
  if (skipped > 0) {
    std::cerr << "curves: skipped " << skipped
              << " sweep points with omega <= alpha^2 (no bound state)\n";
  }
  return 0;
}

struct ThresholdsArgs {
  double p = 0.0;
  double alpha = 0.0;
};

int run_thresholds(const ThresholdsArgs& args) {
  std::ostream& os = std::cout;
  print_kv(os, "p", args.p);
  print_kv(os, "alpha", args.alpha);
  if (args.p == 6.0) {
    print_kv(os, "critical_mass_halfline", nlsh::closedform::critical_mass_halfline());
    print_kv(os, "critical_mass_line", nlsh::closedform::critical_mass_line());
    print_kv(os, "k6_halfline", nlsh::closedform::kSharpK6HalfLine);
    return 0;
  }
  const auto report = nlsh::thresholds::compute_report(args.p, args.alpha);
  print_kv(os, "soliton_mass_at_alpha_sq", report.soliton_mass_at_alpha_sq);
  print_kv(os, "gamma_p", report.gamma_p);
  if (report.omega_star) {
    print_kv(os, "omega_star", *report.omega_star);
    print_kv(os, "mu_star", *report.mu_star);
    print_kv(os, "mu_tilde", *report.mu_tilde);
    // invert mu_tilde back to an interaction strength as a consistency check
    const double h_tilde =
        nlsh::thresholds::alpha_threshold(args.p, *report.mu_tilde);
    print_kv(os, "h_tilde_at_mu_tilde", h_tilde);
    print_kv(os, "h_tilde_consistency", std::abs(h_tilde - args.alpha));
  }
  return 0;
}

struct PhaseDiagramArgs {
  double p = 0.0;
  std::string mu_sweep;
  std::string alpha_sweep;
  std::string out;
};

int run_phase_diagram(const PhaseDiagramArgs& args) {
  const Sweep mu_sweep = parse_sweep(args.mu_sweep);
  const Sweep alpha_sweep = parse_sweep(args.alpha_sweep);
  Output output(args.out);
  std::ostream& os = output.stream();
  os << "# nlsh phase-diagram p=" << g17(args.p) << " mu-sweep=" << args.mu_sweep
     << " alpha-sweep=" << args.alpha_sweep << "\n";
  os << "mu,alpha,bound_state_count,ground_state_exists,energy_level,at_threshold\n";
  int skipped = 0;
  for (int i = 0; i < mu_sweep.count; ++i) {
    for (int j = 0; j < alpha_sweep.count; ++j) {
      const double mu = mu_sweep.at(i);
      const double alpha = alpha_sweep.at(j);
      if (alpha == 0.0 || mu <= 0.0) {
        ++skipped;
        continue;
      }
      const auto report = nlsh::groundstate::decide(args.p, alpha, mu);
      const char* level = "finite";
      if (report.level.kind == nlsh::groundstate::LevelKind::Zero) level = "zero";
      if (report.level.kind == nlsh::groundstate::LevelKind::MinusInfinity) {
        level = "-inf";
      }
      os << g17(mu) << "," << g17(alpha) << "," << report.bound_state_count << ","
         << (report.exists ? 1 : 0) << "," << level << ","
         << (report.at_threshold ? 1 : 0) << "\n";
    }
  }
  if (skipped > 0) {
    std::cerr << "phase-diagram: skipped " << skipped
              << " cells outside the parameter domain\n";
  }
  return 0;
}

struct FlowArgs {
  double p = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  double length = 0.0;
  int intervals = 4096;
  double tol = 1e-12;
  long max_iter = 200000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_flow(const FlowArgs& args) {
  double length = args.length;
  if (length <= 0.0) {
    double omega_guess = 1.0;
    try {
      omega_guess =
          nlsh::thresholds::least_energy_bound_state(args.p, args.alpha, args.mu)
              .omega;
    } catch (const std::exception&) {
      // frontier regime: keep the default scale
    }
    length = std::max(30.0, 50.0 / std::sqrt(omega_guess));
  }
  nlsh::minimizer::Grid grid{length, args.intervals};
  nlsh::minimizer::FlowOptions opt;
  opt.tol = args.tol;
  opt.max_iter = args.max_iter;
  opt.seed = args.seed;
  const auto run = nlsh::minimizer::normalized_gradient_flow(args.p, args.alpha,
                                                             args.mu, grid, opt);
  const auto residual = nlsh::minimizer::el_residual(run.field, args.p, args.alpha);

  std::ostream& os = std::cout;
  print_kv(os, "p", args.p);
  print_kv(os, "alpha", args.alpha);
  print_kv(os, "mu", args.mu);
  print_kv(os, "L", length);
  print_kv(os, "n", static_cast<double>(args.intervals));
  print_kv(os, "energy", run.energy);
  print_kv(os, "iterations", static_cast<double>(run.iterations));
  const char* status = "converged";
  if (run.status == nlsh::minimizer::FlowStatus::MaxIterations) status = "max-iterations";
  if (run.status == nlsh::minimizer::FlowStatus::Divergent) status = "divergent";
  print_kv(os, "status", status);
  print_kv(os, "mass", nlsh::minimizer::discrete_mass(run.field));
  print_kv(os, "omega_estimate", residual.omega_estimate);
  print_kv(os, "interior_residual", residual.interior);
  print_kv(os, "boundary_residual", residual.boundary);

  if (!args.out.empty()) {
    Output output(args.out);
    dump_profile(output.stream(), run.field);
  }
  return 0;
}

int run_verify(const std::string& regime) {
  const auto results = nlsh::verify::run_acceptance(regime, &std::cout);
  if (results.empty()) {
    std::cerr << "verify: no checks match regime '" << regime << "'\n";
    return 1;
  }
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
  }
  std::cout << "verify: " << results.size() - failed << "/" << results.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"half-line NLS bound and ground states with a delta interaction"};
  app.require_subcommand(1);

  BoundStateArgs bs;
  auto* bound_state = app.add_subcommand("bound-state",
                                         "closed-form bound state at (p, alpha)");
  bound_state->add_option("--p", bs.p, "nonlinearity power in (2, 6]")->required();
  bound_state->add_option("--alpha", bs.alpha, "interaction strength")->required();
  bound_state->add_option("--omega", bs.omega, "frequency");
  bound_state->add_option("--mu", bs.mu, "mass (inverted on --branch)");
  bound_state->add_option("--branch", bs.branch, "lower | upper | unique");
  bound_state->add_option("--out", bs.out, "write sampled profile (x, u) here");
  bound_state->add_option("--L", bs.length, "profile truncation length");
  bound_state->add_option("--n", bs.intervals, "profile grid intervals");

  CurvesArgs cv;
  auto* curves = app.add_subcommand("curves",
                                    "mass/energy curves over a frequency sweep");
  curves->add_option("--p", cv.p, "nonlinearity power in (2, 6]")->required();
  curves->add_option("--alpha", cv.alpha, "interaction strength")->required();
  curves->add_option("--sweep", cv.sweep, "omega sweep start:stop:count[:log]")
      ->required();
  curves->add_option("--out", cv.out, "CSV output path (default stdout)");

  ThresholdsArgs th;
  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "existence thresholds at (p, alpha)");
  thresholds_cmd->add_option("--p", th.p, "nonlinearity power in (2, 6]")->required();
  thresholds_cmd->add_option("--alpha", th.alpha, "interaction strength")->required();

  PhaseDiagramArgs pd;
  auto* phase = app.add_subcommand("phase-diagram",
                                   "existence classification over (mu, alpha)");
  phase->add_option("--p", pd.p, "nonlinearity power in (2, 6]")->required();
  phase->add_option("--sweep", pd.mu_sweep, "mu sweep start:stop:count[:log]")
      ->required();
  phase->add_option("--alpha-sweep", pd.alpha_sweep,
                    "alpha sweep start:stop:count[:log]")
      ->required();
  phase->add_option("--out", pd.out, "CSV output path (default stdout)");

  FlowArgs fl;
  auto* flow = app.add_subcommand("flow",
                                  "constrained gradient-flow minimization");
  flow->add_option("--p", fl.p, "nonlinearity power in (2, 6]")->required();
  flow->add_option("--alpha", fl.alpha, "interaction strength")->required();
  flow->add_option("--mu", fl.mu, "mass constraint")->required();
  flow->add_option("--L", fl.length, "truncation length (default auto)");
  flow->add_option("--n", fl.intervals, "grid intervals");
  flow->add_option("--tol", fl.tol, "relative energy-decrease tolerance");
  flow->add_option("--max-iter", fl.max_iter, "iteration cap");
  flow->add_option("--seed", fl.seed, "seed for the fallback initial bump");
  flow->add_option("--out", fl.out, "write converged profile (x, u) here");

  std::string regime = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--regime", regime,
                         "all | critical | closedform | identities | thresholds "
                         "| counting | minimizer | asymptotics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (bound_state->parsed()) return run_bound_state(bs);
    if (curves->parsed()) return run_curves(cv);
    if (thresholds_cmd->parsed()) return run_thresholds(th);
    if (phase->parsed()) return run_phase_diagram(pd);
    if (flow->parsed()) return run_flow(fl);
    if (verify_cmd->parsed()) return run_verify(regime);
  } catch (const nlsh::NoBoundStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlsh::OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlsh::BranchInvalidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
