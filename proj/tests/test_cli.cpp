#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
  const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  const std::string cmd = std::string(NLSH_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

double parse_kv(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) {
      return std::stod(line.substr(key.size() + 1));
    }
  }
  FAIL("missing key: " << key);
  return 0.0;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("bound-state reports the worked quartic values") {
  const auto r = run_cli("bound-state --p 4 --alpha 1 --omega 4");
  CHECK(r.exit_code == 0);
  CHECK(parse_kv(r.out, "mass") == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(parse_kv(r.out, "energy") == doctest::Approx(-3.0).epsilon(1e-10));
}

TEST_CASE("bound-state exits 2 on an inadmissible frequency") {
  const auto r = run_cli("bound-state --p 3 --alpha 1 --omega 0.5");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("no bound state") != std::string::npos);
}

TEST_CASE("bound-state handles the critical power") {
  const auto r = run_cli("bound-state --p 6 --alpha -1 --omega 2");
  CHECK(r.exit_code == 0);
  CHECK(parse_kv(r.out, "mass") ==
        doctest::Approx(0.6801747615878316).epsilon(1e-12));
}

TEST_CASE("bound-state usage errors exit 1") {
  CHECK(run_cli("bound-state --p 4 --alpha 1").exit_code == 1);
  CHECK(run_cli("bound-state --p 4 --alpha 1 --omega 4 --mu 6").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
}

TEST_CASE("bound-state inverts mass out of range with exit 2") {
  const auto r = run_cli("bound-state --p 3 --alpha 1 --mu 1 --branch unique");
  CHECK(r.exit_code == 2);
}

TEST_CASE("curves emits one row per admissible sweep point") {
  const auto r = run_cli("curves --p 5 --alpha 1 --sweep 0.5:50:40");
  CHECK(r.exit_code == 0);
  // 2 header lines + rows; points at or below alpha^2 = 1 are skipped
  int admissible = 0;
  for (int i = 0; i < 40; ++i) {
    const double omega = 0.5 + (50.0 - 0.5) * i / 39.0;
    if (omega > 1.0) ++admissible;
  }
  CHECK(count_lines(r.out) == admissible + 2);
  CHECK(r.err.find("skipped") != std::string::npos);
}

TEST_CASE("curves output is byte-identical across runs") {
  const std::string args = "curves --p 5 --alpha 1 --sweep 1.1:80:64:log --out ";
  const auto a = run_cli(args + "curves_a.csv");
  const auto b = run_cli(args + "curves_b.csv");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string file_a = slurp("curves_a.csv");
  const std::string file_b = slurp("curves_b.csv");
  CHECK(!file_a.empty());
  CHECK(file_a == file_b);
  std::remove("curves_a.csv");
  std::remove("curves_b.csv");
}

TEST_CASE("thresholds prints the two-branch structure") {
  const auto r = run_cli("thresholds --p 5 --alpha 1");
  CHECK(r.exit_code == 0);
  const double ms = parse_kv(r.out, "mu_star");
  const double mt = parse_kv(r.out, "mu_tilde");
  const double mb = parse_kv(r.out, "soliton_mass_at_alpha_sq");
  CHECK(ms < mt);
  CHECK(mt < mb);
  CHECK(parse_kv(r.out, "h_tilde_consistency") < 1e-8);

  const auto sub = run_cli("thresholds --p 3 --alpha 1");
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("omega_star") == std::string::npos);
  CHECK(parse_kv(sub.out, "soliton_mass_at_alpha_sq") ==
        doctest::Approx(6.0).epsilon(1e-10));

  const auto quartic = run_cli("thresholds --p 4 --alpha 1");
  CHECK(parse_kv(quartic.out, "soliton_mass_at_alpha_sq") ==
        doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("thresholds rejects out-of-domain powers with exit 1") {
  CHECK(run_cli("thresholds --p 1.5 --alpha 1").exit_code == 1);
}

TEST_CASE("phase diagram reproduces the critical horizontal boundary") {
  const auto r = run_cli(
      "phase-diagram --p 6 --sweep 0.3:2.6:24 --alpha-sweep -1:1:2 --out pd.csv");
  CHECK(r.exit_code == 0);
  std::ifstream in("pd.csv");
  std::string line;
  std::getline(in, line);  // comment
  std::getline(in, line);  // header
  const double c4 = 1.360349523175663;
  int rows = 0;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double mu, alpha;
    int count, exists;
    std::string level;
    int at_threshold;
    fields >> mu >> alpha >> count >> exists >> level >> at_threshold;
    if (alpha < 0.0) {
      CHECK(exists == (mu < c4 ? 1 : 0));
      if (mu < c4) CHECK(level == "finite");
      if (mu > c4) CHECK(level == "-inf");
    } else {
      CHECK(exists == 0);
      if (mu < c4) CHECK(level == "zero");
      if (mu > c4) CHECK(level == "-inf");
    }
    ++rows;
  }
  CHECK(rows == 48);
  std::remove("pd.csv");
}

TEST_CASE("phase diagram bands for the two-branch regime") {
  const auto r = run_cli(
      "phase-diagram --p 5 --sweep 1:4:31 --alpha-sweep 1:1.5:2 --out pd5.csv");
  CHECK(r.exit_code == 0);
  std::ifstream in("pd5.csv");
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  // bands in mu at fixed alpha: none -> two-without-minimizer -> minimizer
  bool seen_none = false, seen_gap = false, seen_ground = false;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double mu, alpha;
    int count, exists;
    std::string level;
    int at_threshold;
    fields >> mu >> alpha >> count >> exists >> level >> at_threshold;
    if (alpha != 1.0) continue;
    if (count == 0) seen_none = true;
    if (count == 2 && exists == 0) seen_gap = true;
    if (exists == 1) seen_ground = true;
  }
  CHECK(seen_none);
  CHECK(seen_gap);
  CHECK(seen_ground);
  std::remove("pd5.csv");
}

TEST_CASE("flow emits a summary and a two-column profile") {
  const auto r = run_cli(
      "flow --p 4 --alpha 1 --mu 6 --L 20 --n 2048 --max-iter 4000 --out prof.txt");
  CHECK(r.exit_code == 0);
  CHECK(parse_kv(r.out, "energy") == doctest::Approx(-3.0).epsilon(1e-3));
  CHECK(parse_kv(r.out, "mass") == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(parse_kv(r.out, "omega_estimate") == doctest::Approx(4.0).epsilon(1e-2));

  const std::string profile = slurp("prof.txt");
  CHECK(count_lines(profile) == 2049);
  std::istringstream first(profile);
  double x, u;
  first >> x >> u;
  CHECK(x == 0.0);
  CHECK(u > 0.0);
  std::remove("prof.txt");
}

TEST_CASE("verify filters regimes and reports per-check lines") {
  const auto r = run_cli("verify --regime closedform");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p4-closed-forms") != std::string::npos);
  CHECK(r.out.find("quadrature-oracle") != std::string::npos);
  CHECK(r.out.find("critical-constants") == std::string::npos);
  CHECK(run_cli("verify --regime nonsense").exit_code == 1);
}
