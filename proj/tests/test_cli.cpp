// End-to-end checks of the command-line tool: spawns the built binary.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

#ifndef LACTOEP_CLI_PATH
#define LACTOEP_CLI_PATH "lactoep"
#endif

// Fixtures and captured output live under the system temp directory so test
// runs never litter the working tree.
std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_file = scratch("cli_test_stdout.tmp");
  const std::string cmd = env_prefix + std::string(LACTOEP_CLI_PATH) + " " + args +
                          " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

std::string write_tridiagonal_symbol(const std::string& name) {
  const std::string path = scratch(name);
  std::ofstream out(path);
  out << "{\"tol\": 1e-14, \"log_coeffs\": {";
  bool first = true;
  double pa = 1.0, pb = 1.0;
  for (int n = 1; n <= 40; ++n) {
    pa *= -0.4;
    pb *= -0.3;
    if (!first) out << ",";
    first = false;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "\"%d\": [%.17g, 0.0], \"%d\": [%.17g, 0.0]",
                  n, -pa / n, -n, -pb / n);
    out << buf;
  }
  out << "}}";
  return path;
}

std::string write_identity_symbol(const std::string& name) {
  const std::string path = scratch(name);
  std::ofstream out(path);
  out << "{\"tol\": 1e-14, \"log_coeffs\": {\"0\": [0.0, 0.0]}}";
  return path;
}

std::string write_no_decay_symbol(const std::string& name) {
  const std::string path = scratch(name);
  std::ofstream out(path);
  out << "{\"tol\": 1e-12, \"log_coeffs\": {";
  for (int n = -20; n <= 20; ++n)
    out << (n > -20 ? "," : "") << "\"" << n << "\": [0.4, 0.1]";
  out << "}}";
  return path;
}

double csv_field(const std::string& line, int idx) {
  std::stringstream ss(line);
  std::string cell;
  for (int i = 0; i <= idx; ++i) std::getline(ss, cell, ',');
  return std::strtod(cell.c_str(), nullptr);
}

}  // namespace

TEST_CASE("cli coeffs") {
  const std::string one = write_identity_symbol("cli_one.json");
  const auto r = run_cli("coeffs " + one + " --n-min -1 --n-max 1");
  CHECK(r.exit_code == 0);
  std::stringstream ss(r.output);
  std::string header, l0, l1, l2;
  std::getline(ss, header);
  std::getline(ss, l0);
  std::getline(ss, l1);
  std::getline(ss, l2);
  CHECK(header == "n,re,im");
  CHECK(csv_field(l0, 1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(csv_field(l1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(csv_field(l2, 1) == doctest::Approx(0.0).epsilon(1e-14));

  const std::string tri_path = write_tridiagonal_symbol("cli_tri.json");
  const auto tri = run_cli("coeffs " + tri_path + " --n-min -2 --n-max 2");
  CHECK(tri.exit_code == 0);
  CHECK(tri.output.find("0,1.1200000000000001,") != std::string::npos);

  const auto missing = run_cli("coeffs cli_absent.json --n-min 0 --n-max 1");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("cli factorize") {
  const std::string tri = write_tridiagonal_symbol("cli_tri.json");
  const auto ok = run_cli("factorize " + tri + " --format json");
  CHECK(ok.exit_code == 0);
  const auto pos = ok.output.find("\"jump_residual\": ");
  REQUIRE(pos != std::string::npos);
  const double residual =
      std::strtod(ok.output.c_str() + pos + 17, nullptr);
  CHECK(residual <= 1e-12);

  const std::string noise = write_no_decay_symbol("cli_noise.json");
  const auto bad = run_cli("factorize " + noise);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli ratio") {
  const std::string tri = write_tridiagonal_symbol("cli_tri.json");
  const auto r = run_cli("ratio " + tri + " --N 64 --h 1 --p 0");
  CHECK(r.exit_code == 0);
  const auto pos = r.output.find("\"abs_error\": ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::strtod(r.output.c_str() + pos + 13, nullptr) <= 1e-8);

  // empty spec: both ratios one
  const auto empty = run_cli("ratio " + tri + " --N 16");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("\"abs_error\": 0.0") != std::string::npos);

  const auto invalid = run_cli("ratio " + tri + " --N 10 --h 1 --p 3");
  CHECK(invalid.exit_code == 2);

  // deterministic bytes for identical invocations
  const auto again = run_cli("ratio " + tri + " --N 64 --h 1 --p 0");
  CHECK(again.output == r.output);
}

TEST_CASE("cli sweep") {
  const std::string tri = write_tridiagonal_symbol("cli_tri.json");
  const auto r =
      run_cli("sweep " + tri + " --N-list 16,32,64 --h 1 --p 0 --method line");
  CHECK(r.exit_code == 0);
  std::stringstream ss(r.output);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "N,exact_re,exact_im,asym_re,asym_im,abs_err,nodes,ms");
  std::string row;
  int rows = 0;
  double last_err = 1.0;
  while (std::getline(ss, row)) {
    ++rows;
    const double err = csv_field(row, 5);
    CHECK(err <= std::max(last_err, 1e-10));
    last_err = err;
  }
  CHECK(rows == 3);

  // value columns are independent of the thread budget
  const std::string args = "sweep " + tri + " --N-list 8,16,24 --h 1 --p 0";
  const auto seq = run_cli(args, "LACTOEP_THREADS=1 ");
  const auto par = run_cli(args, "LACTOEP_THREADS=4 ");
  std::stringstream sa(seq.output), sb(par.output);
  std::string la, lb;
  while (std::getline(sa, la) && std::getline(sb, lb)) {
    const auto cut = [](const std::string& s) {
      return s.substr(0, s.rfind(','));  // drop the wall-time column
    };
    CHECK(cut(la) == cut(lb));
  }

  const auto unsorted = run_cli("sweep " + tri + " --N-list 32,16 --h 1 --p 0");
  CHECK(unsorted.exit_code == 2);
}
