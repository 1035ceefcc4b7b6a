// lactoep -- lacunary Toeplitz determinant toolkit.
//
// Subcommands: coeffs | factorize | ratio | sweep.  Symbols come in as JSON
// files ({"log_coeffs": {"n": [re,im], ...}, "tol": t} or
// {"samples": [[re,im], ...], "tol": t}); lacunary data comes in as flags.
// Output is CSV or JSON with 17 significant digits so reports round-trip.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lactoep/asymptotics.hpp"
#include "lactoep/errors.hpp"

namespace {

using nlohmann::json;
using namespace lactoep;

constexpr const char* kVersion = "lactoep 0.1.0";

struct CliFailure {
  int exit_code;
  std::string message;
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Symbol load_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{1, "cannot open symbol file: " + path};
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw CliFailure{1, std::string("symbol file is not valid JSON: ") + e.what()};
  }

  try {
    const double tol = doc.value("tol", 1e-12);
    if (doc.contains("log_coeffs")) {
      std::int64_t lo = 0, hi = 0;
      for (auto& [key, value] : doc["log_coeffs"].items()) {
        const std::int64_t n = std::stoll(key);
        lo = std::min(lo, n);
        hi = std::max(hi, n);
        (void)value;
      }
      CoefficientTable table;
      table.offset = lo;
      table.values.assign(static_cast<std::size_t>(hi - lo + 1), cplx(0.0, 0.0));
      for (auto& [key, value] : doc["log_coeffs"].items())
        table.at(std::stoll(key)) = cplx(value.at(0).get<double>(),
                                         value.at(1).get<double>());
      return build_symbol_from_log_coeffs(table, tol);
    }
    if (doc.contains("samples")) {
      std::vector<cplx> samples;
      for (auto& v : doc["samples"])
        samples.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
      return build_symbol_from_samples(samples, tol);
    }
    throw CliFailure{2, "symbol JSON needs \"log_coeffs\" or \"samples\""};
  } catch (const error& e) {
    throw CliFailure{2, e.what()};
  } catch (const json::exception& e) {
    throw CliFailure{1, std::string("bad symbol JSON: ") + e.what()};
  }
}

// FNV-1a over offset and coefficient bit patterns: stable symbol fingerprint.
std::string symbol_hash(const Symbol& s) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const void* p, std::size_t len) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  mix(&s.log_coeffs.offset, sizeof(s.log_coeffs.offset));
  for (const cplx& c : s.log_coeffs.values) {
    const double re = c.real(), im = c.imag();
    mix(&re, sizeof(re));
    mix(&im, sizeof(im));
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

struct SpecFlags {
  std::vector<std::int64_t> h, p, t, k;

  LacunarySpec build(std::int64_t n_size) const {
    if (h.size() != p.size())
      throw CliFailure{2, "--h and --p need the same number of entries"};
    if (t.size() != k.size())
      throw CliFailure{2, "--t and --k need the same number of entries"};
    std::vector<IndexPair> lines, rows;
    for (std::size_t i = 0; i < h.size(); ++i) lines.push_back({h[i], p[i]});
    for (std::size_t i = 0; i < t.size(); ++i) rows.push_back({t[i], k[i]});
    try {
      return validate_and_normalize(n_size, std::move(lines), std::move(rows));
    } catch (const error& e) {
      throw CliFailure{2, e.what()};
    }
  }
};

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "line") return Method::line;
  if (name == "general") return Method::general;
  if (name == "split") return Method::split;
  throw CliFailure{2, "unknown method: " + name};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::line: return "line";
    case Method::general: return "general";
    case Method::split: return "split";
  }
  return "?";
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliFailure{1, "cannot write to " + out_path};
  out << text;
}

struct RatioRow {
  std::int64_t n_size = 0;
  cplx exact{0.0, 0.0};
  bool exact_zero = false;
  cplx asym{0.0, 0.0};
  double abs_error = 0.0;
  double condition = 1.0;
  bool singular_flag = false;
  bool converged = true;
  Method method_used = Method::automatic;
  std::size_t nodes = 0;
  double wall_ms = 0.0;
};

RatioRow compute_ratio(const Symbol& symbol, const WienerHopfFactorization& fact,
                       const SpecFlags& flags, std::int64_t n_size,
                       const QuadratureConfig& config, Method method) {
  const auto t0 = std::chrono::steady_clock::now();
  const LacunarySpec spec = flags.build(n_size);
  RatioRow row;
  row.n_size = n_size;
  try {
    const ExactRatio ex = exact_ratio(symbol, spec);
    row.exact = ex.value;
    row.exact_zero = ex.is_zero;
    const AsymptoticRatio ar = asymptotic_ratio(fact, symbol, spec, config, method);
    row.asym = ar.value;
    row.abs_error = std::abs(row.exact - row.asym);
    row.condition = ar.condition;
    row.singular_flag = ar.singular_flag;
    row.converged = ar.quadrature_report.all_converged;
    row.method_used = ar.method_used;
    row.nodes = ar.quadrature_report.max_nodes;
  } catch (const error& e) {
    throw CliFailure{2, e.what()};
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return row;
}

std::size_t thread_budget(std::size_t jobs) {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("LACTOEP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = static_cast<std::size_t>(v);
  }
  return std::min(cap, jobs);
}

int cmd_coeffs(const std::string& symbol_file, std::int64_t n_min,
               std::int64_t n_max, const std::string& format,
               const std::string& out_path) {
  const Symbol symbol = load_symbol(symbol_file);
  CoefficientTable table;
  try {
    table = fourier_coefficients(symbol, n_min, n_max);
  } catch (const error& e) {
    throw CliFailure{2, e.what()};
  }
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["n_min"] = table.n_min();
    doc["n_max"] = table.n_max();
    json rows = json::array();
    for (std::int64_t n = table.n_min(); n <= table.n_max(); ++n)
      rows.push_back({n, table.get(n).real(), table.get(n).imag()});
    doc["coefficients"] = rows;
    os << doc.dump(2) << "\n";
  } else {
    os << "n,re,im\n";
    for (std::int64_t n = table.n_min(); n <= table.n_max(); ++n)
      os << n << "," << fmt17(table.get(n).real()) << ","
         << fmt17(table.get(n).imag()) << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_factorize(const std::string& symbol_file, std::size_t grid,
                  const std::string& format, const std::string& out_path) {
  const Symbol symbol = load_symbol(symbol_file);
  WienerHopfFactorization fact;
  double residual = 0.0;
  try {
    fact = factorize(symbol);
    residual = verify_jump(fact, symbol, grid);
  } catch (const error& e) {
    throw CliFailure{2, e.what()};
  }
  std::ostringstream os;
  if (format == "json") {
    json doc;
    json plus = json::array(), minus = json::array();
    for (std::size_t n = 0; n < fact.plus_coeffs.size(); ++n)
      plus.push_back({static_cast<std::int64_t>(n), fact.plus_coeffs[n].real(),
                      fact.plus_coeffs[n].imag()});
    for (std::size_t n = 0; n < fact.minus_coeffs.size(); ++n)
      minus.push_back({-static_cast<std::int64_t>(n) - 1,
                       fact.minus_coeffs[n].real(), fact.minus_coeffs[n].imag()});
    doc["plus_exponent"] = plus;
    doc["minus_exponent"] = minus;
    doc["annulus"] = {fact.inner_radius, fact.outer_radius};
    doc["jump_residual"] = residual;
    os << doc.dump(2) << "\n";
  } else {
    os << "branch,n,re,im\n";
    for (std::size_t n = 0; n < fact.plus_coeffs.size(); ++n)
      os << "plus," << n << "," << fmt17(fact.plus_coeffs[n].real()) << ","
         << fmt17(fact.plus_coeffs[n].imag()) << "\n";
    for (std::size_t n = 0; n < fact.minus_coeffs.size(); ++n)
      os << "minus," << -static_cast<std::int64_t>(n) - 1 << ","
         << fmt17(fact.minus_coeffs[n].real()) << ","
         << fmt17(fact.minus_coeffs[n].imag()) << "\n";
    os << "residual,," << fmt17(residual) << ",0\n";
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_ratio(const std::string& symbol_file, std::int64_t n_size,
              const SpecFlags& flags, const QuadratureConfig& config,
              Method method, const std::string& out_path) {
  const Symbol symbol = load_symbol(symbol_file);
  const WienerHopfFactorization fact = factorize(symbol);
  const RatioRow row = compute_ratio(symbol, fact, flags, n_size, config, method);

  json doc;
  doc["N"] = row.n_size;
  doc["exact"] = {row.exact.real(), row.exact.imag()};
  doc["exact_is_zero"] = row.exact_zero;
  doc["asymptotic"] = {row.asym.real(), row.asym.imag()};
  doc["abs_error"] = row.abs_error;
  doc["condition"] = row.condition;
  doc["singular_flag"] = row.singular_flag;
  doc["method"] = method_name(row.method_used);
  doc["converged"] = row.converged;
  doc["nodes"] = row.nodes;
  std::ostringstream os;
  os << doc.dump(2) << "\n";
  write_output(out_path, os.str());
  return row.converged || row.exact_zero ? 0 : 2;
}

int cmd_sweep(const std::string& symbol_file,
              const std::vector<std::int64_t>& n_list, const SpecFlags& flags,
              const QuadratureConfig& config, Method method,
              const std::string& format, const std::string& out_path) {
  if (n_list.empty()) throw CliFailure{2, "--N-list must not be empty"};
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw CliFailure{2, "--N-list must be strictly ascending"};

  const Symbol symbol = load_symbol(symbol_file);
  const WienerHopfFactorization fact = factorize(symbol);

  // Distinct N values are independent; evaluate them concurrently up to the
  // LACTOEP_THREADS budget, then assemble rows in N order.
  std::vector<RatioRow> rows(n_list.size());
  const std::size_t budget = thread_budget(n_list.size());
  std::size_t next = 0;
  while (next < n_list.size()) {
    const std::size_t batch = std::min(budget, n_list.size() - next);
    std::vector<std::future<RatioRow>> futs;
    for (std::size_t j = 0; j < batch; ++j)
      futs.push_back(std::async(std::launch::async, [&, idx = next + j] {
        return compute_ratio(symbol, fact, flags, n_list[idx], config, method);
      }));
    for (std::size_t j = 0; j < batch; ++j) rows[next + j] = futs[j].get();
    next += batch;
  }

  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["metadata"] = {{"tool", kVersion},
                       {"symbol_hash", symbol_hash(symbol)},
                       {"h", flags.h},
                       {"p", flags.p},
                       {"t", flags.t},
                       {"k", flags.k},
                       {"method", method_name(method)},
                       {"quad_nodes", config.nodes},
                       {"quad_tol", config.tol}};
    json body = json::array();
    for (const RatioRow& r : rows)
      body.push_back({{"N", r.n_size},
                      {"exact", {r.exact.real(), r.exact.imag()}},
                      {"asym", {r.asym.real(), r.asym.imag()}},
                      {"abs_err", r.abs_error},
                      {"nodes", r.nodes},
                      {"ms", r.wall_ms}});
    doc["rows"] = body;
    os << doc.dump(2) << "\n";
  } else {
    os << "N,exact_re,exact_im,asym_re,asym_im,abs_err,nodes,ms\n";
    for (const RatioRow& r : rows)
      os << r.n_size << "," << fmt17(r.exact.real()) << ","
         << fmt17(r.exact.imag()) << "," << fmt17(r.asym.real()) << ","
         << fmt17(r.asym.imag()) << "," << fmt17(r.abs_error) << "," << r.nodes
         << "," << fmt17(r.wall_ms) << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lacunary Toeplitz determinants: exact ratios and large-N "
               "correction determinants"};
  app.set_version_flag("--version", kVersion);
  app.set_help_flag("--help", "print help");  // keep -h free for --h
  app.require_subcommand(1);

  std::string symbol_file, format = "csv", out_path;
  std::int64_t n_min = 0, n_max = 0, n_size = 0;
  std::size_t grid = 256;
  SpecFlags flags;
  QuadratureConfig config;
  std::string method_name_flag = "auto";
  std::vector<std::int64_t> n_list;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--h", flags.h, "lacunary line positions h_a")->delimiter(',');
    cmd->add_option("--p", flags.p, "lacunary line indices p_a")->delimiter(',');
    cmd->add_option("--t", flags.t, "lacunary row positions t_b")->delimiter(',');
    cmd->add_option("--k", flags.k, "lacunary row indices k_b")->delimiter(',');
  };
  auto add_quad_flags = [&](CLI::App* cmd) {
    cmd->add_option("--eta-z", config.eta_z, "interior z-contour radius");
    cmd->add_option("--eta-s", config.eta_s, "interior s-contour radius");
    cmd->add_option("--quad-nodes", config.nodes, "starting nodes per circle");
    cmd->add_option("--quad-tol", config.tol, "quadrature relative tolerance");
    cmd->add_option("--method", method_name_flag,
                    "auto|line|general|split (default auto)");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Fourier coefficients of f");
  coeffs->add_option("symbol", symbol_file, "symbol JSON file")->required();
  coeffs->add_option("--n-min", n_min, "lowest index")->required();
  coeffs->add_option("--n-max", n_max, "highest index")->required();
  coeffs->add_option("--format", format, "csv|json");
  coeffs->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* factorize_cmd =
      app.add_subcommand("factorize", "Wiener-Hopf factor exponents and jump residual");
  factorize_cmd->add_option("symbol", symbol_file, "symbol JSON file")->required();
  factorize_cmd->add_option("--grid", grid, "jump-check grid size");
  factorize_cmd->add_option("--format", format, "csv|json");
  factorize_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* ratio = app.add_subcommand(
      "ratio", "exact and asymptotic lacunary/plain determinant ratio");
  ratio->add_option("symbol", symbol_file, "symbol JSON file")->required();
  ratio->add_option("--N", n_size, "matrix size")->required();
  add_spec_flags(ratio);
  add_quad_flags(ratio);
  ratio->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "ratio table over several N");
  sweep->add_option("symbol", symbol_file, "symbol JSON file")->required();
  sweep->add_option("--N-list", n_list, "ascending matrix sizes")
      ->required()
      ->delimiter(',');
  add_spec_flags(sweep);
  add_quad_flags(sweep);
  sweep->add_option("--format", format, "csv|json");
  sweep->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (format != "csv" && format != "json")
      throw CliFailure{2, "--format must be csv or json"};
    const Method method = parse_method(method_name_flag);
    if (coeffs->parsed()) return cmd_coeffs(symbol_file, n_min, n_max, format, out_path);
    if (factorize_cmd->parsed())
      return cmd_factorize(symbol_file, grid, format, out_path);
    if (ratio->parsed())
      return cmd_ratio(symbol_file, n_size, flags, config, method, out_path);
    if (sweep->parsed())
      return cmd_sweep(symbol_file, n_list, flags, config, method, format, out_path);
  } catch (const CliFailure& f) {
    std::fprintf(stderr, "lactoep: %s\n", f.message.c_str());
    return f.exit_code;
  } catch (const lactoep::error& e) {
    std::fprintf(stderr, "lactoep: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "lactoep: %s\n", e.what());
    return 1;
  }
  return 0;
}
