#include "apsheat/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "apsheat/config.hpp"
#include "apsheat/report.hpp"
#include "apsheat/suites.hpp"

namespace apsheat {

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMathDomain = 3;

int grid_multiplier(const std::string& text) {
  if (text == "1x") return 1;
  if (text == "2x") return 2;
  if (text == "4x") return 4;
  throw ConfigError("--grid must be one of 1x, 2x, 4x");
}

std::string fmt_cx(cx z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

int cmd_coeffs(const std::string& config_path, bool as_json) {
  const RunConfig cfg = load_config(config_path);
  const auto triple = closed_coefficients(cfg);
  if (as_json || cfg.format == "json") {
    std::cout << coefficients_json(triple);
  } else {
    for (const auto& c : triple)
      std::cout << "beta" << c.n << " = " << fmt_cx(c.value) << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& csv_path,
                 const std::string& grid) {
  const RunConfig cfg = load_config(config_path);
  const int mult = grid_multiplier(grid);
  const HeatContentCurve curve = oracle_curve(cfg, mult);
  if (csv_path == "-") {
    write_csv(std::cout, curve);
    return kExitOk;
  }
  std::ofstream out(csv_path);
  if (!out) throw ConfigError("cannot open output file " + csv_path);
  write_csv(out, curve);
  std::cout << "wrote " << curve.t.size() << " rows to " << csv_path << " (grid_n="
            << curve.grid_n << ", steps=" << curve.steps << ")\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  std::vector<std::pair<std::string, std::vector<CheckResult>>> groups;
  if (suite == "algebra" || suite == "all") groups.emplace_back("algebra", suite_algebra());
  if (suite == "identities" || suite == "all")
    groups.emplace_back("identities", suite_identities());
  if (suite == "constants" || suite == "all") groups.emplace_back("constants", suite_constants());
  if (groups.empty()) throw ConfigError("--suite must be algebra, identities, constants, or all");

  bool ok = true;
  for (const auto& [name, checks] : groups) {
    for (const auto& c : checks) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-10s %-34s defect=%-12.3e tol=%-9.1e %s\n", name.c_str(),
                    c.name.c_str(), c.defect, c.tol, c.pass ? "PASS" : "FAIL");
      std::cout << buf;
      ok = ok && c.pass;
    }
  }
  std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kExitOk : kExitVerification;
}

int cmd_compare(const std::string& config_path, bool as_json, const std::string& grid) {
  const RunConfig cfg = load_config(config_path);
  const int mult = grid_multiplier(grid);
  const auto triple = closed_coefficients(cfg);
  const HeatContentCurve curve = oracle_curve(cfg, mult);
  const AsymptoticFit fit = fit_asymptotics(curve, 5, cfg.t_min, cfg.t_max);
  const HeatContentReport report = compare(triple, fit, curve);
  if (as_json || cfg.format == "json") {
    std::cout << report_json(report);
  } else {
    for (const auto& row : report.rows) {
      char buf[200];
      std::snprintf(buf, sizeof(buf), "%-6s closed=%-24s fitted=%-24s rel_err=%-10.2e tol=%-8.0e %s\n",
                    row.name.c_str(), fmt_cx(row.closed).c_str(), fmt_cx(row.fitted).c_str(),
                    row.rel_err, row.tol, row.pass ? "PASS" : "FAIL");
      std::cout << buf;
    }
    std::cout << (report.pass ? "agreement within tolerance\n" : "MISMATCH beyond tolerance\n");
  }
  return report.pass ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Heat content asymptotics for first-order boundary systems"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path, csv_path = "-", grid = "1x", suite = "all";
  bool as_json = false;

  CLI::App* coeffs = app.add_subcommand("coeffs", "Closed-form expansion coefficients");
  coeffs->add_option("config", config_path, "model + fields description file")->required();
  coeffs->add_flag("--json", as_json, "emit JSON regardless of configured format");

  CLI::App* simulate = app.add_subcommand("simulate", "Numerical heat content curve");
  simulate->add_option("config", config_path, "model + fields description file")->required();
  simulate->add_option("--csv", csv_path, "output path, - for stdout");
  simulate->add_option("--grid", grid, "spatial refinement: 1x, 2x, 4x");

  CLI::App* verify = app.add_subcommand("verify", "Internal identity suites");
  verify->add_option("--suite", suite, "algebra, identities, constants, all");

  CLI::App* cmp = app.add_subcommand("compare", "Closed form against the numerical curve");
  cmp->add_option("config", config_path, "model + fields description file")->required();
  cmp->add_flag("--json", as_json, "emit JSON regardless of configured format");
  cmp->add_option("--grid", grid, "spatial refinement: 1x, 2x, 4x");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(config_path, as_json);
    if (simulate->parsed()) return cmd_simulate(config_path, csv_path, grid);
    if (verify->parsed()) return cmd_verify(suite);
    if (cmp->parsed()) return cmd_compare(config_path, as_json, grid);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "math domain error: " << e.what() << "\n";
    return kExitMathDomain;
  }
  return kExitConfig;
}

}  // namespace apsheat
