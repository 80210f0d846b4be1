#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apsheat/config.hpp"
#include "apsheat/report.hpp"
#include "apsheat/suites.hpp"

namespace py = pybind11;

namespace {

using namespace apsheat;

py::dict coeff_dict(const CoefficientResult& c) {
  py::dict d;
  d["n"] = c.n;
  d["value"] = c.value;
  d["interior"] = c.interior;
  d["boundary"] = py::make_tuple(c.boundary[0], c.boundary[1]);
  return d;
}

py::list py_coefficients(const std::string& path) {
  const RunConfig cfg = load_config(path);
  py::list out;
  for (const auto& c : closed_coefficients(cfg)) out.append(coeff_dict(c));
  return out;
}

py::dict py_simulate(const std::string& path, int grid_multiplier) {
  const RunConfig cfg = load_config(path);
  const HeatContentCurve curve = oracle_curve(cfg, grid_multiplier);
  py::dict d;
  d["t"] = curve.t;
  d["beta"] = curve.beta;
  d["grid_n"] = curve.grid_n;
  d["steps"] = curve.steps;
  d["bc_kind"] = curve.bc_kind;
  return d;
}

py::dict py_compare(const std::string& path, int grid_multiplier) {
  const RunConfig cfg = load_config(path);
  const auto triple = closed_coefficients(cfg);
  const HeatContentCurve curve = oracle_curve(cfg, grid_multiplier);
  const AsymptoticFit fit = fit_asymptotics(curve, 5, cfg.t_min, cfg.t_max);
  const HeatContentReport report = compare(triple, fit, curve);
  py::dict d;
  py::list rows;
  for (const auto& row : report.rows) {
    py::dict r;
    r["name"] = row.name;
    r["closed"] = row.closed;
    r["fitted"] = row.fitted;
    r["rel_err"] = row.rel_err;
    r["tol"] = row.tol;
    r["pass"] = row.pass;
    rows.append(r);
  }
  d["coefficients"] = rows;
  d["pass"] = report.pass;
  d["residual"] = report.fit.residual;
  d["condition_number"] = report.fit.condition;
  d["grid_n"] = report.grid_n;
  return d;
}

py::list py_verify(const std::string& suite) {
  std::vector<CheckResult> checks;
  auto extend = [&checks](const std::vector<CheckResult>& more) {
    checks.insert(checks.end(), more.begin(), more.end());
  };
  if (suite == "algebra" || suite == "all") extend(suite_algebra());
  if (suite == "identities" || suite == "all") extend(suite_identities());
  if (suite == "constants" || suite == "all") extend(suite_constants());
  if (checks.empty()) throw ConfigError("suite must be algebra, identities, constants, or all");
  py::list out;
  for (const auto& c : checks) {
    py::dict d;
    d["name"] = c.name;
    d["defect"] = c.defect;
    d["tol"] = c.tol;
    d["pass"] = c.pass;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form heat content coefficients with a numerical cross-check";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("coefficients", &py_coefficients, py::arg("config_path"),
        "Expansion coefficients beta_0..beta_2 for the configured model");
  m.def("simulate", &py_simulate, py::arg("config_path"), py::arg("grid_multiplier") = 1,
        "Numerical heat content curve: dict with t, beta, solver metadata");
  m.def("compare", &py_compare, py::arg("config_path"), py::arg("grid_multiplier") = 1,
        "Closed form against the fitted numerical curve");
  m.def("verify", &py_verify, py::arg("suite") = "all",
        "Run an internal identity suite; returns one record per check");
  m.def("version", [] { return "0.1.0"; });
}
