#include "apsheat/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace apsheat {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_json(cx z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

HeatContentReport compare(const std::array<CoefficientResult, 3>& closed,
                          const AsymptoticFit& fit, const HeatContentCurve& curve,
                          const std::array<double, 3>& tols) {
  HeatContentReport report;
  report.closed = closed;
  report.fit = fit;
  report.grid_n = curve.grid_n;
  report.steps = curve.steps;
  report.bc_kind = curve.bc_kind;
  report.pass = true;
  for (int n = 0; n < 3; ++n) {
    CompareRow row;
    row.name = "beta" + std::to_string(n);
    row.closed = closed[static_cast<size_t>(n)].value;
    row.fitted = fit.b.at(static_cast<size_t>(n));
    row.rel_err =
        std::abs(row.fitted - row.closed) / std::max(1.0, std::abs(row.closed));
    row.tol = tols[static_cast<size_t>(n)];
    row.pass = row.rel_err <= row.tol;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::string report_json(const HeatContentReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["generated_at"] = timestamp_utc();
  ordered_json coeffs = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json entry;
    entry["name"] = row.name;
    entry["closed"] = complex_json(row.closed);
    entry["fitted"] = complex_json(row.fitted);
    entry["rel_err"] = row.rel_err;
    entry["tol"] = row.tol;
    entry["pass"] = row.pass;
    coeffs.push_back(entry);
  }
  j["coefficients"] = coeffs;
  j["fit"] = ordered_json{{"residual", report.fit.residual},
                          {"condition_number", report.fit.condition},
                          {"points", report.fit.points}};
  j["solver"] = ordered_json{{"grid_n", report.grid_n},
                             {"steps", report.steps},
                             {"boundary_condition", report.bc_kind}};
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string coefficients_json(const std::array<CoefficientResult, 3>& closed) {
  ordered_json j;
  j["schema_version"] = 1;
  j["generated_at"] = timestamp_utc();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : closed) {
    ordered_json entry;
    entry["n"] = c.n;
    entry["value"] = complex_json(c.value);
    entry["interior"] = complex_json(c.interior);
    entry["boundary"] = ordered_json::array(
        {complex_json(c.boundary[0]), complex_json(c.boundary[1])});
    coeffs.push_back(entry);
  }
  j["coefficients"] = coeffs;
  return j.dump(2) + "\n";
}

void write_csv(std::ostream& os, const HeatContentCurve& curve) {
  os << "t,beta_real,beta_imag\n";
  char buf[96];
  for (size_t i = 0; i < curve.t.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", curve.t[i],
                  curve.beta[i].real(), curve.beta[i].imag());
    os << buf;
  }
}

}  // namespace apsheat
