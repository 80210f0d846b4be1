#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "apsheat/fit.hpp"

namespace apsheat {

struct CompareRow {
  std::string name;
  cx closed = 0;
  cx fitted = 0;
  double rel_err = 0;
  double tol = 0;
  bool pass = false;
};

struct HeatContentReport {
  std::array<CoefficientResult, 3> closed;
  AsymptoticFit fit;
  std::vector<CompareRow> rows;
  bool pass = false;
  int grid_n = 0;
  int steps = 0;
  std::string bc_kind;
};

inline constexpr std::array<double, 3> kDefaultTols{1e-3, 1e-2, 2e-2};

// Per-coefficient verdicts with relative error |b_n - beta_n| / max(1,
// |beta_n|).
HeatContentReport compare(const std::array<CoefficientResult, 3>& closed,
                          const AsymptoticFit& fit, const HeatContentCurve& curve,
                          const std::array<double, 3>& tols = kDefaultTols);

// Deterministic JSON apart from the generated_at stamp.
std::string report_json(const HeatContentReport& report);
std::string coefficients_json(const std::array<CoefficientResult, 3>& closed);

// Columns: t, beta_real, beta_imag.
void write_csv(std::ostream& os, const HeatContentCurve& curve);

}  // namespace apsheat
