#pragma once

#include <string>
#include <vector>

#include "apsheat/closed.hpp"
#include "apsheat/coeffs.hpp"
#include "apsheat/oracle.hpp"

namespace apsheat {

enum class Regime { Flat, Twisted, Warped, Circle };

struct FieldSpec {
  std::vector<int> mode;           // tangential Fourier indices, length m-1
  int component = 0;               // fiber basis index, 0-based
  std::vector<double> poly{1.0};   // radial polynomial coefficients
  int exp_weight = 0;              // extra e^{exp_weight * f} factor
  int line = 0;
};

struct RunConfig {
  std::string path;

  Regime regime = Regime::Flat;
  int m = 1;
  double delta1 = 0;
  double delta2 = 0;
  std::vector<double> varrho;
  std::vector<double> warp;

  std::vector<FieldSpec> phi;
  std::vector<FieldSpec> rho;

  int grid_n = 512;
  double t_min = 1e-5;
  double t_max = 1e-2;
  int samples = 40;
  std::string bc = "spectral";  // spectral | mixed | dirichlet

  std::string format = "json";  // json | csv
};

// Parses and validates; every failure carries path and line.
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& path);

DiracModel model_from(const RunConfig& cfg);    // rejects circle
CircleModel circle_from(const RunConfig& cfg);  // requires circle
Field phi_from(const RunConfig& cfg);
Field rho_from(const RunConfig& cfg);
TimeGrid timegrid_from(const RunConfig& cfg);
MixedBC mixed_from(const RunConfig& cfg, const DiracModel& md);
OracleBC oracle_bc_from(const RunConfig& cfg);

// Expansion coefficients n = 0, 1, 2 under the configured condition.
std::array<CoefficientResult, 3> closed_coefficients(const RunConfig& cfg);

// Configured numerical curve; circle models evaluate the exact semigroup.
HeatContentCurve oracle_curve(const RunConfig& cfg, int grid_multiplier = 1);

}  // namespace apsheat
