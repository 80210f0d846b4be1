#pragma once

#include <string>

#include "apsheat/coeffs.hpp"

namespace apsheat {

// Sample window and step ladder for the initial-value solver. Steps grow
// geometrically from t_min/50; the first `startup` intervals use the damped
// first-order scheme to absorb rough initial data.
struct TimeGrid {
  double t_min = 1e-5;
  double t_max = 1e-2;
  int samples = 40;
  double ratio = 1.012;
  int startup = 2;
};

struct HeatContentCurve {
  std::vector<double> t;  // first entry is 0
  std::vector<cx> beta;
  int grid_n = 0;
  int steps = 0;
  double dt0 = 0;
  std::string bc_kind;
};

enum class OracleBC { Spectral, Mixed };

// Finite-difference evolution of u_t = -D u with u(0) = phi, paired against
// rho at the sample times. grid_n >= 64 interior points; boundary values are
// reconstructed from the one-sided second-order constraint rows.
HeatContentCurve solve_heat(const DiracModel& md, const Field& phi, const Field& rho, int grid_n,
                            const TimeGrid& tg, OracleBC kind, const MixedBC* mixed = nullptr);

}  // namespace apsheat
