#pragma once

#include "apsheat/oracle.hpp"

namespace apsheat {

struct AsymptoticFit {
  std::vector<cx> b;  // coefficients of t^{n/2}, n = 0..n_max
  double residual = 0;
  double condition = 0;
  int points = 0;
};

// Least squares in the basis t^{n/2} over samples inside [w_lo, w_hi].
// Columns are equilibrated before solving; the reported condition number is
// that of the weighted, unequilibrated design. Throws IllConditioned above
// 1e12 and requires at least 12 points. Coefficients past n = 2 soak up the
// series tail and carry no accuracy guarantee.
AsymptoticFit fit_asymptotics(const HeatContentCurve& curve, int n_max = 5, double w_lo = 1e-5,
                              double w_hi = 1e-2, const std::vector<double>* weights = nullptr);

}  // namespace apsheat
