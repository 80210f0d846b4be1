#pragma once

#include <vector>

#include "apsheat/fields.hpp"

namespace apsheat {

// Boundaryless circle of circumference 2 pi: every expansion coefficient of
// odd weight vanishes and the even ones come from powers of the mode
// Laplacian. Serves as the exactly solvable cross-check.
struct CircleModel {
  int ell = 2;
  Mat Theta;
  Mat gamma0;
  double delta1 = 0;
};

CircleModel make_circle(double delta1);
CircleModel make_circle(const CliffordRep& rep, double delta1);

Mat circle_P(const CircleModel& cm, int k);
Mat circle_D(const CircleModel& cm, int k);

// Coefficient of t^{n/2}; zero for odd n. Fields hold one-integer modes with
// position-independent profiles.
cx beta_closed(int n, const Field& phi, const Field& rho, const CircleModel& cm);

// Exact content curve via the matrix exponential, one entry per time.
std::vector<cx> closed_curve(const CircleModel& cm, const Field& phi, const Field& rho,
                             const std::vector<double>& times);

}  // namespace apsheat
