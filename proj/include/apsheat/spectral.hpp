#pragma once

#include <array>

#include "apsheat/fields.hpp"

namespace apsheat {

// Boundary operator at component c for tangential mode k: the tangential
// part of P conjugated into the boundary frame plus psi_A. Its positive
// spectral subspace defines the boundary condition.
Mat boundary_A(const DiracModel& md, int component, const std::vector<int>& k);

// Operator governing the covector side at the same component: the boundary
// operator of the dual model. For m >= 2 it coincides with the reflected
// transpose of the primal operator at the mirrored mode.
Mat sharp_A(const DiracModel& md, int component, const std::vector<int>& k);

struct SpectralProjector {
  Mat P;
  double gap = 0;  // min |Re lambda| over the spectrum of the input
  int rank = 0;
};

// Projector onto the span of eigenvectors with Re lambda > 0 via the Newton
// sign iteration with determinant scaling. Throws ImaginaryAxisEigenvalue if
// the spectrum touches the strip |Re lambda| <= axis_tol, NonConvergence
// after 60 sweeps.
SpectralProjector pos_projector(const Mat& A, double axis_tol = 1e-8);

Field apply_P(const DiracModel& md, const Field& fld);
Field apply_P_dual(const DiracModel& md, const Field& fld);
Field apply_D(const DiracModel& md, const Field& fld);

// Residuals of the spectral boundary condition, one entry per component:
// worst mode violation of the value rows and of the derivative rows.
struct BoundaryResidual {
  std::array<double, 2> value{{0, 0}};
  std::array<double, 2> derivative{{0, 0}};
};
BoundaryResidual apply_B(const DiracModel& md, const Field& fld);

// Zero-order part of P in first-order form P = gamma_r d_r + T(r), per mode.
Mat zero_order(const DiracModel& md, const std::vector<int>& k, double r);
Mat zero_order_deriv(const DiracModel& md, const std::vector<int>& k, double r);

}  // namespace apsheat
