#pragma once

#include <random>
#include <utility>

#include "apsheat/spectral.hpp"

namespace apsheat {

// Universal constants of the small-time expansion, weight ordered.
inline constexpr double kC0 = -1.1283791670955125739;  // boundary weight-1/2 factor
inline constexpr double kC2 = 0.5;                     // boundary operator symmetrization
inline constexpr double kC3 = 0.5;                     // mean curvature coupling
inline constexpr double kC4 = -0.5;                    // endomorphism symmetrization
inline constexpr double kC5 = -0.5;                    // covector-side endomorphism

struct CoefficientResult {
  int n = 0;
  cx value = 0;
  cx interior = 0;
  std::array<cx, 2> boundary{{0, 0}};
};

// Coefficient of t^{n/2} in the content expansion under the spectral
// boundary condition, n in {0,1,2}. Exact in the fields' polynomial data up
// to radial quadrature.
CoefficientResult beta_spectral(int n, const Field& phi, const Field& rho, const DiracModel& md);

// Grading-split condition: Dirichlet rows Xi_plus u, Robin rows
// Xi_minus (inward derivative + S) u.
struct MixedBC {
  Mat Xi_plus;
  Mat Xi_minus;
  std::array<Mat, 2> S;
};

MixedBC mixed_bc(const DiracModel& md, const std::array<Mat, 2>& S);
// S_c = eps_c delta1 gamma0: the mixed condition matching the spectral one
// on interval-type models.
MixedBC equivalent_mixed_bc(const DiracModel& md);
MixedBC dirichlet_bc(const DiracModel& md);

CoefficientResult beta_mixed(int n, const Field& phi, const Field& rho, const DiracModel& md,
                             const MixedBC& bc);

// Weight-one boundary endomorphism of the n=2 coefficient; assembled so the
// curvature trace cancellation is explicit in exact arithmetic.
Mat weight_one_endo(const DiracModel& md, int component, const std::vector<int>& k);

// Covector-side boundary endomorphism transported back to the section side.
Mat psi_sharp_transport(const DiracModel& md, int component);

// |<P phi, rho> - <phi, P~ rho> - boundary pairing|: validates the Green
// normalization of the dual model.
double greens_defect(const Field& phi, const Field& rho, const DiracModel& md);

// Same for D = P^2 with its two boundary terms.
double greens_defect_D(const Field& phi, const Field& rho, const DiracModel& md);

// Defect of coefficient symmetry under swapping the pair and dualizing.
double symmetry_defect(int n, const Field& phi, const Field& rho, const DiracModel& md);

// |beta_2(phi,rho) + beta_0(D phi, rho)|; requires the spectral condition to
// hold for phi, else throws BoundaryIncompatible.
double recursion_defect(const Field& phi, const Field& rho, const DiracModel& md,
                        double bc_tol = 1e-9);

// Coefficient invariance under flip_sign.
double sign_flip_defect(int n, const Field& phi, const Field& rho, const DiracModel& md);

// Random pair (phi, rho) satisfying the spectral condition on both sides,
// built from Hermite data plus an interior double-zero bump.
std::pair<Field, Field> make_compatible_pair(const DiracModel& md, std::mt19937_64& rng,
                                             int bump_degree = 2);

}  // namespace apsheat
