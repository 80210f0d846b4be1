#pragma once

#include <array>
#include <vector>

#include "apsheat/clifford.hpp"
#include "apsheat/poly.hpp"

namespace apsheat {

// Orientation of the second fundamental form relative to the inward normal.
inline constexpr int kLaaSign = -1;

// Warp profile on [0,1]; both endpoint values must vanish so the boundary
// tori keep unit volume normalization.
struct WarpProfile {
  Poly f;
  Poly df;

  static WarpProfile flat() { return {}; }
  static WarpProfile make(const Poly& f);
  bool trivial() const { return f.is_zero(); }
};

struct BoundaryComponent {
  double r = 0;    // location, 0 or 1
  double eps = 1;  // inward normal is eps * d_r
  double Laa = 0;  // trace of the second fundamental form
  Mat psi_A;       // endomorphism completing the boundary operator
};

enum class ConnectionKind { FlatTwisted, Warped };

// Operator data for P = gamma_m (d_r + divg) + sum_a gamma_a (e^{-w_a f} d_a
// + omega_a) + psi_P on the cylinder T^{m-1} x [0,1], with volume density
// e^{density_power * f}.
struct DiracModel {
  int m = 1;
  int ell = 2;
  ConnectionKind kind = ConnectionKind::FlatTwisted;
  WarpProfile profile;
  double delta1 = 0;
  double delta2 = 0;
  std::vector<double> varrho;  // flat-model twist slopes, one per direction
  int sign_flip = +1;          // bookkeeping only; see flip_sign
  bool dual_side = false;

  CliffordRep rep;
  Mat gamma_r;
  std::vector<Mat> gamma_t;
  Mat gamma0;
  std::vector<MatrixPoly> omega;  // connection coefficient along e_a
  MatrixPoly psi_P;
  std::vector<int> warp_power;  // frame factor e^{-warp_power[a] * f} along e_a
  int density_power = 0;
  Poly divg;  // radial zero-order shift, nonzero only on the dual side

  std::array<BoundaryComponent, 2> boundary;

  const BoundaryComponent& comp(int c) const { return boundary.at(c); }
};

// Product cylinder with twist slopes varrho and endomorphism parameters
// delta1 (interior chirality term) and delta2 (boundary chirality term).
DiracModel assemble_flat_model(int m, const CliffordRep& rep, double delta1, double delta2,
                               std::vector<double> varrho = {});

// Warped product metric dr^2 + e^{2f} dtheta^2 with the compatible Clifford
// connection; requires m >= 2 and forces delta1 = 0.
DiracModel assemble_warped_model(int m, const CliffordRep& rep, const WarpProfile& profile,
                                 double delta2, int laa_sign = kLaaSign);

// One-dimensional reduction: interval with an abstract volume density
// e^{density_power * f}. Admits both delta1 and a warp profile.
DiracModel assemble_interval_model(const CliffordRep& rep, const WarpProfile& profile,
                                   int density_power, double delta1, double delta2,
                                   int laa_sign = kLaaSign);

// Operator acting on transposed-column covector fields, normalized so the
// Green pairing against the primal model closes. Involutive.
DiracModel dual_model(const DiracModel& md);

// Negates every gamma and psi_P; boundary data is untouched. All heat
// coefficients are invariant under this.
DiracModel flip_sign(DiracModel md);

// Crossed-product extension by one flat circle direction; rank doubles.
// Coefficients of lifted fields pick up one factor of the circle volume.
DiracModel lift_dimension(const DiracModel& md);

// Warped-product connection coefficients. Diagonal in the tangential
// indices: Gamma_ma_b is the (a=b) value of Gamma_{ma}{}^b, Gamma_ab_m the
// (a=b) value of Gamma_{ab}{}^m; all-lower Gamma_{mab} = Gamma_{amb} =
// -Gamma_{abm} = lower_mab.
struct ChristoffelData {
  double Gamma_ma_b = 0;
  double Gamma_ab_m = 0;
  double lower_mab = 0;
};
ChristoffelData christoffel(const DiracModel& md, double r);

double second_ff(const DiracModel& md, int component);

// Max violation of covariant constancy of the Clifford map over the four
// index groups, sampled at 10 Chebyshev points of (0,1).
double compatibility_defect(const DiracModel& md);

// Natural radial connection coefficient of D = P^2 acting on V, evaluated
// pointwise: -(gamma_m psi_P + psi_P gamma_m)/2.
Mat normal_shift(const DiracModel& md, double r);

// (2 pi)^(m-1) e^{density_power f(r_c)}: measure of the boundary component.
double boundary_weight(const DiracModel& md, int component);

// Validates Clifford relations of the model's gamma system.
double model_relation_defect(const DiracModel& md);

}  // namespace apsheat
