#pragma once

#include <vector>

#include "apsheat/common.hpp"

namespace apsheat {

// Skew generators Theta_1..Theta_m with Theta_i Theta_j + Theta_j Theta_i =
// -2 delta_ij, together with a grading gamma0 satisfying gamma0^2 = Id and
// gamma0 Theta_i = -Theta_i gamma0.
struct CliffordRep {
  int m = 0;
  int ell = 0;
  std::vector<Mat> Theta;
  Mat gamma0;
};

// Tensor-product construction on ceil((m+1)/2) qubit factors; gamma0 comes out
// real diagonal. ell = 2^ceil((m+1)/2).
CliffordRep build_rep(int m);

// Endomorphism acting on transposed-column covectors: plain transpose, no
// conjugation (the pairing is bilinear).
Mat dual_endo(const Mat& e);

// Max entrywise violation over all anticommutators, gamma0^2 - Id, and the
// gamma0 anticommutation rows.
double relation_defect(const CliffordRep& rep);

}  // namespace apsheat
