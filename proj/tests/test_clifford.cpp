#include "doctest.h"

#include <unsupported/Eigen/KroneckerProduct>

#include "apsheat/clifford.hpp"

using namespace apsheat;

namespace {

Mat pauli_x() {
  Mat p(2, 2);
  p << 0, 1, 1, 0;
  return p;
}
Mat pauli_y() {
  Mat p(2, 2);
  p << 0, cx(0, -1), cx(0, 1), 0;
  return p;
}
Mat pauli_z() {
  Mat p(2, 2);
  p << 1, 0, 0, -1;
  return p;
}

}  // namespace

TEST_CASE("two-generator representation matches the tensor construction") {
  const CliffordRep rep = build_rep(2);
  REQUIRE(rep.ell == 4);
  REQUIRE(rep.Theta.size() == 2);
  const Mat id2 = Mat::Identity(2, 2);
  const cx iu(0, 1);
  CHECK((rep.Theta[0] - iu * Eigen::kroneckerProduct(pauli_x(), id2)).cwiseAbs().maxCoeff() == 0);
  CHECK((rep.Theta[1] - iu * Eigen::kroneckerProduct(pauli_y(), id2)).cwiseAbs().maxCoeff() == 0);
  CHECK((rep.gamma0 - Eigen::kroneckerProduct(pauli_z(), pauli_z())).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("relations hold across fiber ranks") {
  for (int m : {1, 2, 3, 4, 5}) {
    const CliffordRep rep = build_rep(m);
    CAPTURE(m);
    CHECK(rep.ell == 1 << ((m + 2) / 2));
    CHECK(relation_defect(rep) <= 1e-15);
    for (const auto& t : rep.Theta) {
      CHECK((t * t + Mat::Identity(rep.ell, rep.ell)).cwiseAbs().maxCoeff() <= 1e-15);
    }
    CHECK((rep.gamma0 * rep.gamma0 - Mat::Identity(rep.ell, rep.ell)).cwiseAbs().maxCoeff() <=
          1e-15);
  }
}

TEST_CASE("defect detects a scaled generator") {
  CliffordRep rep = build_rep(2);
  rep.Theta[0] *= 1.01;
  // Anticommutator convention: 2 Theta_0^2 + 2 Id misses zero by 4.02e-2.
  CHECK(relation_defect(rep) > 0.0399);
  CHECK(relation_defect(rep) < 0.0406);
}

TEST_CASE("covector transport is the plain transpose") {
  Mat e(2, 2);
  e << cx(1, 2), cx(3, -1), cx(0, 4), cx(-2, 0);
  CHECK((dual_endo(e) - e.transpose()).cwiseAbs().maxCoeff() == 0);
}
