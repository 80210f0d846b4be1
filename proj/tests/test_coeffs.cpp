#include "doctest.h"

#include <cmath>
#include <random>

#include "apsheat/coeffs.hpp"

using namespace apsheat;

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125739;

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

Field const_field(int mode_dim, const std::vector<int>& k, int n, int i) {
  return Field::single(mode_dim, k, RadialFn::constant(unit(n, i)));
}

Field linear_field(int mode_dim, const std::vector<int>& k, int n, int i) {
  return Field::single(mode_dim, k, RadialFn::poly(VecPoly({Vec::Zero(n), unit(n, i)})));
}

}  // namespace

TEST_CASE("interval coefficients against hand values") {
  const double d1 = 0.5;
  const DiracModel md = assemble_flat_model(1, build_rep(1), d1, 1.0);
  const Field e0 = const_field(0, {}, 2, 0);
  const Field e1 = const_field(0, {}, 2, 1);

  SUBCASE("constant chirality-even pair") {
    const auto b0 = beta_spectral(0, e0, e0, md);
    const auto b1 = beta_spectral(1, e0, e0, md);
    const auto b2 = beta_spectral(2, e0, e0, md);
    CHECK(std::abs(b0.value - cx(1.0)) <= 1e-13);
    CHECK(std::abs(b1.value - cx(-2.0 * kTwoOverSqrtPi)) <= 1e-13);
    CHECK(std::abs(b2.value - cx(-d1 * d1)) <= 1e-13);
    CHECK(std::abs(b0.interior - cx(1.0)) <= 1e-14);
    CHECK(std::abs(b1.interior) <= 1e-15);
  }

  SUBCASE("linear section against a constant covector") {
    // phi = r e_0: interior mass 1/2, only the r=1 face sees a unit value.
    const auto b2 = beta_spectral(2, linear_field(0, {}, 2, 0), e0, md);
    CHECK(std::abs(b2.value - cx(-d1 * d1 / 2.0)) <= 1e-13);

    const auto c2 = beta_spectral(2, linear_field(0, {}, 2, 1), e1, md);
    CHECK(std::abs(c2.value - cx(d1 - d1 * d1 / 2.0)) <= 1e-13);
  }

  SUBCASE("odd components drop the half-power term") {
    // e_1 lies in the kernel of the positive projector on both faces.
    const auto b1 = beta_spectral(1, e1, e1, md);
    CHECK(std::abs(b1.value) <= 1e-14);
  }
}

TEST_CASE("coefficient splits sum to the value") {
  const DiracModel md = assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3});
  const Field phi = const_field(1, {0}, md.ell, 0);
  for (int n : {0, 1, 2}) {
    const auto b = beta_spectral(n, phi, phi, md);
    CHECK(std::abs(b.value - (b.interior + b.boundary[0] + b.boundary[1])) <= 1e-13);
  }
}

TEST_CASE("grading-split condition reproduces the spectral coefficients") {
  const DiracModel md = assemble_flat_model(1, build_rep(1), 0.5, 1.0);
  const MixedBC bc = equivalent_mixed_bc(md);
  const Field e0 = const_field(0, {}, 2, 0);
  const Field re1 = linear_field(0, {}, 2, 1);
  for (int n : {0, 1, 2}) {
    const auto sp = beta_spectral(n, e0, e0, md);
    const auto mx = beta_mixed(n, e0, e0, md, bc);
    CHECK(std::abs(sp.value - mx.value) <= 1e-12);
    const auto sp2 = beta_spectral(n, re1, e0, md);
    const auto mx2 = beta_mixed(n, re1, e0, md, bc);
    CHECK(std::abs(sp2.value - mx2.value) <= 1e-12);
  }
}

TEST_CASE("pure dirichlet rows give the classical half-power constant") {
  const DiracModel md = assemble_flat_model(1, build_rep(1), 0.0, 1.0);
  const MixedBC bc = dirichlet_bc(md);
  CHECK((bc.Xi_plus - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  const Field e0 = const_field(0, {}, 2, 0);
  const auto b1 = beta_mixed(1, e0, e0, md, bc);
  CHECK(std::abs(b1.value - cx(-2.0 * kTwoOverSqrtPi)) <= 1e-13);
  const auto b0 = beta_mixed(0, e0, e0, md, bc);
  CHECK(std::abs(b0.value - cx(1.0)) <= 1e-13);
}

TEST_CASE("green pairing closes for the dual model") {
  std::mt19937_64 rng(0xabcdef12u);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const DiracModel md = assemble_warped_model(2, build_rep(2), WarpProfile::make(Poly({0.0, 0.4, -0.4})), 0.7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec> pc, rc;
    for (int j = 0; j < 3; ++j) {
      Vec a(md.ell), b(md.ell);
      for (int i = 0; i < md.ell; ++i) {
        a(i) = cx(coef(rng), coef(rng));
        b(i) = cx(coef(rng), coef(rng));
      }
      pc.push_back(a);
      rc.push_back(b);
    }
    const Field phi = Field::single(1, {1}, RadialFn::poly(VecPoly(pc)));
    const Field rho = Field::single(1, {-1}, RadialFn::poly(VecPoly(rc)));
    CHECK(greens_defect(phi, rho, md) <= 1e-10);
    CHECK(greens_defect_D(phi, rho, md) <= 1e-10);
  }
}

TEST_CASE("symmetry, recursion, and sign invariance on random admissible pairs") {
  std::mt19937_64 rng(0x5eedc0deu);
  const DiracModel md = assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3});
  const auto [phi, rho] = make_compatible_pair(md, rng);
  for (int n : {0, 1, 2}) {
    CHECK(symmetry_defect(n, phi, rho, md) <= 1e-10);
    CHECK(sign_flip_defect(n, phi, rho, md) <= 1e-10);
  }
  CHECK(recursion_defect(phi, rho, md) <= 1e-9);

  // Fields violating the condition are rejected rather than misreported.
  const Field e0 = const_field(1, {0}, md.ell, 0);
  CHECK_THROWS_AS(recursion_defect(e0, e0, md), BoundaryIncompatible);
}

TEST_CASE("weight-one endomorphism fixtures") {
  // Twist slopes drop out: E = -2 i eps k gamma_r gamma_t + 2 eps delta1 gamma0.
  const DiracModel tw = assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3});
  for (int c = 0; c < 2; ++c) {
    const double eps = tw.comp(c).eps;
    for (int k : {0, 2}) {
      const Mat expect = cx(0, -2.0 * eps * k) * (tw.gamma_r * tw.gamma_t[0]) +
                         2.0 * eps * 0.5 * tw.gamma0;
      CHECK((weight_one_endo(tw, c, {k}) - expect).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }

  // Radial degeneracy of the warped cylinder at the stationary mode.
  const DiracModel wd =
      assemble_warped_model(2, build_rep(2), WarpProfile::make(Poly({0.0, 0.4, -0.4})), 0.7);
  CHECK(weight_one_endo(wd, 0, {0}).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(weight_one_endo(wd, 1, {0}).cwiseAbs().maxCoeff() <= 1e-12);
  // The warp factor is trivial on the boundary tori, so only the mode drives E.
  const Mat e1 = cx(0, -2.0) * (wd.gamma_r * wd.gamma_t[0]);
  CHECK((weight_one_endo(wd, 0, {1}) - e1).cwiseAbs().maxCoeff() <= 1e-12);

  // psi_A + transported sharp side = L Id + 2 delta2 gamma0.
  for (int c = 0; c < 2; ++c) {
    const Mat lhs = wd.comp(c).psi_A + psi_sharp_transport(wd, c);
    const Mat rhs = wd.comp(c).Laa * Mat::Identity(wd.ell, wd.ell) + 2.0 * 0.7 * wd.gamma0;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13);
  }
}
