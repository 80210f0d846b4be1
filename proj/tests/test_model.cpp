#include "doctest.h"

#include <cmath>

#include "apsheat/model.hpp"

using namespace apsheat;

namespace {

WarpProfile bump(double scale) {
  // scale * r * (1 - r), vanishing at both ends.
  return WarpProfile::make(Poly({0.0, scale, -scale}));
}

}  // namespace

TEST_CASE("warp profiles must vanish at the endpoints") {
  CHECK_THROWS_AS(WarpProfile::make(Poly({0.1})), DimensionMismatch);
  CHECK_THROWS_AS(WarpProfile::make(Poly({0.0, 1.0})), DimensionMismatch);
  CHECK_NOTHROW(WarpProfile::make(Poly({0.0, 1.0, -1.0})));
  CHECK(WarpProfile::flat().trivial());
}

TEST_CASE("connection coefficients of the warped metric") {
  const auto rep = build_rep(2);
  const DiracModel md = assemble_warped_model(2, rep, bump(1.0), 0.7);

  // f = r(1-r): f'(0) = 1 and e^{2f(0)} = 1.
  auto g0 = christoffel(md, 0.0);
  CHECK(g0.Gamma_ma_b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g0.Gamma_ab_m == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(g0.lower_mab == doctest::Approx(1.0).epsilon(1e-15));

  // Critical point of f: every coefficient vanishes.
  auto gmid = christoffel(md, 0.5);
  CHECK(gmid.Gamma_ma_b == 0.0);
  CHECK(gmid.Gamma_ab_m == 0.0);

  auto gq = christoffel(md, 0.25);
  const double e2f = std::exp(2.0 * 0.1875);
  CHECK(gq.Gamma_ma_b == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gq.lower_mab == doctest::Approx(0.5 * e2f).epsilon(1e-14));
  CHECK(gq.Gamma_ab_m == doctest::Approx(-0.5 * e2f).epsilon(1e-14));

  const DiracModel flat = assemble_flat_model(2, rep, 0.3, 0.7);
  auto gf = christoffel(flat, 0.3);
  CHECK(gf.Gamma_ma_b == 0.0);
  CHECK(gf.lower_mab == 0.0);
}

TEST_CASE("boundary data of the warped cylinder") {
  const auto rep = build_rep(2);
  const DiracModel md = assemble_warped_model(2, rep, bump(0.4), 0.7);

  CHECK(md.comp(0).r == 0.0);
  CHECK(md.comp(0).eps == 1.0);
  CHECK(md.comp(1).r == 1.0);
  CHECK(md.comp(1).eps == -1.0);

  // Laa = sign * eps * (m-1) * f'(r_c) with f'(0) = 0.4, f'(1) = -0.4; the
  // default orientation gives -0.4 at both ends.
  CHECK(second_ff(md, 0) == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(second_ff(md, 1) == doctest::Approx(-0.4).epsilon(1e-15));

  const DiracModel flipped = assemble_warped_model(2, rep, bump(0.4), 0.7, +1);
  CHECK(second_ff(flipped, 0) == doctest::Approx(0.4).epsilon(1e-15));

  for (int c = 0; c < 2; ++c) {
    const Mat expect =
        0.7 * md.gamma0 + 0.5 * md.comp(c).Laa * Mat::Identity(md.ell, md.ell);
    CHECK((md.comp(c).psi_A - expect).cwiseAbs().maxCoeff() == 0.0);
  }

  // Boundary tori keep unit warp factor, so the weight is the flat volume.
  CHECK(boundary_weight(md, 0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(boundary_weight(md, 1) == doctest::Approx(2.0 * kPi).epsilon(1e-15));

  const DiracModel m3 = assemble_flat_model(3, build_rep(3), 0.2, 0.5);
  CHECK(boundary_weight(m3, 0) == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-14));
  CHECK(second_ff(m3, 0) == 0.0);
}

TEST_CASE("radial zero-order shift of the squared operator") {
  const auto rep2 = build_rep(2);
  const DiracModel warped = assemble_warped_model(2, rep2, bump(0.4), 0.7);
  const Mat id = Mat::Identity(warped.ell, warped.ell);
  // psi_P = -(1/2) f' gamma_r, so the shift is -(1/2) f' Id.
  CHECK((normal_shift(warped, 0.0) + 0.2 * id).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((normal_shift(warped, 0.5) - 0.0 * id).cwiseAbs().maxCoeff() <= 1e-15);

  // Flat chirality and twist terms anticommute with gamma_r; no shift.
  const DiracModel tw = assemble_flat_model(2, rep2, 0.5, 0.7, {0.3});
  CHECK(normal_shift(tw, 0.25).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("assembly guards") {
  CHECK_THROWS_AS(assemble_warped_model(1, build_rep(1), bump(0.4), 0.7), DimensionMismatch);
  CHECK_THROWS_AS(assemble_flat_model(3, build_rep(1), 0.0, 1.0), DimensionMismatch);
  CliffordRep broken = build_rep(2);
  broken.Theta[0] *= 1.5;
  CHECK_THROWS_AS(assemble_flat_model(2, broken, 0.0, 1.0), DimensionMismatch);
}

TEST_CASE("clifford compatibility of the assembled connections") {
  CHECK(compatibility_defect(assemble_flat_model(1, build_rep(1), 0.5, 1.0)) <= 1e-14);
  CHECK(compatibility_defect(assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3})) <= 1e-13);
  CHECK(compatibility_defect(assemble_warped_model(2, build_rep(2), bump(0.4), 0.7)) <= 1e-13);
  CHECK(compatibility_defect(assemble_warped_model(3, build_rep(3), bump(0.4), 0.8)) <= 1e-13);
}

TEST_CASE("sign flip is an involution that fixes boundary data") {
  const DiracModel md = assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3});
  const DiracModel fl = flip_sign(md);
  CHECK(fl.sign_flip == -1);
  CHECK((fl.gamma_r + md.gamma_r).cwiseAbs().maxCoeff() == 0.0);
  CHECK((fl.psi_P.eval(0.3, md.ell) + md.psi_P.eval(0.3, md.ell)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((fl.comp(0).psi_A - md.comp(0).psi_A).cwiseAbs().maxCoeff() == 0.0);
  CHECK(model_relation_defect(fl) <= 1e-14);

  const DiracModel back = flip_sign(fl);
  CHECK(back.sign_flip == 1);
  CHECK((back.gamma_r - md.gamma_r).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dimension lift doubles the fiber and keeps the relations") {
  const DiracModel md = assemble_warped_model(2, build_rep(2), bump(0.4), 0.7);
  const DiracModel lift = lift_dimension(md);
  CHECK(lift.m == 3);
  CHECK(lift.ell == 2 * md.ell);
  CHECK(model_relation_defect(lift) <= 1e-14);
  CHECK(relation_defect(lift.rep) <= 1e-14);
  CHECK(compatibility_defect(lift) <= 1e-13);
  CHECK(static_cast<int>(lift.gamma_t.size()) == lift.m - 1);
  CHECK(lift.warp_power.back() == 0);
  // One extra flat circle multiplies the boundary measure by 2 pi.
  CHECK(boundary_weight(lift, 0) ==
        doctest::Approx(2.0 * kPi * boundary_weight(md, 0)).epsilon(1e-14));
  CHECK(lift.comp(0).Laa == md.comp(0).Laa);
}

TEST_CASE("covector transport is involutive") {
  for (const DiracModel& md :
       {assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3}),
        assemble_warped_model(2, build_rep(2), bump(0.4), 0.7),
        assemble_interval_model(build_rep(1), bump(0.4), 1, 0.0, 1.0)}) {
    const DiracModel dd = dual_model(dual_model(md));
    CHECK(dd.dual_side == md.dual_side);
    CHECK((dd.gamma_r - md.gamma_r).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((dd.gamma0 - md.gamma0).cwiseAbs().maxCoeff() <= 1e-15);
    for (double r : {0.0, 0.3, 1.0}) {
      CHECK((dd.psi_P.eval(r, md.ell) - md.psi_P.eval(r, md.ell)).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK(std::abs((dd.divg - md.divg)(r)) <= 1e-14);
    }
    for (int c = 0; c < 2; ++c)
      CHECK((dd.comp(c).psi_A - md.comp(c).psi_A).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(compatibility_defect(dual_model(md)) <= 1e-13);
  }
}
