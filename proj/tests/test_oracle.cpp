#include "doctest.h"

#include <cmath>
#include <vector>

#include "apsheat/fit.hpp"
#include "apsheat/oracle.hpp"

using namespace apsheat;

namespace {

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

// Content of the unit interval under absorbing ends, unit initial data:
// sum over odd n of 8 / (n pi)^2 exp(-n^2 pi^2 t).
double dirichlet_series(double t) {
  double acc = 0;
  for (int n = 1; n < 2000; n += 2) {
    const double lam = n * n * kPi * kPi;
    acc += 8.0 / lam * std::exp(-lam * t);
  }
  return acc;
}

}  // namespace

TEST_CASE("evolution matches the separated dirichlet solution") {
  const DiracModel md = assemble_flat_model(1, build_rep(1), 0.0, 1.0);
  const Field e0 = Field::single(0, {}, RadialFn::constant(unit(2, 0)));
  const MixedBC bc = dirichlet_bc(md);
  TimeGrid tg;
  tg.t_min = 2e-4;
  tg.t_max = 4e-3;
  tg.samples = 16;

  const HeatContentCurve curve = solve_heat(md, e0, e0, 256, tg, OracleBC::Mixed, &bc);
  REQUIRE(curve.t.size() == curve.beta.size());
  CHECK(curve.t.front() == 0.0);
  CHECK(std::abs(curve.beta.front() - cx(1.0)) <= 1e-12);
  CHECK(curve.grid_n == 256);
  CHECK(curve.steps > 0);
  CHECK(curve.bc_kind == "mixed");

  for (size_t i = 1; i < curve.t.size(); ++i) {
    CHECK(curve.t[i] > curve.t[i - 1]);
    CHECK(std::abs(curve.beta[i] - cx(dirichlet_series(curve.t[i]))) <= 2e-4);
  }
}

TEST_CASE("spectral and equivalent grading-split runs coincide") {
  const DiracModel md = assemble_flat_model(1, build_rep(1), 0.5, 1.0);
  const Field e0 = Field::single(0, {}, RadialFn::constant(unit(2, 0)));
  const MixedBC bc = equivalent_mixed_bc(md);
  TimeGrid tg;
  tg.t_min = 1e-4;
  tg.t_max = 2e-3;
  tg.samples = 12;

  const auto sp = solve_heat(md, e0, e0, 128, tg, OracleBC::Spectral);
  const auto mx = solve_heat(md, e0, e0, 128, tg, OracleBC::Mixed, &bc);
  REQUIRE(sp.beta.size() == mx.beta.size());
  CHECK(sp.bc_kind == "spectral");
  for (size_t i = 0; i < sp.beta.size(); ++i)
    CHECK(std::abs(sp.beta[i] - mx.beta[i]) <= 1e-9);
}

TEST_CASE("input guards") {
  const DiracModel md = assemble_flat_model(1, build_rep(1), 0.5, 1.0);
  const Field e0 = Field::single(0, {}, RadialFn::constant(unit(2, 0)));
  TimeGrid tg;

  CHECK_THROWS_AS(solve_heat(md, e0, e0, 32, tg, OracleBC::Spectral), DimensionMismatch);
  CHECK_THROWS_AS(solve_heat(md, e0, e0, 128, tg, OracleBC::Mixed, nullptr), DimensionMismatch);

  // All-zero constraint rows cannot determine the boundary values.
  MixedBC degenerate;
  degenerate.Xi_plus = Mat::Zero(2, 2);
  degenerate.Xi_minus = Mat::Zero(2, 2);
  degenerate.S = {Mat::Zero(2, 2), Mat::Zero(2, 2)};
  CHECK_THROWS_AS(solve_heat(md, e0, e0, 128, tg, OracleBC::Mixed, &degenerate),
                  SingularConstraint);

  // Critical boundary operator: named mode in the error text. The partner
  // density must carry the mirrored mode or the pairing is empty.
  const DiracModel crit = assemble_flat_model(2, build_rep(2), 0.5, 1.0);
  const Field f0 = Field::single(1, {1}, RadialFn::constant(unit(4, 0)));
  const Field g0 = Field::single(1, {-1}, RadialFn::constant(unit(4, 0)));
  CHECK_THROWS_WITH_AS(solve_heat(crit, f0, g0, 64, tg, OracleBC::Spectral),
                       doctest::Contains("mode"), ImaginaryAxisEigenvalue);
}

TEST_CASE("half-power ladder is recovered from synthetic data") {
  HeatContentCurve curve;
  curve.t.push_back(0.0);
  curve.beta.push_back(cx(1.0));
  for (int i = 0; i < 30; ++i) {
    const double t = 1e-5 * std::pow(1e3, i / 29.0);
    curve.t.push_back(t);
    const double rt = std::sqrt(t);
    curve.beta.push_back(cx(1.0 + 2.0 * rt - 3.0 * t + 0.5 * rt * t));
  }

  const AsymptoticFit fit = fit_asymptotics(curve, 3, 1e-5, 1e-2);
  REQUIRE(fit.b.size() == 4);
  CHECK(std::abs(fit.b[0] - cx(1.0)) <= 1e-9);
  CHECK(std::abs(fit.b[1] - cx(2.0)) <= 1e-9);
  CHECK(std::abs(fit.b[2] - cx(-3.0)) <= 1e-9);
  CHECK(std::abs(fit.b[3] - cx(0.5)) <= 1e-9);
  CHECK(fit.residual <= 1e-10);
  CHECK(fit.points >= 12);
}

TEST_CASE("fit guards") {
  HeatContentCurve thin;
  thin.t = {0.0, 1e-4, 2e-4, 3e-4, 4e-4, 5e-4};
  thin.beta.assign(6, cx(1.0));
  CHECK_THROWS_AS(fit_asymptotics(thin, 3, 1e-5, 1e-2), DimensionMismatch);

  // Repeating one sample time many times degenerates the design matrix.
  HeatContentCurve dup;
  dup.t.push_back(0.0);
  dup.beta.push_back(cx(1.0));
  for (int i = 0; i < 20; ++i) {
    dup.t.push_back(5e-4);
    dup.beta.push_back(cx(1.0));
  }
  CHECK_THROWS_AS(fit_asymptotics(dup, 3, 1e-5, 1e-2), IllConditioned);
}
