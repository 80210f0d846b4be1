#include "apsheat/coeffs.hpp"

#include <Eigen/QR>
#include <string>

namespace apsheat {

namespace {

std::string mode_str(const std::vector<int>& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

Mat projector_at(const DiracModel& md, int c, const std::vector<int>& k, bool sharp_side) {
  const Mat A = sharp_side ? sharp_A(md, c, k) : boundary_A(md, c, k);
  try {
    return pos_projector(A).P;
  } catch (const ImaginaryAxisEigenvalue& e) {
    throw ImaginaryAxisEigenvalue("component " + std::to_string(c) + ", mode " + mode_str(k) +
                                  ": " + e.what());
  }
}

Vec field_at(const Field& f, const std::vector<int>& k, const DiracModel& md, double r) {
  const RadialFn* fn = f.find(k);
  return fn ? fn->eval(md.profile, r, md.ell) : Vec::Zero(md.ell).eval();
}

cx pair_against(const Vec& covec, const Vec& v) { return (covec.transpose() * v).value(); }

}  // namespace

CoefficientResult beta_spectral(int n, const Field& phi, const Field& rho, const DiracModel& md) {
  CoefficientResult out;
  out.n = n;
  if (n == 0) {
    out.interior = integrate_M(phi, rho, md);
  } else if (n == 1) {
    for (int c = 0; c < 2; ++c) {
      const double rc = md.comp(c).r;
      const double w = boundary_weight(md, c);
      cx acc = 0;
      for (const auto& [k, fk] : phi.modes) {
        const RadialFn* rk = rho.find(negate_mode(k));
        if (rk == nullptr) continue;
        const Mat proj = projector_at(md, c, k, false);
        const Mat proj_sharp = projector_at(md, c, negate_mode(k), true);
        acc += pair_against(proj_sharp * rk->eval(md.profile, rc, md.ell),
                            proj * fk.eval(md.profile, rc, md.ell));
      }
      out.boundary[c] = kC0 * w * acc;
    }
  } else if (n == 2) {
    out.interior = -integrate_M(apply_D(md, phi), rho, md);
    const Field p_phi = apply_P(md, phi);
    const Field pt_rho = apply_P_dual(md, rho);
    for (int c = 0; c < 2; ++c) {
      const auto& comp = md.comp(c);
      const double w = boundary_weight(md, c);
      cx acc = 0;
      for (const auto& [k, fk] : phi.modes) {
        const std::vector<int> km = negate_mode(k);
        const RadialFn* rk = rho.find(km);
        if (rk == nullptr) continue;
        const Mat proj = projector_at(md, c, k, false);
        const Mat proj_sharp = projector_at(md, c, km, true);
        const Vec rv = rk->eval(md.profile, comp.r, md.ell);
        const Vec fv = proj * fk.eval(md.profile, comp.r, md.ell);
        const Vec pfv = proj * field_at(p_phi, k, md, comp.r);
        const Vec prv = field_at(pt_rho, km, md, comp.r);
        const Mat endo = weight_one_endo(md, c, k);
        acc += -pair_against(rv, comp.eps * (md.gamma_r * pfv));
        acc += -pair_against(prv, comp.eps * (md.gamma_r * fv));
        acc += 0.5 * pair_against(proj_sharp * rv, endo * fv);
      }
      out.boundary[c] = w * acc;
    }
  } else {
    throw DimensionMismatch("coefficient index must be 0, 1 or 2");
  }
  out.value = out.interior + out.boundary[0] + out.boundary[1];
  return out;
}

MixedBC mixed_bc(const DiracModel& md, const std::array<Mat, 2>& S) {
  const Mat id = Mat::Identity(md.ell, md.ell);
  return MixedBC{0.5 * (id + md.gamma0), 0.5 * (id - md.gamma0), S};
}

MixedBC equivalent_mixed_bc(const DiracModel& md) {
  std::array<Mat, 2> S;
  for (int c = 0; c < 2; ++c) S[c] = md.comp(c).eps * md.delta1 * md.gamma0;
  return mixed_bc(md, S);
}

MixedBC dirichlet_bc(const DiracModel& md) {
  const Mat id = Mat::Identity(md.ell, md.ell);
  const Mat zero = Mat::Zero(md.ell, md.ell);
  return MixedBC{id, zero, {zero, zero}};
}

CoefficientResult beta_mixed(int n, const Field& phi, const Field& rho, const DiracModel& md,
                             const MixedBC& bc) {
  CoefficientResult out;
  out.n = n;
  if (n == 0) {
    out.interior = integrate_M(phi, rho, md);
  } else if (n == 1) {
    for (int c = 0; c < 2; ++c) {
      const double rc = md.comp(c).r;
      cx acc = 0;
      for (const auto& [k, fk] : phi.modes) {
        const RadialFn* rk = rho.find(negate_mode(k));
        if (rk == nullptr) continue;
        acc += pair_against(rk->eval(md.profile, rc, md.ell),
                            bc.Xi_plus * fk.eval(md.profile, rc, md.ell));
      }
      out.boundary[c] = kC0 * boundary_weight(md, c) * acc;
    }
  } else if (n == 2) {
    out.interior = -integrate_M(apply_D(md, phi), rho, md);
    for (int c = 0; c < 2; ++c) {
      const auto& comp = md.comp(c);
      const double w = boundary_weight(md, c);
      const Mat wd = normal_shift(md, comp.r);
      cx acc = 0;
      for (const auto& [k, fk] : phi.modes) {
        const RadialFn* rk = rho.find(negate_mode(k));
        if (rk == nullptr) continue;
        const Vec u = fk.eval(md.profile, comp.r, md.ell);
        const Vec du = deriv(fk, md.profile).eval(md.profile, comp.r, md.ell);
        const Vec rv = rk->eval(md.profile, comp.r, md.ell);
        const Vec drv = deriv(*rk, md.profile).eval(md.profile, comp.r, md.ell);
        acc += pair_against(rv, bc.Xi_minus * (comp.eps * (du + wd * u) + bc.S[c] * u));
        acc += 0.5 * comp.Laa * pair_against(rv, bc.Xi_plus * u);
        acc -= pair_against(comp.eps * (drv - wd.transpose() * rv), bc.Xi_plus * u);
      }
      out.boundary[c] = w * acc;
    }
  } else {
    throw DimensionMismatch("coefficient index must be 0, 1 or 2");
  }
  out.value = out.interior + out.boundary[0] + out.boundary[1];
  return out;
}

Mat weight_one_endo(const DiracModel& md, int component, const std::vector<int>& k) {
  const auto& comp = md.comp(component);
  const Mat A = boundary_A(md, component, k);
  const Mat& g = md.gamma_r;
  const Mat psi = md.psi_P.eval(comp.r, md.ell);
  const Mat& pa = comp.psi_A;
  return A + g * A * g + comp.eps * (psi * g - g * psi) - pa - g * pa * g;
}

Mat psi_sharp_transport(const DiracModel& md, int component) {
  const auto& comp = md.comp(component);
  return md.gamma_r * comp.psi_A * md.gamma_r +
         comp.Laa * Mat::Identity(md.ell, md.ell);
}

double greens_defect(const Field& phi, const Field& rho, const DiracModel& md) {
  const cx lhs = integrate_M(apply_P(md, phi), rho, md) -
                 integrate_M(phi, apply_P_dual(md, rho), md);
  cx bdry = 0;
  for (int c = 0; c < 2; ++c) {
    const auto& comp = md.comp(c);
    for (const auto& [k, fk] : phi.modes) {
      const RadialFn* rk = rho.find(negate_mode(k));
      if (rk == nullptr) continue;
      bdry += comp.eps * boundary_weight(md, c) *
              pair_against(rk->eval(md.profile, comp.r, md.ell),
                           md.gamma_r * fk.eval(md.profile, comp.r, md.ell));
    }
  }
  return std::abs(lhs + bdry);
}

double greens_defect_D(const Field& phi, const Field& rho, const DiracModel& md) {
  const DiracModel dual = dual_model(md);
  const Field p_phi = apply_P(md, phi);
  const Field pt_rho = apply_P(dual, rho);
  const cx lhs = integrate_M(apply_D(md, phi), rho, md) -
                 integrate_M(phi, apply_D(dual, rho), md);
  cx bdry = 0;
  for (int c = 0; c < 2; ++c) {
    const auto& comp = md.comp(c);
    for (const auto& [k, fk] : phi.modes) {
      const std::vector<int> km = negate_mode(k);
      if (rho.find(km) == nullptr && pt_rho.find(km) == nullptr) continue;
      const cx term1 = pair_against(field_at(rho, km, md, comp.r),
                                    md.gamma_r * field_at(p_phi, k, md, comp.r));
      const cx term2 = pair_against(field_at(pt_rho, km, md, comp.r),
                                    md.gamma_r * fk.eval(md.profile, comp.r, md.ell));
      bdry += comp.eps * boundary_weight(md, c) * (term1 + term2);
    }
  }
  return std::abs(lhs + bdry);
}

double symmetry_defect(int n, const Field& phi, const Field& rho, const DiracModel& md) {
  const cx lhs = beta_spectral(n, phi, rho, md).value;
  const cx rhs = beta_spectral(n, rho, phi, dual_model(md)).value;
  return std::abs(lhs - rhs);
}

double recursion_defect(const Field& phi, const Field& rho, const DiracModel& md, double bc_tol) {
  const BoundaryResidual res = apply_B(md, phi);
  for (int c = 0; c < 2; ++c)
    if (res.value[c] > bc_tol || res.derivative[c] > bc_tol)
      throw BoundaryIncompatible("field violates the spectral condition at component " +
                                 std::to_string(c));
  const cx b2 = beta_spectral(2, phi, rho, md).value;
  const cx b0 = beta_spectral(0, apply_D(md, phi), rho, md).value;
  return std::abs(b2 + b0);
}

double sign_flip_defect(int n, const Field& phi, const Field& rho, const DiracModel& md) {
  const cx a = beta_spectral(n, phi, rho, md).value;
  const cx b = beta_spectral(n, phi, rho, flip_sign(md)).value;
  return std::abs(a - b);
}

std::pair<Field, Field> make_compatible_pair(const DiracModel& md, std::mt19937_64& rng,
                                             int bump_degree) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto rand_vec = [&](int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cx(unit(rng), unit(rng));
    return v;
  };

  const std::vector<int> k(md.m - 1, 0);
  const int n = md.ell;

  auto build_side = [&](const DiracModel& side, const std::vector<int>& mode) {
    // Boundary data: value in the non-positive subspace, derivative solving
    // the projected first-order condition.
    std::array<Vec, 2> val, der;
    for (int c = 0; c < 2; ++c) {
      const Mat proj = pos_projector(boundary_A(side, c, mode)).P;
      const Mat id = Mat::Identity(n, n);
      val[c] = (id - proj) * rand_vec(n);
      const Mat t0 = zero_order(side, mode, side.comp(c).r);
      const Mat lhs = proj * side.gamma_r;
      der[c] = Eigen::CompleteOrthogonalDecomposition<Mat>(lhs).solve((-proj * t0 * val[c]).eval());
    }
    // Hermite cubic matching both value and derivative rows.
    std::vector<Vec> coeffs(4, Vec::Zero(n));
    coeffs[0] = val[0];
    coeffs[1] = der[0];
    coeffs[2] = -3.0 * val[0] - 2.0 * der[0] + 3.0 * val[1] - der[1];
    coeffs[3] = 2.0 * val[0] + der[0] - 2.0 * val[1] + der[1];
    VecPoly base(std::move(coeffs));
    // Interior bump with double zeros at both ends.
    std::vector<Vec> bump_coeffs;
    for (int j = 0; j <= bump_degree; ++j) bump_coeffs.push_back(rand_vec(n));
    const Poly window({0, 0, 1, -2, 1});  // r^2 (1-r)^2
    VecPoly bump = window * VecPoly(std::move(bump_coeffs));
    return Field::single(side.m - 1, mode, RadialFn::poly(base + bump));
  };

  Field phi = build_side(md, k);
  Field rho = build_side(dual_model(md), negate_mode(k));
  return {phi, rho};
}

}  // namespace apsheat
