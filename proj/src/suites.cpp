#include "apsheat/suites.hpp"

#include <cmath>
#include <random>

namespace apsheat {

namespace {

CheckResult check(const std::string& name, double defect, double tol) {
  return {name, defect, tol, defect <= tol};
}

// Uniform [-1,1] coefficients, all components, degree <= deg.
Field random_field(const DiracModel& md, const std::vector<std::vector<int>>& modes, int deg,
                   std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Field fld;
  fld.mode_dim = md.m - 1;
  for (const auto& k : modes) {
    std::vector<Vec> coeffs;
    for (int j = 0; j <= deg; ++j) {
      Vec v(md.ell);
      for (int i = 0; i < md.ell; ++i) v(i) = cx(u(rng), u(rng));
      coeffs.push_back(v);
    }
    fld.add(k, RadialFn::poly(VecPoly(std::move(coeffs))));
  }
  return fld;
}

std::vector<std::vector<int>> mode_set(int m) {
  if (m == 1) return {{}};
  if (m == 2) return {{0}, {1}, {-1}, {2}, {-2}};
  return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
}

// The covector boundary operator against the reflected transpose of the
// primal one. For m >= 2 the tangential connection supplies the curvature
// trace; the one-dimensional reductions store it explicitly.
double dual_transport_defect(const DiracModel& md, const std::vector<int>& k) {
  const DiracModel dm = dual_model(md);
  const Mat gt = md.gamma_r.transpose();
  double worst = 0;
  for (int c = 0; c < 2; ++c) {
    const Mat lhs = boundary_A(dm, c, k);
    Mat rhs = gt * boundary_A(md, c, negate_mode(k)).transpose() * gt;
    if (md.m == 1) rhs += md.comp(c).Laa * Mat::Identity(md.ell, md.ell);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    worst = std::max(worst, (sharp_A(md, c, k) - lhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

double projector_algebra_defect(const Mat& A, const Mat& g) {
  const SpectralProjector pp = pos_projector(A);
  const Mat& P = pp.P;
  double worst = (P * P - P).cwiseAbs().maxCoeff();
  worst = std::max(worst, (P * A - A * P).cwiseAbs().maxCoeff());
  // g A g is similar to -A since g^2 = -Id, so the reflection swaps the
  // spectral halves: (Id - P(gAg)) g = g P(A).
  const SpectralProjector qq = pos_projector(g * A * g);
  const Mat lhs = (Mat::Identity(A.rows(), A.cols()) - qq.P) * g;
  worst = std::max(worst, (lhs - g * P).cwiseAbs().maxCoeff());
  return worst;
}

double dual_involution_defect(const DiracModel& md) {
  const DiracModel dd = dual_model(dual_model(md));
  double worst = (dd.gamma_r - md.gamma_r).cwiseAbs().maxCoeff();
  for (int a = 0; a + 1 < md.m; ++a) {
    worst = std::max(worst, (dd.gamma_t[a] - md.gamma_t[a]).cwiseAbs().maxCoeff());
    const Mat dw = dd.omega[a].eval(0.37, md.ell) - md.omega[a].eval(0.37, md.ell);
    worst = std::max(worst, dw.cwiseAbs().maxCoeff());
  }
  worst = std::max(worst,
                   (dd.psi_P.eval(0.37, md.ell) - md.psi_P.eval(0.37, md.ell)).cwiseAbs().maxCoeff());
  for (int c = 0; c < 2; ++c)
    worst = std::max(worst, (dd.comp(c).psi_A - md.comp(c).psi_A).cwiseAbs().maxCoeff());
  worst = std::max(worst, std::abs((dd.divg - md.divg)(0.61)));
  return worst;
}

std::vector<DiracModel> reference_models() {
  const Poly bump({0.0, 0.4, -0.4});  // 0.4 r (1 - r)
  std::vector<DiracModel> out;
  out.push_back(assemble_flat_model(1, build_rep(1), 0.7, 1.0));
  // delta2 avoids |k| over the sampled integer modes so projectors stay regular.
  out.push_back(assemble_flat_model(2, build_rep(2), 0.5, 0.7, {0.3}));
  out.push_back(assemble_warped_model(2, build_rep(2), WarpProfile::make(bump), 0.7));
  out.push_back(assemble_warped_model(3, build_rep(3), WarpProfile::make(bump), 0.8));
  out.push_back(assemble_interval_model(build_rep(1), WarpProfile::make(bump), 1, 0.0, 1.0));
  return out;
}

const char* model_tag(size_t i) {
  static const char* tags[] = {"flat-m1", "twisted-m2", "warped-m2", "warped-m3", "interval"};
  return tags[i];
}

}  // namespace

std::vector<CheckResult> suite_algebra() {
  std::vector<CheckResult> out;

  for (int m = 1; m <= 4; ++m)
    out.push_back(
        check("clifford-relations-m" + std::to_string(m), relation_defect(build_rep(m)), 1e-13));

  const auto models = reference_models();
  for (size_t i = 0; i < models.size(); ++i) {
    const DiracModel& md = models[i];
    const std::string tag = model_tag(i);
    out.push_back(check("model-relations-" + tag, model_relation_defect(md), 1e-12));
    out.push_back(check("compatibility-" + tag, compatibility_defect(md), 1e-12));
    out.push_back(check("compatibility-dual-" + tag, compatibility_defect(dual_model(md)), 1e-12));
    out.push_back(check("dual-involution-" + tag, dual_involution_defect(md), 1e-13));

    double transport = 0;
    for (const auto& k : mode_set(md.m))
      transport = std::max(transport, dual_transport_defect(md, k));
    out.push_back(check("dual-transport-" + tag, transport, 1e-12));
  }

  // Projector algebra over a nondegenerate slice of boundary operators.
  double proj = 0;
  for (size_t i = 0; i < models.size(); ++i) {
    const DiracModel& md = models[i];
    for (const auto& k : mode_set(md.m)) {
      for (int c = 0; c < 2; ++c) {
        const Mat A = boundary_A(md, c, k);
        proj = std::max(proj, projector_algebra_defect(A, md.gamma_r));
      }
    }
  }
  out.push_back(check("projector-algebra", proj, 1e-11));

  return out;
}

std::vector<CheckResult> suite_identities() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(0x5eedu);

  const auto models = reference_models();
  for (size_t i = 0; i < models.size(); ++i) {
    const DiracModel& md = models[i];
    const std::string tag = model_tag(i);
    const auto modes = mode_set(md.m);

    const Field phi = random_field(md, modes, 3, rng);
    const Field rho = random_field(md, modes, 3, rng);
    out.push_back(check("greens-P-" + tag, greens_defect(phi, rho, md), 1e-10));
    out.push_back(check("greens-D-" + tag, greens_defect_D(phi, rho, md), 1e-10));

    for (int n = 0; n <= 2; ++n)
      out.push_back(check("symmetry-n" + std::to_string(n) + "-" + tag,
                          symmetry_defect(n, phi, rho, md), 1e-10));
    for (int n = 0; n <= 2; ++n)
      out.push_back(check("sign-flip-n" + std::to_string(n) + "-" + tag,
                          sign_flip_defect(n, phi, rho, md), 1e-10));

    auto [cphi, crho] = make_compatible_pair(md, rng);
    out.push_back(check("recursion-" + tag, recursion_defect(cphi, crho, md), 1e-9));
  }

  // Crossed-product lift rescales every coefficient by one circle volume.
  {
    const DiracModel md = models[0];
    const DiracModel up = lift_dimension(md);
    const Field phi = random_field(md, {{}}, 3, rng);
    const Field rho = random_field(md, {{}}, 3, rng);
    const Field phi_up = lift_field(phi);
    const Field rho_up = lift_field(rho);
    double worst = 0;
    for (int n = 0; n <= 2; ++n) {
      const cx base = beta_spectral(n, phi, rho, md).value;
      const cx lifted = beta_spectral(n, phi_up, rho_up, up).value;
      worst = std::max(worst, std::abs(lifted - 2.0 * kPi * base));
    }
    out.push_back(check("lift-flat-m1", worst, 1e-10));
  }

  return out;
}

std::vector<CheckResult> suite_constants() {
  std::vector<CheckResult> out;

  out.push_back(check("c0-gaussian-halfline", std::abs(kC0 + 2.0 / std::sqrt(kPi)), 1e-16));
  out.push_back(check("c2-symmetrization", std::abs(kC2 - 0.5), 0.0));
  out.push_back(check("c3-curvature", std::abs(kC3 - 0.5), 0.0));
  out.push_back(check("c4-endomorphism", std::abs(kC4 + 0.5), 0.0));
  out.push_back(check("c5-covector", std::abs(kC5 + 0.5), 0.0));

  // Warped radial modes: the weight-one endomorphism degenerates.
  {
    const Poly bump({0.0, 0.4, -0.4});
    double worst = 0;
    for (int m : {2, 3}) {
      const DiracModel md = assemble_warped_model(m, build_rep(m), WarpProfile::make(bump), 1.0);
      const std::vector<int> k0(static_cast<size_t>(m - 1), 0);
      for (int c = 0; c < 2; ++c)
        worst = std::max(worst, weight_one_endo(md, c, k0).cwiseAbs().maxCoeff());
    }
    out.push_back(check("warped-radial-degeneracy", worst, 1e-12));
  }

  // Twisted product: E(c,k) = -2i eps k_a Theta_m Theta_a + 2 eps delta1 gamma0.
  {
    const DiracModel md = assemble_flat_model(2, build_rep(2), 0.5, 1.0, {0.3});
    double worst = 0;
    for (int k : {-2, -1, 0, 1, 3}) {
      for (int c = 0; c < 2; ++c) {
        const double eps = md.comp(c).eps;
        const Mat expected = cx(0, -2.0 * eps * k) * (md.gamma_r * md.gamma_t[0]) +
                             2.0 * eps * md.delta1 * md.gamma0;
        const Mat got = weight_one_endo(md, c, {k});
        worst = std::max(worst, (got - expected).cwiseAbs().maxCoeff());
      }
    }
    out.push_back(check("twisted-endo-closed-form", worst, 1e-12));
  }

  // psi_A identities fixing the boundary normalization.
  {
    const Poly bump({0.0, 0.4, -0.4});
    const DiracModel wd = assemble_warped_model(2, build_rep(2), WarpProfile::make(bump), 1.0);
    double worst = 0;
    for (int c = 0; c < 2; ++c) {
      const Mat sum = wd.comp(c).psi_A + psi_sharp_transport(wd, c);
      const Mat expected = wd.comp(c).Laa * Mat::Identity(wd.ell, wd.ell) +
                           2.0 * wd.delta2 * wd.gamma0;
      worst = std::max(worst, (sum - expected).cwiseAbs().maxCoeff());
    }
    out.push_back(check("warped-psiA-transport", worst, 1e-13));

    const DiracModel td = assemble_flat_model(2, build_rep(2), 0.5, 1.0, {0.3});
    worst = 0;
    for (int c = 0; c < 2; ++c) {
      const double eps = td.comp(c).eps;
      const Mat sum = td.comp(c).psi_A + td.gamma_r * td.comp(c).psi_A * td.gamma_r;
      const Mat expected =
          2.0 * td.delta2 * td.gamma0 + 2.0 * eps * td.varrho[0] * (td.gamma_r * td.gamma_t[0]);
      worst = std::max(worst, (sum - expected).cwiseAbs().maxCoeff());
    }
    out.push_back(check("twisted-psiA-reflection", worst, 1e-13));

    worst = 0;
    const Mat comm = td.gamma_r * td.psi_P.eval(0.5, td.ell) - td.psi_P.eval(0.5, td.ell) * td.gamma_r;
    const Mat expected = -2.0 * td.delta1 * td.gamma0 - 2.0 * td.varrho[0] * (td.gamma_r * td.gamma_t[0]);
    worst = (comm - expected).cwiseAbs().maxCoeff();
    out.push_back(check("twisted-psiP-commutator", worst, 1e-13));
  }

  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Field lift_field(const Field& fld) {
  Field out;
  out.mode_dim = fld.mode_dim + 1;
  for (const auto& [k, fn] : fld.modes) {
    std::vector<int> key = k;
    key.push_back(0);
    RadialFn padded;
    for (const auto& [j, vp] : fn.parts) {
      std::vector<Vec> coeffs;
      coeffs.reserve(vp.coeffs().size());
      for (const Vec& v : vp.coeffs()) {
        Vec w = Vec::Zero(2 * v.size());
        w.head(v.size()) = v;
        coeffs.push_back(w);
      }
      padded.parts[j] = VecPoly(std::move(coeffs));
    }
    out.add(key, padded);
  }
  return out;
}

}  // namespace apsheat
