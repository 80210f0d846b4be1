#include "apsheat/model.hpp"

#include <cmath>

namespace apsheat {

namespace {

void require_rep(const CliffordRep& rep, int m) {
  if (rep.m < m) throw DimensionMismatch("representation has too few generators");
  if (relation_defect(rep) > 1e-10) throw DimensionMismatch("invalid Clifford relations");
}

std::array<BoundaryComponent, 2> make_components() {
  std::array<BoundaryComponent, 2> comps;
  comps[0].r = 0.0;
  comps[0].eps = +1.0;
  comps[1].r = 1.0;
  comps[1].eps = -1.0;
  return comps;
}

}  // namespace

WarpProfile WarpProfile::make(const Poly& f) {
  if (std::abs(f(0.0)) > 1e-14 || std::abs(f(1.0)) > 1e-14)
    throw DimensionMismatch("warp profile must vanish at both endpoints");
  return {f, f.deriv()};
}

DiracModel assemble_flat_model(int m, const CliffordRep& rep, double delta1, double delta2,
                               std::vector<double> varrho) {
  require_rep(rep, m);
  varrho.resize(m - 1, 0.0);
  DiracModel md;
  md.m = m;
  md.ell = rep.ell;
  md.kind = ConnectionKind::FlatTwisted;
  md.profile = WarpProfile::flat();
  md.delta1 = delta1;
  md.delta2 = delta2;
  md.varrho = varrho;
  md.rep = rep;
  md.gamma_r = rep.Theta[m - 1];
  md.gamma_t.assign(rep.Theta.begin(), rep.Theta.begin() + (m - 1));
  md.gamma0 = rep.gamma0;
  md.warp_power.assign(m - 1, 0);
  md.density_power = 0;

  const int n = md.ell;
  Mat psi = delta1 * (md.gamma_r * md.gamma0);
  for (int a = 0; a < m - 1; ++a) {
    md.omega.push_back(MatrixPoly::constant(varrho[a] * Mat::Identity(n, n)));
    psi -= varrho[a] * md.gamma_t[a];
  }
  md.psi_P = MatrixPoly::constant(psi);

  md.boundary = make_components();
  for (auto& comp : md.boundary) {
    Mat psi_a = delta2 * md.gamma0;
    for (int a = 0; a < m - 1; ++a) psi_a += comp.eps * varrho[a] * (md.gamma_r * md.gamma_t[a]);
    comp.psi_A = psi_a;
    comp.Laa = 0.0;
  }
  return md;
}

DiracModel assemble_warped_model(int m, const CliffordRep& rep, const WarpProfile& profile,
                                 double delta2, int laa_sign) {
  if (m < 2) throw DimensionMismatch("warped model needs at least one tangential direction");
  require_rep(rep, m);
  DiracModel md;
  md.m = m;
  md.ell = rep.ell;
  md.kind = ConnectionKind::Warped;
  md.profile = profile;
  md.delta2 = delta2;
  md.varrho.assign(m - 1, 0.0);
  md.rep = rep;
  md.gamma_r = rep.Theta[m - 1];
  md.gamma_t.assign(rep.Theta.begin(), rep.Theta.begin() + (m - 1));
  md.gamma0 = rep.gamma0;
  md.warp_power.assign(m - 1, 1);
  md.density_power = m - 1;

  for (int a = 0; a < m - 1; ++a)
    md.omega.push_back(MatrixPoly::scaled(profile.df * 0.5, md.gamma_r * md.gamma_t[a]));
  md.psi_P = MatrixPoly::scaled(profile.df * (-0.5 * (m - 1)), md.gamma_r);

  md.boundary = make_components();
  const int n = md.ell;
  for (auto& comp : md.boundary) {
    comp.Laa = laa_sign * comp.eps * (m - 1) * profile.df(comp.r);
    comp.psi_A = delta2 * md.gamma0 + 0.5 * comp.Laa * Mat::Identity(n, n);
  }
  return md;
}

DiracModel assemble_interval_model(const CliffordRep& rep, const WarpProfile& profile,
                                   int density_power, double delta1, double delta2,
                                   int laa_sign) {
  require_rep(rep, 1);
  DiracModel md;
  md.m = 1;
  md.ell = rep.ell;
  md.kind = profile.trivial() ? ConnectionKind::FlatTwisted : ConnectionKind::Warped;
  md.profile = profile;
  md.delta1 = delta1;
  md.delta2 = delta2;
  md.rep = rep;
  md.gamma_r = rep.Theta[0];
  md.gamma0 = rep.gamma0;
  md.density_power = density_power;

  md.psi_P = MatrixPoly::scaled(profile.df * (-0.5 * density_power), md.gamma_r) +
             MatrixPoly::constant(delta1 * (md.gamma_r * md.gamma0));

  md.boundary = make_components();
  const int n = md.ell;
  for (auto& comp : md.boundary) {
    comp.Laa = laa_sign * comp.eps * density_power * profile.df(comp.r);
    comp.psi_A = delta2 * md.gamma0 + 0.5 * comp.Laa * Mat::Identity(n, n);
  }
  return md;
}

DiracModel dual_model(const DiracModel& md) {
  DiracModel d = md;
  d.dual_side = !md.dual_side;
  d.gamma_r = (-md.gamma_r.transpose()).eval();
  for (auto& g : d.gamma_t) g = (-g.transpose()).eval();
  d.gamma0 = md.gamma0.transpose();
  d.rep.gamma0 = d.gamma0;
  for (auto& t : d.rep.Theta) t = (-t.transpose()).eval();

  // Metric dual connection; the endomorphism absorbs the difference between
  // -omega^T and the formal transpose of the full zero-order part, keeping
  // the total operator equal to the Green dual of P.
  d.omega.clear();
  MatrixPoly psi = md.psi_P.transpose();
  for (size_t a = 0; a < md.omega.size(); ++a) {
    d.omega.push_back(md.omega[a].transpose() * cx(-1.0));
    const Mat& ga = md.gamma_t[a];
    MatrixPoly shift = (ga * md.omega[a] * ga).transpose() + md.omega[a].transpose();
    psi = psi + d.gamma_t[a] * shift;
  }
  d.psi_P = psi;

  d.divg = Poly::constant(static_cast<double>(md.density_power)) * md.profile.df - md.divg;

  for (int c = 0; c < 2; ++c) {
    const Mat gt = md.gamma_r.transpose();
    d.boundary[c].psi_A =
        gt * md.boundary[c].psi_A.transpose() * gt +
        md.boundary[c].Laa * Mat::Identity(md.ell, md.ell);
  }
  return d;
}

DiracModel flip_sign(DiracModel md) {
  md.sign_flip = -md.sign_flip;
  md.gamma_r = (-md.gamma_r).eval();
  for (auto& g : md.gamma_t) g = (-g).eval();
  for (auto& t : md.rep.Theta) t = (-t).eval();
  md.psi_P = md.psi_P * cx(-1.0);
  return md;
}

DiracModel lift_dimension(const DiracModel& md) {
  const int n = md.ell;
  auto dbl = [n](const Mat& a, double s) {
    Mat b = Mat::Zero(2 * n, 2 * n);
    b.topLeftCorner(n, n) = a;
    b.bottomRightCorner(n, n) = s * a;
    return b;
  };
  auto dbl_poly = [&](const MatrixPoly& p, double s) {
    std::vector<Mat> c;
    for (const auto& mcoef : p.coeffs()) c.push_back(dbl(mcoef, s));
    return MatrixPoly(std::move(c));
  };

  DiracModel lift = md;
  lift.m = md.m + 1;
  lift.ell = 2 * n;
  lift.gamma_r = dbl(md.gamma_r, -1.0);
  lift.gamma0 = dbl(md.gamma0, -1.0);
  lift.gamma_t.clear();
  for (const auto& g : md.gamma_t) lift.gamma_t.push_back(dbl(g, -1.0));
  Mat fresh = Mat::Zero(2 * n, 2 * n);
  fresh.topRightCorner(n, n) = -Mat::Identity(n, n);
  fresh.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  lift.gamma_t.push_back(fresh);

  lift.omega.clear();
  for (const auto& w : md.omega) lift.omega.push_back(dbl_poly(w, 1.0));
  lift.omega.push_back(MatrixPoly::zero());
  lift.psi_P = dbl_poly(md.psi_P, -1.0);

  lift.warp_power = md.warp_power;
  lift.warp_power.push_back(0);
  lift.varrho = md.varrho;
  lift.varrho.push_back(0.0);

  lift.rep.m = lift.m;
  lift.rep.ell = lift.ell;
  lift.rep.Theta.clear();
  for (const auto& t : md.rep.Theta) lift.rep.Theta.push_back(dbl(t, -1.0));
  lift.rep.Theta.push_back(fresh);
  // Radial generator stays last in the rep ordering.
  if (lift.rep.Theta.size() >= 2)
    std::swap(lift.rep.Theta[lift.rep.Theta.size() - 1], lift.rep.Theta[lift.rep.Theta.size() - 2]);
  lift.rep.gamma0 = lift.gamma0;

  for (int c = 0; c < 2; ++c) lift.boundary[c].psi_A = dbl(md.boundary[c].psi_A, 1.0);
  return lift;
}

ChristoffelData christoffel(const DiracModel& md, double r) {
  ChristoffelData out;
  if (md.kind != ConnectionKind::Warped || md.m < 2) return out;
  const double df = md.profile.df(r);
  const double e2f = std::exp(2.0 * md.profile.f(r));
  out.Gamma_ma_b = df;
  out.Gamma_ab_m = -e2f * df;
  out.lower_mab = e2f * df;
  return out;
}

double second_ff(const DiracModel& md, int component) { return md.comp(component).Laa; }

double compatibility_defect(const DiracModel& md) {
  const int n = md.ell;
  double worst = 0;
  auto note = [&](const Mat& m) { worst = std::max(worst, m.cwiseAbs().maxCoeff()); };
  for (int s = 0; s < 10; ++s) {
    const double r = 0.5 - 0.5 * std::cos(kPi * (2.0 * s + 1.0) / 20.0);
    const double df = md.profile.df(r);
    for (size_t a = 0; a < md.gamma_t.size(); ++a) {
      const Mat wa = md.omega[a].eval(r, n);
      const double warp = md.warp_power[a] * df;
      // gamma(e_m) derivative along e_a against the structure term.
      note(wa * md.gamma_r - md.gamma_r * wa - warp * md.gamma_t[a]);
      for (size_t b = 0; b < md.gamma_t.size(); ++b) {
        const Mat wb = md.omega[b].eval(r, n);
        Mat defect = wb * md.gamma_t[a] - md.gamma_t[a] * wb;
        if (a == b) defect += warp * md.gamma_r;
        note(defect);
      }
    }
  }
  return worst;
}

Mat normal_shift(const DiracModel& md, double r) {
  const Mat psi = md.psi_P.eval(r, md.ell);
  return (-0.5 * (md.gamma_r * psi + psi * md.gamma_r)).eval();
}

double boundary_weight(const DiracModel& md, int component) {
  const auto& comp = md.comp(component);
  return std::pow(2.0 * kPi, md.m - 1) * std::exp(md.density_power * md.profile.f(comp.r));
}

double model_relation_defect(const DiracModel& md) {
  CliffordRep sys;
  sys.m = md.m;
  sys.ell = md.ell;
  sys.Theta = md.gamma_t;
  sys.Theta.push_back(md.gamma_r);
  sys.gamma0 = md.gamma0;
  return relation_defect(sys);
}

}  // namespace apsheat
