#include "apsheat/closed.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "apsheat/clifford.hpp"

namespace apsheat {

CircleModel make_circle(double delta1) { return make_circle(build_rep(1), delta1); }

CircleModel make_circle(const CliffordRep& rep, double delta1) {
  if (relation_defect(rep) > 1e-10) throw DimensionMismatch("invalid Clifford relations");
  return CircleModel{rep.ell, rep.Theta[0], rep.gamma0, delta1};
}

Mat circle_P(const CircleModel& cm, int k) {
  return cx(0, k) * cm.Theta + cm.delta1 * (cm.Theta * cm.gamma0);
}

Mat circle_D(const CircleModel& cm, int k) {
  const Mat p = circle_P(cm, k);
  return (p * p).eval();
}

namespace {

const WarpProfile kNoWarp{};

cx mode_sum(const Field& phi, const Field& rho, const CircleModel& cm,
            const std::function<Mat(int)>& op) {
  cx acc = 0;
  for (const auto& [k, fk] : phi.modes) {
    const RadialFn* rk = rho.find(negate_mode(k));
    if (rk == nullptr) continue;
    const Vec u = fk.eval(kNoWarp, 0.0, cm.ell);
    const Vec v = rk->eval(kNoWarp, 0.0, cm.ell);
    acc += (v.transpose() * op(k.at(0)) * u).value();
  }
  return 2.0 * kPi * acc;
}

}  // namespace

cx beta_closed(int n, const Field& phi, const Field& rho, const CircleModel& cm) {
  if (n < 0) throw DimensionMismatch("negative coefficient index");
  if (n % 2 == 1) return 0;
  const int j = n / 2;
  double fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  const double scale = (j % 2 ? -1.0 : 1.0) / fact;
  return scale * mode_sum(phi, rho, cm, [&](int k) {
    Mat acc = Mat::Identity(cm.ell, cm.ell);
    const Mat d = circle_D(cm, k);
    for (int i = 0; i < j; ++i) acc = (acc * d).eval();
    return acc;
  });
}

std::vector<cx> closed_curve(const CircleModel& cm, const Field& phi, const Field& rho,
                             const std::vector<double>& times) {
  std::vector<cx> out;
  out.reserve(times.size());
  for (double t : times)
    out.push_back(mode_sum(phi, rho, cm, [&](int k) -> Mat {
      return (-t * circle_D(cm, k)).exp();
    }));
  return out;
}

}  // namespace apsheat
