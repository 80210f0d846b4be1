#include "apsheat/oracle.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace apsheat {

namespace {

// Composite Simpson weights on n_nodes equispaced points (spacing h); odd
// interval counts close with the 3/8 rule on the final three cells.
std::vector<double> simpson_weights(int n_nodes, double h) {
  const int intervals = n_nodes - 1;
  std::vector<double> w(n_nodes, 0.0);
  int simpson_end = intervals;  // node index where pure Simpson coverage stops
  if (intervals % 2 != 0) simpson_end = intervals - 3;
  for (int i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (intervals % 2 != 0) {
    const double c = 3.0 * h / 8.0;
    w[simpson_end] += c;
    w[simpson_end + 1] += 3.0 * c;
    w[simpson_end + 2] += 3.0 * c;
    w[simpson_end + 3] += c;
  }
  return w;
}

// Sorted union of the step ladder and the sample times.
std::vector<double> time_grid(const TimeGrid& tg, const std::vector<double>& samples) {
  std::vector<double> pts = samples;
  const double dt0 = tg.t_min / 50.0;
  double t = 0, dt = dt0;
  while (t < tg.t_max * (1.0 - 1e-12)) {
    t += dt;
    if (t < tg.t_max * (1.0 - 1e-12)) pts.push_back(t);
    dt *= tg.ratio;
  }
  pts.push_back(tg.t_max);
  std::sort(pts.begin(), pts.end());
  std::vector<double> out{0.0};
  for (double v : pts)
    if (v - out.back() > 1e-14 * tg.t_max) out.push_back(v);
  return out;
}

struct GhostFold {
  Mat K;  // boundary value = K * (4 u_inner1 - u_inner2)
};

// Eliminates the boundary node from the constraint rows
//   Q_val u_b = 0,  Q_der u_b' + Q_pt u_b = 0
// with the one-sided second-order derivative stencil. `side` is +1 at r=0
// (forward stencil) and -1 at r=1 (backward stencil).
GhostFold fold_boundary(const Mat& q_val, const Mat& q_der, const Mat& q_pt, double h,
                        double side) {
  const int n = static_cast<int>(q_val.rows());
  Mat system(2 * n, n), rhs(2 * n, n);
  system.topRows(n) = q_val;
  system.bottomRows(n) = q_pt - side * (3.0 / (2.0 * h)) * q_der;
  rhs.topRows(n).setZero();
  rhs.bottomRows(n) = -side * q_der / (2.0 * h);
  Eigen::ColPivHouseholderQR<Mat> qr(system);
  qr.setThreshold(1e-10);
  if (qr.rank() < n)
    throw SingularConstraint("boundary rows do not determine the boundary value");
  return GhostFold{qr.solve(rhs)};
}

struct ModeSystem {
  std::vector<Mat> sub, diag, sup;  // interior blocks of the spatial operator
  GhostFold fold0, fold1;
  std::vector<Vec> u;       // interior values
  std::vector<Vec> rho_at;  // covector values at all nodes 0..N+1
  std::vector<double> dens;
};

// Block tridiagonal solve, overwriting rhs with the solution.
void thomas_solve(std::vector<Mat> diag, std::vector<Mat> sup, const std::vector<Mat>& sub,
                  std::vector<Vec>& rhs) {
  const size_t n = diag.size();
  for (size_t i = 1; i < n; ++i) {
    const Mat m = sub[i] * diag[i - 1].inverse();
    diag[i] -= m * sup[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] = diag[n - 1].inverse() * rhs[n - 1];
  for (int i = static_cast<int>(n) - 2; i >= 0; --i)
    rhs[i] = diag[i].inverse() * (rhs[i] - sup[i] * rhs[i + 1]);
}

}  // namespace

HeatContentCurve solve_heat(const DiracModel& md, const Field& phi, const Field& rho, int grid_n,
                            const TimeGrid& tg, OracleBC kind, const MixedBC* mixed) {
  if (grid_n < 64) throw DimensionMismatch("need at least 64 interior grid points");
  if (kind == OracleBC::Mixed && mixed == nullptr)
    throw DimensionMismatch("mixed run without condition data");
  const int n = md.ell;
  const int N = grid_n;
  const double h = 1.0 / (N + 1);

  std::vector<double> samples(tg.samples);
  for (int i = 0; i < tg.samples; ++i) {
    const double s = tg.samples == 1 ? 0.0 : static_cast<double>(i) / (tg.samples - 1);
    samples[i] = tg.t_min * std::pow(tg.t_max / tg.t_min, s);
  }
  const std::vector<double> grid = time_grid(tg, samples);

  const std::vector<double> wq = simpson_weights(N + 2, h);
  const double mode_vol = std::pow(2.0 * kPi, md.m - 1);

  // Assemble one spatial system per active mode.
  std::vector<ModeSystem> systems;
  for (const auto& [k, fk] : phi.modes) {
    const RadialFn* rk = rho.find(negate_mode(k));
    if (rk == nullptr || fk.is_zero() || rk->is_zero()) continue;

    ModeSystem ms;
    ms.sub.resize(N);
    ms.diag.resize(N);
    ms.sup.resize(N);
    ms.u.resize(N);
    ms.rho_at.resize(N + 2);
    ms.dens.resize(N + 2);
    for (int i = 0; i <= N + 1; ++i) {
      const double r = i * h;
      ms.rho_at[i] = rk->eval(md.profile, r, n);
      ms.dens[i] = std::exp(md.density_power * md.profile.f(r));
    }
    for (int i = 1; i <= N; ++i) {
      const double r = i * h;
      const Mat t0 = zero_order(md, k, r);
      const Mat b = md.gamma_r * t0 + t0 * md.gamma_r;
      const Mat c = md.gamma_r * zero_order_deriv(md, k, r) + t0 * t0;
      const Mat id = Mat::Identity(n, n);
      ms.sub[i - 1] = -id / (h * h) - b / (2.0 * h);
      ms.diag[i - 1] = 2.0 * id / (h * h) + c;
      ms.sup[i - 1] = -id / (h * h) + b / (2.0 * h);
      ms.u[i - 1] = fk.eval(md.profile, r, n);
    }

    for (int c = 0; c < 2; ++c) {
      std::string where = "component " + std::to_string(c) + ", mode (";
      for (size_t a = 0; a < k.size(); ++a) where += (a ? "," : "") + std::to_string(k[a]);
      where += ")";
      Mat q_val, q_der, q_pt;
      if (kind == OracleBC::Spectral) {
        SpectralProjector proj;
        try {
          proj = pos_projector(boundary_A(md, c, k));
        } catch (const ImaginaryAxisEigenvalue& e) {
          throw ImaginaryAxisEigenvalue(std::string(e.what()) + " at " + where);
        }
        if (2 * proj.rank != n)
          throw SingularConstraint("spectral subspace does not split the fiber in half at " +
                                   where);
        q_val = proj.P;
        q_der = proj.P * md.gamma_r;
        q_pt = proj.P * zero_order(md, k, md.comp(c).r);
      } else {
        q_val = mixed->Xi_plus;
        q_der = md.comp(c).eps * mixed->Xi_minus;
        q_pt = mixed->Xi_minus *
               (md.comp(c).eps * normal_shift(md, md.comp(c).r) + mixed->S[c]);
      }
      GhostFold fold;
      try {
        fold = fold_boundary(q_val, q_der, q_pt, h, c == 0 ? +1.0 : -1.0);
      } catch (const SingularConstraint& e) {
        throw SingularConstraint(std::string(e.what()) + " at " + where);
      }
      if (c == 0)
        ms.fold0 = std::move(fold);
      else
        ms.fold1 = std::move(fold);
    }

    // Fold the reconstructed boundary values into the corner rows.
    const Mat edge0 = ms.sub[0];
    ms.diag[0] += edge0 * (4.0 * ms.fold0.K);
    ms.sup[0] += edge0 * (-1.0 * ms.fold0.K);
    const Mat edge1 = ms.sup[N - 1];
    ms.diag[N - 1] += edge1 * (4.0 * ms.fold1.K);
    ms.sub[N - 1] += edge1 * (-1.0 * ms.fold1.K);

    systems.push_back(std::move(ms));
  }

  auto content = [&](const ModeSystem& ms) -> cx {
    const Vec u0 = ms.fold0.K * (4.0 * ms.u[0] - ms.u[1]);
    const Vec u1 = ms.fold1.K * (4.0 * ms.u[N - 1] - ms.u[N - 2]);
    cx acc = (ms.rho_at[0].transpose() * u0).value() * wq[0] * ms.dens[0];
    for (int i = 1; i <= N; ++i)
      acc += (ms.rho_at[i].transpose() * ms.u[i - 1]).value() * wq[i] * ms.dens[i];
    acc += (ms.rho_at[N + 1].transpose() * u1).value() * wq[N + 1] * ms.dens[N + 1];
    return mode_vol * acc;
  };

  // The t=0 row pairs the raw initial data, boundary nodes included.
  auto content_initial = [&]() -> cx {
    cx acc = 0;
    for (const auto& [k, fk] : phi.modes) {
      const RadialFn* rk = rho.find(negate_mode(k));
      if (rk == nullptr || fk.is_zero() || rk->is_zero()) continue;
      for (int i = 0; i <= N + 1; ++i) {
        const double r = i * h;
        acc += mode_vol * wq[i] * std::exp(md.density_power * md.profile.f(r)) *
               (rk->eval(md.profile, r, n).transpose() * fk.eval(md.profile, r, n)).value();
      }
    }
    return acc;
  };

  HeatContentCurve curve;
  curve.grid_n = N;
  curve.dt0 = tg.t_min / 50.0;
  curve.bc_kind = kind == OracleBC::Spectral ? "spectral" : "mixed";
  curve.t.push_back(0.0);
  curve.beta.push_back(content_initial());

  size_t next_sample = 0;
  std::vector<Vec> rhs(N);
  std::vector<Mat> ldiag(N), lsup(N), lsub(N);
  for (size_t step = 1; step < grid.size(); ++step) {
    const double dt = grid[step] - grid[step - 1];
    const bool damped = static_cast<int>(step) <= tg.startup;
    for (auto& ms : systems) {
      const double lw = damped ? dt : 0.5 * dt;   // implicit weight
      const double rw = damped ? 0.0 : -0.5 * dt;  // explicit weight
      const Mat id = Mat::Identity(n, n);
      for (int i = 0; i < N; ++i) {
        ldiag[i] = id + lw * ms.diag[i];
        lsup[i] = lw * ms.sup[i];
        lsub[i] = lw * ms.sub[i];
      }
      if (damped) {
        for (int i = 0; i < N; ++i) rhs[i] = ms.u[i];
      } else {
        for (int i = 0; i < N; ++i) {
          Vec v = ms.u[i] + rw * (ms.diag[i] * ms.u[i]);
          if (i > 0) v += rw * (ms.sub[i] * ms.u[i - 1]);
          if (i + 1 < N) v += rw * (ms.sup[i] * ms.u[i + 1]);
          rhs[i] = v;
        }
      }
      thomas_solve(ldiag, lsup, lsub, rhs);
      for (int i = 0; i < N; ++i) ms.u[i] = rhs[i];
    }
    ++curve.steps;

    while (next_sample < samples.size() &&
           std::abs(grid[step] - samples[next_sample]) <= 1e-12 * tg.t_max) {
      cx total = 0;
      for (const auto& ms : systems) total += content(ms);
      curve.t.push_back(samples[next_sample]);
      curve.beta.push_back(total);
      ++next_sample;
    }
  }
  return curve;
}

}  // namespace apsheat
