#include "apsheat/fields.hpp"

#include <cmath>

#include "apsheat/quadrature.hpp"

namespace apsheat {

bool RadialFn::is_zero() const {
  for (const auto& [j, p] : parts)
    if (!p.is_zero()) return false;
  return true;
}

int RadialFn::dim() const {
  for (const auto& [j, p] : parts)
    if (!p.is_zero()) return p.size();
  return 0;
}

Vec RadialFn::eval(const WarpProfile& profile, double r, int n) const {
  Vec v = Vec::Zero(n);
  const double fr = profile.f(r);
  for (const auto& [j, p] : parts) v += std::exp(j * fr) * p.eval(r, n);
  return v;
}

RadialFn RadialFn::constant(const Vec& v) { return poly(VecPoly::constant(v)); }

RadialFn RadialFn::poly(const VecPoly& p) {
  RadialFn f;
  if (!p.is_zero()) f.parts.emplace(0, p);
  return f;
}

RadialFn operator+(const RadialFn& a, const RadialFn& b) {
  RadialFn out = a;
  for (const auto& [j, p] : b.parts) {
    auto it = out.parts.find(j);
    if (it == out.parts.end())
      out.parts.emplace(j, p);
    else
      it->second = it->second + p;
  }
  return out;
}

RadialFn operator*(cx s, const RadialFn& a) {
  RadialFn out;
  for (const auto& [j, p] : a.parts) out.parts.emplace(j, p * s);
  return out;
}

RadialFn operator*(const Mat& m, const RadialFn& a) {
  RadialFn out;
  for (const auto& [j, p] : a.parts) out.parts.emplace(j, m * p);
  return out;
}

RadialFn operator*(const MatrixPoly& m, const RadialFn& a) {
  RadialFn out;
  for (const auto& [j, p] : a.parts) out.parts.emplace(j, m * p);
  return out;
}

RadialFn exp_shift(const RadialFn& a, int add) {
  RadialFn out;
  for (const auto& [j, p] : a.parts) out.parts.emplace(j + add, p);
  return out;
}

RadialFn deriv(const RadialFn& a, const WarpProfile& profile) {
  RadialFn out;
  for (const auto& [j, p] : a.parts) {
    VecPoly dp = p.deriv() + (profile.df * static_cast<double>(j)) * p;
    if (!dp.is_zero()) {
      auto it = out.parts.find(j);
      if (it == out.parts.end())
        out.parts.emplace(j, dp);
      else
        it->second = it->second + dp;
    }
  }
  return out;
}

Field Field::single(int mode_dim, const std::vector<int>& k, RadialFn fn) {
  Field f;
  f.mode_dim = mode_dim;
  f.add(k, fn);
  return f;
}

Field& Field::add(const std::vector<int>& k, const RadialFn& fn) {
  if (static_cast<int>(k.size()) != mode_dim) throw DimensionMismatch("mode index size mismatch");
  auto it = modes.find(k);
  if (it == modes.end())
    modes.emplace(k, fn);
  else
    it->second = it->second + fn;
  return *this;
}

const RadialFn* Field::find(const std::vector<int>& k) const {
  auto it = modes.find(k);
  return it == modes.end() ? nullptr : &it->second;
}

std::vector<int> negate_mode(const std::vector<int>& k) {
  std::vector<int> out(k);
  for (auto& v : out) v = -v;
  return out;
}

Field d_r(const Field& fld, const WarpProfile& profile) {
  Field out;
  out.mode_dim = fld.mode_dim;
  for (const auto& [k, fn] : fld.modes) out.modes.emplace(k, deriv(fn, profile));
  return out;
}

Field d_theta(const Field& fld, int a) {
  Field out;
  out.mode_dim = fld.mode_dim;
  for (const auto& [k, fn] : fld.modes) out.modes.emplace(k, cx(0, k.at(a)) * fn);
  return out;
}

Field apply_endo(const MatrixPoly& e, const Field& fld) {
  Field out;
  out.mode_dim = fld.mode_dim;
  for (const auto& [k, fn] : fld.modes) out.modes.emplace(k, e * fn);
  return out;
}

cx integrate_M(const Field& phi, const Field& rho, const DiracModel& md, int panels) {
  if (phi.mode_dim != md.m - 1 || rho.mode_dim != md.m - 1)
    throw DimensionMismatch("field mode rank does not match the model");
  const QuadRule rule = gauss_legendre_01(64, panels);
  const double mode_vol = std::pow(2.0 * kPi, md.m - 1);
  cx acc = 0;
  for (const auto& [k, fk] : phi.modes) {
    const RadialFn* rk = rho.find(negate_mode(k));
    if (rk == nullptr || fk.is_zero() || rk->is_zero()) continue;
    cx line = rule.integrate([&](double r) -> cx {
      const double g = std::exp(md.density_power * md.profile.f(r));
      const cx pair = (rk->eval(md.profile, r, md.ell).transpose() *
                       fk.eval(md.profile, r, md.ell))
                          .value();
      return pair * g;
    });
    acc += mode_vol * line;
  }
  return acc;
}

cx integrate_boundary(const DiracModel& md, const std::function<cx(int)>& per_component) {
  cx acc = 0;
  for (int c = 0; c < 2; ++c) acc += boundary_weight(md, c) * per_component(c);
  return acc;
}

}  // namespace apsheat
