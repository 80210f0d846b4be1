#pragma once

#include <functional>
#include <map>
#include <vector>

#include "apsheat/model.hpp"

namespace apsheat {

// Radial profile sum_j e^{j f(r)} p_j(r) with vector polynomial p_j. The
// family is closed under d_r, frame factors e^{-w f}, and endomorphisms.
struct RadialFn {
  std::map<int, VecPoly> parts;

  bool is_zero() const;
  int dim() const;
  Vec eval(const WarpProfile& profile, double r, int n) const;

  static RadialFn constant(const Vec& v);
  static RadialFn poly(const VecPoly& p);
};

RadialFn operator+(const RadialFn& a, const RadialFn& b);
RadialFn operator*(cx s, const RadialFn& a);
RadialFn operator*(const Mat& m, const RadialFn& a);
RadialFn operator*(const MatrixPoly& m, const RadialFn& a);
RadialFn exp_shift(const RadialFn& a, int add);
RadialFn deriv(const RadialFn& a, const WarpProfile& profile);

// Smooth section on T^{m-1} x [0,1], stored by Fourier mode. Covector fields
// use the same container; their mode of index k pairs against mode -k.
struct Field {
  int mode_dim = 0;
  std::map<std::vector<int>, RadialFn> modes;

  static Field single(int mode_dim, const std::vector<int>& k, RadialFn fn);
  Field& add(const std::vector<int>& k, const RadialFn& fn);
  const RadialFn* find(const std::vector<int>& k) const;
};

std::vector<int> negate_mode(const std::vector<int>& k);

// Exact radial derivative; exponential prefactors differentiate through the
// profile.
Field d_r(const Field& fld, const WarpProfile& profile);

// Tangential coordinate derivative along direction a (multiplies by i k_a).
Field d_theta(const Field& fld, int a);

Field apply_endo(const MatrixPoly& e, const Field& fld);

// L^2 pairing of a covector field against a section over the full cylinder,
// with the model's volume density. Doubling `panels` must not move the
// result beyond quadrature tolerance.
cx integrate_M(const Field& phi, const Field& rho, const DiracModel& md, int panels = 2);

// Sums component values against the boundary measure.
cx integrate_boundary(const DiracModel& md, const std::function<cx(int)>& per_component);

}  // namespace apsheat
