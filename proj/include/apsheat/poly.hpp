#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "apsheat/common.hpp"

namespace apsheat {

// Real polynomial in the radial variable, coefficient of r^j at index j.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(double v) { return Poly({v}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int j) const { return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : 0.0; }
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double r) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * r + *it;
    return v;
  }

  Poly deriv() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<double> s(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (size_t j = 0; j < a.c_.size(); ++j) s[j] += a.c_[j];
    for (size_t j = 0; j < b.c_.size(); ++j) s[j] += b.c_[j];
    return Poly(std::move(s));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (b * -1.0); }
  friend Poly operator*(const Poly& a, double s) {
    std::vector<double> p(a.c_);
    for (auto& v : p) v *= s;
    return Poly(std::move(p));
  }
  friend Poly operator*(double s, const Poly& a) { return a * s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> p(a.c_.size() + b.c_.size() - 1, 0.0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(p));
  }

 private:
  void trim() {
    while (!c_.empty() && std::abs(c_.back()) == 0.0) c_.pop_back();
    if (c_.size() > 256) throw DimensionMismatch("polynomial degree overflow");
  }
  std::vector<double> c_;
};

// Matrix-valued polynomial; all coefficient matrices share one square size.
class MatrixPoly {
 public:
  MatrixPoly() = default;
  explicit MatrixPoly(std::vector<Mat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static MatrixPoly constant(const Mat& m) { return MatrixPoly({m}); }
  static MatrixPoly zero() { return {}; }
  // Scalar polynomial times a constant matrix.
  static MatrixPoly scaled(const Poly& p, const Mat& m) {
    std::vector<Mat> c;
    c.reserve(p.coeffs().size());
    for (double v : p.coeffs()) c.push_back(v * m);
    return MatrixPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int rows() const { return c_.empty() ? 0 : static_cast<int>(c_[0].rows()); }
  const std::vector<Mat>& coeffs() const { return c_; }

  Mat operator()(double r) const {
    if (c_.empty()) return Mat();
    Mat v = Mat::Zero(c_[0].rows(), c_[0].cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = r * v + *it;
    return v;
  }
  // Evaluates to an explicit n x n zero when the polynomial is empty.
  Mat eval(double r, int n) const { return c_.empty() ? Mat::Zero(n, n).eval() : (*this)(r); }

  MatrixPoly deriv() const {
    if (c_.size() <= 1) return {};
    std::vector<Mat> d;
    d.reserve(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d.push_back(static_cast<double>(j) * c_[j]);
    return MatrixPoly(std::move(d));
  }

  MatrixPoly transpose() const {
    std::vector<Mat> t;
    t.reserve(c_.size());
    for (const auto& m : c_) t.push_back(m.transpose());
    return MatrixPoly(std::move(t));
  }

  friend MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Mat> s(std::max(a.c_.size(), b.c_.size()),
                       Mat::Zero(a.c_[0].rows(), a.c_[0].cols()));
    for (size_t j = 0; j < a.c_.size(); ++j) s[j] += a.c_[j];
    for (size_t j = 0; j < b.c_.size(); ++j) s[j] += b.c_[j];
    return MatrixPoly(std::move(s));
  }
  friend MatrixPoly operator*(const MatrixPoly& a, cx s) {
    std::vector<Mat> p(a.c_);
    for (auto& m : p) m *= s;
    return MatrixPoly(std::move(p));
  }
  friend MatrixPoly operator*(const Mat& l, const MatrixPoly& a) {
    std::vector<Mat> p;
    p.reserve(a.c_.size());
    for (const auto& m : a.c_) p.push_back(l * m);
    return MatrixPoly(std::move(p));
  }
  friend MatrixPoly operator*(const MatrixPoly& a, const Mat& r) {
    std::vector<Mat> p;
    p.reserve(a.c_.size());
    for (const auto& m : a.c_) p.push_back(m * r);
    return MatrixPoly(std::move(p));
  }
  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Mat> p(a.c_.size() + b.c_.size() - 1, Mat::Zero(a.c_[0].rows(), b.c_[0].cols()));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return MatrixPoly(std::move(p));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().norm() == 0.0) c_.pop_back();
    if (c_.size() > 256) throw DimensionMismatch("matrix polynomial degree overflow");
  }
  std::vector<Mat> c_;
};

// Vector-valued polynomial, one complex column per power of r.
class VecPoly {
 public:
  VecPoly() = default;
  explicit VecPoly(std::vector<Vec> coeffs) : c_(std::move(coeffs)) { trim(); }
  static VecPoly constant(const Vec& v) { return VecPoly({v}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int size() const { return c_.empty() ? 0 : static_cast<int>(c_[0].size()); }
  const std::vector<Vec>& coeffs() const { return c_; }

  Vec eval(double r, int n) const {
    if (c_.empty()) return Vec::Zero(n);
    Vec v = Vec::Zero(c_[0].size());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = r * v + *it;
    return v;
  }

  VecPoly deriv() const {
    if (c_.size() <= 1) return {};
    std::vector<Vec> d;
    d.reserve(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d.push_back(static_cast<double>(j) * c_[j]);
    return VecPoly(std::move(d));
  }

  friend VecPoly operator+(const VecPoly& a, const VecPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Vec> s(std::max(a.c_.size(), b.c_.size()), Vec::Zero(a.c_[0].size()));
    for (size_t j = 0; j < a.c_.size(); ++j) s[j] += a.c_[j];
    for (size_t j = 0; j < b.c_.size(); ++j) s[j] += b.c_[j];
    return VecPoly(std::move(s));
  }
  friend VecPoly operator*(const VecPoly& a, cx s) {
    std::vector<Vec> p(a.c_);
    for (auto& v : p) v *= s;
    return VecPoly(std::move(p));
  }
  friend VecPoly operator*(const Mat& m, const VecPoly& a) {
    std::vector<Vec> p;
    p.reserve(a.c_.size());
    for (const auto& v : a.c_) p.push_back(m * v);
    return VecPoly(std::move(p));
  }
  friend VecPoly operator*(const Poly& q, const VecPoly& a) {
    if (q.is_zero() || a.is_zero()) return {};
    std::vector<Vec> p(q.coeffs().size() + a.c_.size() - 1, Vec::Zero(a.c_[0].size()));
    for (size_t i = 0; i < q.coeffs().size(); ++i)
      for (size_t j = 0; j < a.c_.size(); ++j) p[i + j] += q.coeffs()[i] * a.c_[j];
    return VecPoly(std::move(p));
  }
  friend VecPoly operator*(const MatrixPoly& q, const VecPoly& a) {
    if (q.is_zero() || a.is_zero()) return {};
    std::vector<Vec> p(q.coeffs().size() + a.c_.size() - 1, Vec::Zero(q.coeffs()[0].rows()));
    for (size_t i = 0; i < q.coeffs().size(); ++i)
      for (size_t j = 0; j < a.c_.size(); ++j) p[i + j] += q.coeffs()[i] * a.c_[j];
    return VecPoly(std::move(p));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().norm() == 0.0) c_.pop_back();
    if (c_.size() > 256) throw DimensionMismatch("vector polynomial degree overflow");
  }
  std::vector<Vec> c_;
};

}  // namespace apsheat
