#include "apsheat/quadrature.hpp"

#include <cmath>

namespace apsheat {

namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// Nodes and weights on [-1,1].
void gauss_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess, then Newton; converges in < 10 steps.
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(n, t);
      double dt = p / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    auto [p, dp] = legendre(n, t);
    (void)p;
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

QuadRule gauss_legendre_01(int points, int panels) {
  if (points < 2 || panels < 1) throw DimensionMismatch("invalid quadrature request");
  std::vector<double> x, w;
  gauss_nodes(points, x, w);
  QuadRule rule;
  rule.nodes.reserve(static_cast<size_t>(points) * panels);
  rule.weights.reserve(static_cast<size_t>(points) * panels);
  const double hp = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * hp;
    for (int i = 0; i < points; ++i) {  // x[] descends, so nodes ascend within the panel
      rule.nodes.push_back(a + 0.5 * hp * (1.0 - x[i]));
      rule.weights.push_back(0.5 * hp * w[i]);
    }
  }
  return rule;
}

}  // namespace apsheat
