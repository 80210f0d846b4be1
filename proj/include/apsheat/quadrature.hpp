#pragma once

#include <vector>

#include "apsheat/common.hpp"

namespace apsheat {

// Quadrature rule on [0,1]; weights already include the interval scaling.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <typename F>
  auto integrate(F&& f) const {
    auto acc = f(nodes[0]) * weights[0];
    for (size_t i = 1; i < nodes.size(); ++i) acc += f(nodes[i]) * weights[i];
    return acc;
  }
};

// Composite Gauss-Legendre rule: `points` nodes on each of `panels` equal
// subintervals of [0,1]. Nodes are found by Newton iteration on P_n.
QuadRule gauss_legendre_01(int points = 64, int panels = 2);

}  // namespace apsheat
