#pragma once

#include <array>
#include <vector>

namespace gpmhd::fem {

/// Points in reference coordinates; weights sum to the reference measure
/// (1 on [0,1], 1/2 on the unit triangle).
struct QuadratureRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  int exact_degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// n-point Gauss-Legendre on [0, 1].
QuadratureRule gauss_legendre(int n);

/// Rule on the reference triangle {x, y >= 0, x + y <= 1} exact for
/// polynomials of total degree `degree`.
QuadratureRule triangle_rule(int degree);

/// Rule used by a P_k space: exact to degree 2k + 1.
QuadratureRule rule_for(int dim, int k);

}  // namespace gpmhd::fem
