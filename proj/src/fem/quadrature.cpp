#include "gpmhd/fem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gpmhd::fem {

// Golub-Welsch on the Legendre Jacobi matrix, mapped to [0, 1].
QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule r;
  r.exact_degree = 2 * n - 1;
  for (int i = 0; i < n; ++i) {
    const double x = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.points.push_back({0.5 * (x + 1.0), 0.0});
    r.weights.push_back(v * v);  // 2 v^2 on [-1,1], halved
  }
  return r;
}

namespace {

void add_orbit3(QuadratureRule &r, double a, double b, double w) {
  // barycentric (a, b, b) and permutations
  const double c = b;
  r.points.push_back({b, c});
  r.points.push_back({a, c});
  r.points.push_back({b, a});
  for (int i = 0; i < 3; ++i) r.weights.push_back(0.5 * w);
}

// Collapsed Gauss product rule; exact for total degree 2n - 2.
QuadratureRule collapsed(int n) {
  const auto g = gauss_legendre(n);
  QuadratureRule r;
  r.exact_degree = 2 * n - 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = g.points[i][0], v = g.points[j][0];
      r.points.push_back({u, v * (1.0 - u)});
      r.weights.push_back(g.weights[i] * g.weights[j] * (1.0 - u));
    }
  return r;
}

}  // namespace

QuadratureRule triangle_rule(int degree) {
  if (degree <= 4) {
    // Strang-Fix / Dunavant, 6 points.
    QuadratureRule r;
    r.exact_degree = 4;
    add_orbit3(r, 0.108103018168070, 0.445948490915965, 0.223381589678011);
    add_orbit3(r, 0.816847572980459, 0.091576213509771, 0.109951743655322);
    return r;
  }
  if (degree == 5) {
    // Radon, 7 points.
    QuadratureRule r;
    r.exact_degree = 5;
    const double s = std::sqrt(15.0);
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(0.5 * 9.0 / 40.0);
    add_orbit3(r, (9.0 + 2.0 * s) / 21.0, (6.0 - s) / 21.0, (155.0 - s) / 1200.0);
    add_orbit3(r, (9.0 - 2.0 * s) / 21.0, (6.0 + s) / 21.0, (155.0 + s) / 1200.0);
    return r;
  }
  return collapsed((degree + 3) / 2);
}

QuadratureRule rule_for(int dim, int k) {
  if (dim == 1) return gauss_legendre(k + 2);
  if (dim == 2) return triangle_rule(2 * k + 1);
  throw std::invalid_argument("rule_for: dim must be 1 or 2");
}

}  // namespace gpmhd::fem
