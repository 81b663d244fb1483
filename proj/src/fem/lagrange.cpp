#include "gpmhd/fem/lagrange.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace gpmhd::fem {

namespace {
double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}
}  // namespace

LagrangeBasis::LagrangeBasis(int dim, int k) : dim_(dim), k_(k) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("LagrangeBasis: dim must be 1 or 2");
  if (k < 1 || k > 3) throw std::invalid_argument("LagrangeBasis: degree must be 1, 2 or 3");
  if (dim == 1) {
    for (int a = 0; a <= k; ++a) {
      lattice_.push_back({a, 0});
      monomials_.push_back({a, 0});
    }
  } else {
    // vertices first, then the rest in lattice order
    lattice_ = {{0, 0}, {k, 0}, {0, k}};
    for (int b = 0; b <= k; ++b)
      for (int a = 0; a + b <= k; ++a) {
        const bool vertex = (a == 0 && b == 0) || (a == k && b == 0) || (a == 0 && b == k);
        if (!vertex) lattice_.push_back({a, b});
      }
    for (int d = 0; d <= k; ++d)
      for (int j = 0; j <= d; ++j) monomials_.push_back({d - j, j});
  }
  for (const auto &l : lattice_) nodes_.push_back({double(l[0]) / k, double(l[1]) / k});

  const int n = size();
  Eigen::MatrixXd V(n, n);
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m)
      V(a, m) = ipow(nodes_[a][0], monomials_[m][0]) * ipow(nodes_[a][1], monomials_[m][1]);
  coeff_ = V.inverse();
}

void LagrangeBasis::values(const std::array<double, 2> &xi, double *out) const {
  const int n = size();
  Eigen::VectorXd mono(n);
  for (int m = 0; m < n; ++m)
    mono(m) = ipow(xi[0], monomials_[m][0]) * ipow(xi[1], monomials_[m][1]);
  for (int a = 0; a < n; ++a) out[a] = coeff_.col(a).dot(mono);
}

void LagrangeBasis::gradients(const std::array<double, 2> &xi, double *out) const {
  const int n = size();
  Eigen::VectorXd dx(n), dy(n);
  for (int m = 0; m < n; ++m) {
    const int p = monomials_[m][0], q = monomials_[m][1];
    dx(m) = p ? p * ipow(xi[0], p - 1) * ipow(xi[1], q) : 0.0;
    dy(m) = q ? q * ipow(xi[0], p) * ipow(xi[1], q - 1) : 0.0;
  }
  for (int a = 0; a < n; ++a) {
    out[a * dim_] = coeff_.col(a).dot(dx);
    if (dim_ == 2) out[a * dim_ + 1] = coeff_.col(a).dot(dy);
  }
}

}  // namespace gpmhd::fem
