#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

namespace gpmhd::fem {

/// Nodal Lagrange basis of degree k on the reference interval [0,1] or the
/// reference triangle, equispaced nodes. Built by inverting the monomial
/// Vandermonde matrix.
class LagrangeBasis {
 public:
  LagrangeBasis(int dim, int k);

  int dim() const { return dim_; }
  int degree() const { return k_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  /// Lattice offsets (a, b) of the local nodes; reference coordinates are
  /// (a / k, b / k).
  const std::vector<std::array<int, 2>> &lattice() const { return lattice_; }
  const std::vector<std::array<double, 2>> &nodes() const { return nodes_; }

  void values(const std::array<double, 2> &xi, double *out) const;
  /// out[a * dim + i] = d phi_a / d xi_i
  void gradients(const std::array<double, 2> &xi, double *out) const;

 private:
  int dim_, k_;
  std::vector<std::array<int, 2>> lattice_;
  std::vector<std::array<double, 2>> nodes_;
  std::vector<std::array<int, 2>> monomials_;
  Eigen::MatrixXd coeff_;  ///< column a holds the monomial coefficients of phi_a
};

}  // namespace gpmhd::fem
