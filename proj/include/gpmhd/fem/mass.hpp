#pragma once

#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"

namespace gpmhd::fem {

/// Consistent Galerkin mass matrix.
Eigen::SparseMatrix<double> consistent_mass(const FeSpace &V);

/// Row sums of the consistent matrix. Throws std::domain_error on any entry
/// <= 0 (P2 triangles).
Eigen::VectorXd lumped_mass(const FeSpace &V);

/// Applies M^-1 to residual fields. Pinned components come back as zero.
class MassOperator {
 public:
  MassOperator(const FeSpace &V, bool lumped, const PinMask &pinned);
  ~MassOperator();
  MassOperator(const MassOperator &) = delete;
  MassOperator &operator=(const MassOperator &) = delete;

  bool lumped() const { return lumped_; }
  const Eigen::VectorXd &diagonal() const { return diag_; }

  void solve(const Field &r, Field &x) const;

 private:
  struct Block;
  bool lumped_;
  Eigen::VectorXd diag_;
  PinMask pinned_;
  std::vector<std::unique_ptr<Block>> blocks_;  ///< consistent mode only
  std::vector<int> block_of_component_;
};

/// Nodal mesh-size field h from the smoothed projection
///   (h, v) + sum_K (|K|^{2/d} grad h, grad v)_K = (|K|^{1/d} / k, v).
std::vector<double> mesh_size_field(const FeSpace &V);

}  // namespace gpmhd::fem
