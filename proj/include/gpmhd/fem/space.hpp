#pragma once

// Structured meshes on boxes and continuous Lagrange spaces on them.
//
// 1D: N uniform intervals. 2D: nx x ny rectangles, each cut along its
// lower-left to upper-right diagonal. All DOFs of a degree-k space sit on the
// (k nx + 1) x (k ny + 1) point lattice; periodic directions identify the
// first and last lattice lines.

#include <array>
#include <string>
#include <vector>

#include "gpmhd/fem/lagrange.hpp"
#include "gpmhd/fem/quadrature.hpp"

namespace gpmhd::fem {

enum class BoundaryKind { Periodic, Dirichlet, SlipWall };

BoundaryKind parse_boundary(const std::string &s);
std::string to_string(BoundaryKind b);

struct MeshSpec {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<int, 2> cells{10, 1};
  std::array<BoundaryKind, 2> bc{BoundaryKind::Dirichlet, BoundaryKind::Dirichlet};

  double spacing(int d) const { return (hi[d] - lo[d]) / cells[d]; }
};

inline constexpr unsigned kXLo = 1u, kXHi = 2u, kYLo = 4u, kYHi = 8u;

class FeSpace {
 public:
  FeSpace(const MeshSpec &mesh, int degree);

  const MeshSpec &mesh() const { return mesh_; }
  int dim() const { return mesh_.dim; }
  int degree() const { return basis_.degree(); }
  int num_dofs() const { return static_cast<int>(nodes_.size()); }
  int num_cells() const { return ncells_; }
  int nloc() const { return nloc_; }
  int nq() const { return rule_.size(); }

  const LagrangeBasis &basis() const { return basis_; }
  const QuadratureRule &rule() const { return rule_; }

  const int *cell_dofs(int c) const { return &dofs_[static_cast<size_t>(c) * nloc_]; }
  double phi(int q, int a) const { return phi_[q * nloc_ + a]; }
  const double *phi_row(int q) const { return &phi_[q * nloc_]; }
  /// Physical basis gradients at (c, q): out[a * dim + i].
  const double *dphi(int c, int q) const {
    return &dphi_[(static_cast<size_t>(c) * nq() + q) * nloc_ * dim()];
  }
  /// Quadrature weight times |det J|.
  double wdet(int c, int q) const { return wdet_[static_cast<size_t>(c) * nq() + q]; }
  /// Physical (unwrapped) coordinates of a quadrature point.
  std::array<double, 2> qpoint(int c, int q) const;
  double cell_volume(int c) const { return volume_[c]; }
  /// Column-major affine Jacobian (J00, J10, J01, J11).
  const std::array<double, 4> &jacobian(int c) const { return jac_[c]; }

  /// Representative coordinates of a DOF (the lower copy for periodic nodes).
  const std::array<double, 2> &node(int dof) const { return nodes_[dof]; }
  unsigned boundary_mask(int dof) const { return bmask_[dof]; }

  /// Unwrapped lattice extents and the DOF at lattice point (i, j).
  std::array<int, 2> lattice_size() const { return lat_; }
  int lattice_dof(int i, int j) const;
  std::array<double, 2> lattice_point(int i, int j) const;

  struct Location {
    int cell = 0;
    std::array<double, 2> xi{0.0, 0.0};
  };
  /// Cell containing x (clamped to the box) and the reference coordinates.
  Location locate(const std::array<double, 2> &x) const;
  /// Affine map of cell c applied to reference coordinates.
  std::array<double, 2> map_point(int c, const std::array<double, 2> &xi) const;

 private:
  MeshSpec mesh_;
  LagrangeBasis basis_;
  QuadratureRule rule_;
  int ncells_ = 0, nloc_ = 0;
  std::array<int, 2> lat_{1, 1};
  std::vector<int> lattice_map_;
  std::vector<int> dofs_;
  std::vector<double> phi_, dphi_, wdet_, volume_;
  std::vector<std::array<double, 2>> origin_;
  std::vector<std::array<double, 4>> jac_;  ///< column-major J per cell
  std::vector<std::array<double, 2>> nodes_;
  std::vector<unsigned> bmask_;
};

}  // namespace gpmhd::fem
