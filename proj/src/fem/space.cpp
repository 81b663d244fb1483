#include "gpmhd/fem/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpmhd::fem {

BoundaryKind parse_boundary(const std::string &s) {
  if (s == "periodic") return BoundaryKind::Periodic;
  if (s == "dirichlet") return BoundaryKind::Dirichlet;
  if (s == "slip") return BoundaryKind::SlipWall;
  throw std::invalid_argument("unknown boundary kind '" + s + "'");
}

std::string to_string(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Dirichlet: return "dirichlet";
    case BoundaryKind::SlipWall: return "slip";
  }
  return "dirichlet";
}

FeSpace::FeSpace(const MeshSpec &mesh, int degree)
    : mesh_(mesh), basis_(mesh.dim, degree), rule_(rule_for(mesh.dim, degree)) {
  const int d = mesh_.dim;
  const int k = degree;
  for (int i = 0; i < d; ++i) {
    if (mesh_.cells[i] < 1) throw std::invalid_argument("mesh: cell count must be >= 1");
    if (!(mesh_.hi[i] > mesh_.lo[i])) throw std::invalid_argument("mesh: empty box");
  }
  if (d == 1) {
    mesh_.cells[1] = 1;
    mesh_.lo[1] = 0.0;
    mesh_.hi[1] = 1.0;
  }
  if (d == 1 && mesh_.bc[0] == BoundaryKind::SlipWall)
    throw std::invalid_argument("mesh: slip walls need a 2D mesh");

  // lattice -> DOF numbering with periodic identification
  lat_ = {k * mesh_.cells[0] + 1, d == 2 ? k * mesh_.cells[1] + 1 : 1};
  std::array<int, 2> period{lat_[0], lat_[1]};
  for (int i = 0; i < d; ++i)
    if (mesh_.bc[i] == BoundaryKind::Periodic) period[i] = lat_[i] - 1;
  lattice_map_.assign(static_cast<size_t>(lat_[0]) * lat_[1], -1);
  const double hx = mesh_.spacing(0) / k;
  const double hy = d == 2 ? mesh_.spacing(1) / k : 0.0;
  for (int j = 0; j < period[1]; ++j)
    for (int i = 0; i < period[0]; ++i) {
      lattice_map_[static_cast<size_t>(j) * lat_[0] + i] = static_cast<int>(nodes_.size());
      nodes_.push_back({mesh_.lo[0] + i * hx, d == 2 ? mesh_.lo[1] + j * hy : 0.0});
      unsigned m = 0;
      if (mesh_.bc[0] != BoundaryKind::Periodic) {
        if (i == 0) m |= kXLo;
        if (i == lat_[0] - 1) m |= kXHi;
      }
      if (d == 2 && mesh_.bc[1] != BoundaryKind::Periodic) {
        if (j == 0) m |= kYLo;
        if (j == lat_[1] - 1) m |= kYHi;
      }
      bmask_.push_back(m);
    }
  for (int j = 0; j < lat_[1]; ++j)
    for (int i = 0; i < lat_[0]; ++i) {
      auto &slot = lattice_map_[static_cast<size_t>(j) * lat_[0] + i];
      if (slot < 0) slot = lattice_map_[static_cast<size_t>(j % period[1]) * lat_[0] + i % period[0]];
    }

  // cells
  nloc_ = basis_.size();
  const auto &lat = basis_.lattice();
  const double dx = mesh_.spacing(0);
  const double dy = d == 2 ? mesh_.spacing(1) : 1.0;
  if (d == 1) {
    ncells_ = mesh_.cells[0];
    for (int c = 0; c < ncells_; ++c) {
      for (int a = 0; a < nloc_; ++a) dofs_.push_back(lattice_dof(k * c + lat[a][0], 0));
      origin_.push_back({mesh_.lo[0] + c * dx, 0.0});
      jac_.push_back({dx, 0.0, 0.0, 1.0});
    }
  } else {
    ncells_ = 2 * mesh_.cells[0] * mesh_.cells[1];
    for (int j = 0; j < mesh_.cells[1]; ++j)
      for (int i = 0; i < mesh_.cells[0]; ++i) {
        const std::array<double, 2> o{mesh_.lo[0] + i * dx, mesh_.lo[1] + j * dy};
        // lower: (0,0), (1,0), (1,1)
        for (int a = 0; a < nloc_; ++a)
          dofs_.push_back(lattice_dof(k * i + lat[a][0] + lat[a][1], k * j + lat[a][1]));
        origin_.push_back(o);
        jac_.push_back({dx, 0.0, dx, dy});
        // upper: (0,0), (1,1), (0,1)
        for (int a = 0; a < nloc_; ++a)
          dofs_.push_back(lattice_dof(k * i + lat[a][0], k * j + lat[a][0] + lat[a][1]));
        origin_.push_back(o);
        jac_.push_back({dx, dy, 0.0, dy});
      }
  }

  // reference tables
  const int nq = rule_.size();
  phi_.resize(static_cast<size_t>(nq) * nloc_);
  std::vector<double> gref(static_cast<size_t>(nq) * nloc_ * d);
  for (int q = 0; q < nq; ++q) {
    basis_.values(rule_.points[q], &phi_[q * nloc_]);
    basis_.gradients(rule_.points[q], &gref[static_cast<size_t>(q) * nloc_ * d]);
  }

  // physical gradients: grad_x = J^-T grad_xi
  dphi_.resize(static_cast<size_t>(ncells_) * nq * nloc_ * d);
  wdet_.resize(static_cast<size_t>(ncells_) * nq);
  volume_.resize(ncells_);
  for (int c = 0; c < ncells_; ++c) {
    const auto &J = jac_[c];
    double det, it[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    if (d == 1) {
      det = J[0];
      it[0][0] = 1.0 / J[0];
    } else {
      // J = [[J0, J2], [J1, J3]]
      det = J[0] * J[3] - J[2] * J[1];
      // inverse transpose
      it[0][0] = J[3] / det;
      it[0][1] = -J[1] / det;
      it[1][0] = -J[2] / det;
      it[1][1] = J[0] / det;
    }
    if (!(det > 0.0)) throw std::logic_error("mesh: non-positive cell volume");
    volume_[c] = d == 1 ? det : 0.5 * det;
    for (int q = 0; q < nq; ++q) {
      wdet_[static_cast<size_t>(c) * nq + q] = rule_.weights[q] * det;
      const double *g = &gref[static_cast<size_t>(q) * nloc_ * d];
      double *out = &dphi_[(static_cast<size_t>(c) * nq + q) * nloc_ * d];
      for (int a = 0; a < nloc_; ++a) {
        if (d == 1) {
          out[a] = it[0][0] * g[a];
        } else {
          out[2 * a] = it[0][0] * g[2 * a] + it[0][1] * g[2 * a + 1];
          out[2 * a + 1] = it[1][0] * g[2 * a] + it[1][1] * g[2 * a + 1];
        }
      }
    }
  }
}

int FeSpace::lattice_dof(int i, int j) const {
  return lattice_map_[static_cast<size_t>(j) * lat_[0] + i];
}

std::array<double, 2> FeSpace::lattice_point(int i, int j) const {
  const int k = degree();
  return {mesh_.lo[0] + i * mesh_.spacing(0) / k,
          dim() == 2 ? mesh_.lo[1] + j * mesh_.spacing(1) / k : 0.0};
}

std::array<double, 2> FeSpace::map_point(int c, const std::array<double, 2> &xi) const {
  const auto &J = jac_[c];
  const auto &o = origin_[c];
  if (dim() == 1) return {o[0] + J[0] * xi[0], 0.0};
  return {o[0] + J[0] * xi[0] + J[2] * xi[1], o[1] + J[1] * xi[0] + J[3] * xi[1]};
}

std::array<double, 2> FeSpace::qpoint(int c, int q) const {
  return map_point(c, rule_.points[q]);
}

FeSpace::Location FeSpace::locate(const std::array<double, 2> &x) const {
  Location loc;
  const int d = dim();
  std::array<int, 2> idx{0, 0};
  std::array<double, 2> s{0.0, 0.0};
  for (int i = 0; i < d; ++i) {
    const double t = (x[i] - mesh_.lo[i]) / mesh_.spacing(i);
    idx[i] = std::clamp(static_cast<int>(std::floor(t)), 0, mesh_.cells[i] - 1);
    s[i] = std::clamp(t - idx[i], 0.0, 1.0);
  }
  if (d == 1) {
    loc.cell = idx[0];
    loc.xi = {s[0], 0.0};
    return loc;
  }
  const int square = idx[1] * mesh_.cells[0] + idx[0];
  if (s[1] <= s[0]) {
    loc.cell = 2 * square;
    loc.xi = {s[0] - s[1], s[1]};
  } else {
    loc.cell = 2 * square + 1;
    loc.xi = {s[0], s[1] - s[0]};
  }
  return loc;
}

}  // namespace gpmhd::fem
