#pragma once

// File formats.
//
// 1D profile CSV, one row per lattice point in increasing x:
//   x,rho,u_x,u_y,u_z,B_x,B_y,B_z,s,p,E,phi
// 2D legacy ASCII VTK (UNSTRUCTURED_GRID) on the unwrapped node lattice with
// point data rho, p, s, phi (scalars) and u, B (vectors).
// Snapshot CSV, one row per DOF, preceded by "# t = <time>":
//   dof,rho,m_x,m_y,m_z,E,B_x,B_y,B_z,phi

#include <iosfwd>
#include <string>
#include <vector>

#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/thermo.hpp"

namespace gpmhd::bench {

inline constexpr const char *kProfileHeader = "x,rho,u_x,u_y,u_z,B_x,B_y,B_z,s,p,E,phi";
inline constexpr const char *kSnapshotHeader = "dof,rho,m_x,m_y,m_z,E,B_x,B_y,B_z,phi";

void write_profile_csv(std::ostream &os, const fem::FeSpace &V, const fem::Field &U,
                       const EosModel &eos, bool star);
void write_vtk(std::ostream &os, const fem::FeSpace &V, const fem::Field &U, const EosModel &eos,
               bool star, const std::string &title);
void write_snapshot(std::ostream &os, const fem::Field &U, double t);
fem::Field read_snapshot(std::istream &is, double &t);

/// Columns of a profile CSV keyed by header name.
struct Profile {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  ///< data[col][row]
  const std::vector<double> &col(const std::string &name) const;
  size_t rows() const { return data.empty() ? 0 : data[0].size(); }
};
Profile read_profile_csv(std::istream &is);
Profile read_profile_csv(const std::string &path);

}  // namespace gpmhd::bench
