#pragma once

// Galerkin right-hand side of the regularized system
//   (d_t U, v) = -(div F_adv, v) - (F_V, grad v) + (Psi + Upsilon, v) [+ GP^s compensation]
// The advective divergence is taken from the interpolated nodal fluxes, the
// viscous flux is evaluated at quadrature points and integrated by parts.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/flux.hpp"
#include "gpmhd/sources.hpp"
#include "gpmhd/thermo.hpp"

namespace gpmhd::fem {

struct Physics {
  EosModel eos{5.0 / 3.0};
  FluxVariant flux = FluxVariant::GP;
  SourceConfig source{};
  GlmConfig glm{};

  bool star() const { return glm.stores_energy_star(); }
};

class AssemblyError : public std::runtime_error {
 public:
  AssemblyError(int cell, const std::string &what)
      : std::runtime_error(what + " (cell " + std::to_string(cell) + ")"), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

struct AssemblyOptions {
  bool viscous = true;
  bool sources = true;
  /// Integrate the advective term by parts instead (no boundary term).
  bool weak_advection = false;
};

/// Residual r with (M d_t U)_j = r_j before boundary conditions.
/// `nu` and `h` are nodal fields.
void assemble_rhs(const FeSpace &V, const Physics &phys, const Field &U,
                  const std::vector<ViscosityCoefficients> &nu, const std::vector<double> &h,
                  Field &r, const AssemblyOptions &opt = {});

/// Pinned components per DOF for the boundary kinds of the mesh: Dirichlet
/// pins every component, slip walls pin the normal momentum and normal B.
PinMask boundary_pins(const FeSpace &V);

/// Zeroes pinned residual components.
void apply_bc(Field &r, const PinMask &pins);

/// Nodal interpolation of a closed-form state.
Field interpolate(const FeSpace &V,
                  const std::function<Conserved<double>(const std::array<double, 2> &)> &f);

/// FE function value at a point.
Conserved<double> evaluate(const FeSpace &V, const Field &U, const std::array<double, 2> &x);

/// Gradient of a scalar nodal field at a quadrature point, out[i] for i < dim.
void gradient_at(const FeSpace &V, int c, int q, const std::vector<double> &f, double *out);

/// Nodal gradient: |K|-weighted average over the cells sharing a node of the
/// cellwise gradient at that node.
std::vector<std::array<double, 2>> nodal_gradient(const FeSpace &V, const std::vector<double> &f);

}  // namespace gpmhd::fem
