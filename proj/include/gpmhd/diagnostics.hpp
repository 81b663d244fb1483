#pragma once

// Conserved integrals, entropy and divergence monitors, reconnection rate,
// and the ledger CSV.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/thermo.hpp"

namespace gpmhd {

struct LedgerRow {
  double t = 0.0;
  double mass = 0.0;
  double mom_x = 0.0;
  double mom_y = 0.0;
  double energy = 0.0;
  std::optional<double> energy_star;
  double B_x = 0.0;
  double B_y = 0.0;
  std::optional<double> ang_mom;  ///< 2D only
  std::optional<double> min_s;    ///< empty when a node has rho <= 0 or e <= 0
  std::optional<double> divB_L2;  ///< 2D only
  std::optional<double> f_rec;
};

struct DiagnosticsOptions {
  bool star = false;       ///< energy slot holds E*
  bool glm = false;        ///< report E* alongside E
  bool reconnection = false;
};

/// Quadrature integrals of rho, m, E (and E*), B and m1 x2 - m2 x1.
LedgerRow conserved_integrals(const fem::FeSpace &V, const fem::Field &U, bool star, bool glm);

/// min over nodes of s(rho_i, e_i); empty if any node is not admissible.
std::optional<double> min_entropy(const fem::Field &U, const EosModel &eos, bool star);

/// || div B_h ||_L2 over the domain.
double divB_norm(const fem::FeSpace &V, const fem::Field &U);

/// (1/2) int |B_y(x, 0)| dx. Throws if y = 0 is not a mesh line.
double reconnection_rate(const fem::FeSpace &V, const fem::Field &U);

LedgerRow ledger_row(const fem::FeSpace &V, const fem::Field &U, double t, const EosModel &eos,
                     const DiagnosticsOptions &opt);

inline constexpr const char *kLedgerHeader =
    "t,mass,mom_x,mom_y,energy,energy_star,B_x,B_y,ang_mom,min_s,divB_L2,f_rec";

void write_ledger_header(std::ostream &os);
void write_ledger_row(std::ostream &os, const LedgerRow &r);
std::vector<LedgerRow> read_ledger(std::istream &is);

}  // namespace gpmhd
