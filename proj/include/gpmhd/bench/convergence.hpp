#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gpmhd/bench/config.hpp"
#include "gpmhd/bench/output.hpp"
#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"

namespace gpmhd::bench {

/// Relative errors {L1, L2} per quantity.
using ErrorSet = std::map<std::string, std::array<double, 2>>;

/// Vortex: quantities "u" and "B" (pointwise Euclidean norm of the in-plane
/// and out-of-plane components), integrated with the cell quadrature against
/// the exact translate at time t.
ErrorSet vortex_errors(const fem::FeSpace &V, const fem::Field &U, double t,
                       const std::array<double, 2> &u_inf, double rho_amp = 0.0);

/// Brio-Wu: quantities "rho", "E", "B" (|B|) sampled at the reference
/// abscissae and integrated with the trapezoid rule. Throws
/// std::invalid_argument when the reference does not cover the mesh.
ErrorSet profile_errors(const fem::FeSpace &V, const fem::Field &U, const Profile &ref);

struct ConvergenceRow {
  int cells = 0;  ///< cells per direction
  long dofs = 0;
  ErrorSet error;
  ErrorSet rate;  ///< empty on the first row
  bool aborted = false;
};

/// Runs `tmpl` at each entry of `cells_ladder` (cells per direction) and
/// compares against the analytic vortex or, when `reference` is non-empty, a
/// stored profile CSV. rate = log(e_coarse / e_fine) / log(N_fine / N_coarse).
std::vector<ConvergenceRow> convergence_table(const RunConfig &tmpl, const std::vector<int> &cells_ladder,
                                              const std::string &reference = {},
                                              std::ostream *log = nullptr);

void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows);

}  // namespace gpmhd::bench
