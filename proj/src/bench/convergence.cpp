#include "gpmhd/bench/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gpmhd/bench/problems.hpp"
#include "gpmhd/bench/runner.hpp"
#include "gpmhd/fem/assembly.hpp"

namespace gpmhd::bench {

namespace {

struct Accum {
  double d1 = 0, d2 = 0, r1 = 0, r2 = 0;
  void add(double w, double diff, double ref) {
    d1 += w * std::abs(diff);
    d2 += w * diff * diff;
    r1 += w * std::abs(ref);
    r2 += w * ref * ref;
  }
  std::array<double, 2> relative() const {
    return {r1 > 0 ? d1 / r1 : d1, r2 > 0 ? std::sqrt(d2 / r2) : std::sqrt(d2)};
  }
};

double vec_norm(const Vec3<double> &a) { return std::sqrt(norm2(a)); }

}  // namespace

ErrorSet vortex_errors(const fem::FeSpace &V, const fem::Field &U, double t,
                       const std::array<double, 2> &u_inf, double rho_amp) {
  Accum eu, eb;
  const int nl = V.nloc();
  for (int c = 0; c < V.num_cells(); ++c) {
    const auto &dofs = V.cell_dofs(c);
    for (int q = 0; q < V.nq(); ++q) {
      Conserved<double> uh{};
      for (int a = 0; a < nl; ++a)
        for (int k = 0; k < kNumVars; ++k) uh[k] += V.phi(q, a) * U[dofs[a]][k];
      const auto s = State<double>::from(uh);
      const auto w = vortex_state(V.qpoint(c, q), t, u_inf, rho_amp);
      const auto u = s.velocity();
      const double du = vec_norm({u[0] - w.u[0], u[1] - w.u[1], u[2] - w.u[2]});
      const double db = vec_norm({s.B[0] - w.B[0], s.B[1] - w.B[1], s.B[2] - w.B[2]});
      const double wq = V.wdet(c, q);
      eu.add(wq, du, vec_norm(w.u));
      eb.add(wq, db, vec_norm(w.B));
    }
  }
  return {{"u", eu.relative()}, {"B", eb.relative()}};
}

ErrorSet profile_errors(const fem::FeSpace &V, const fem::Field &U, const Profile &ref) {
  if (V.dim() != 1) throw std::invalid_argument("profile errors need a 1D space");
  const auto &x = ref.col("x");
  const auto &rho = ref.col("rho");
  const auto &E = ref.col("E");
  const auto &by = ref.col("B_y");
  const auto &bx = ref.col("B_x");
  const auto &bz = ref.col("B_z");
  const size_t n = ref.rows();
  if (n < 2) throw std::invalid_argument("reference profile has fewer than 2 rows");
  const double lo = V.lattice_point(0, 0)[0];
  const double hi = V.lattice_point(V.lattice_size()[0] - 1, 0)[0];
  const double tol = 1e-9 * (hi - lo);
  if (std::abs(x.front() - lo) > tol || std::abs(x.back() - hi) > tol)
    throw std::invalid_argument("reference profile does not span the mesh");
  Accum er, ee, eb;
  for (size_t i = 0; i < n; ++i) {
    double w = 0.0;
    if (i > 0) w += 0.5 * (x[i] - x[i - 1]);
    if (i + 1 < n) w += 0.5 * (x[i + 1] - x[i]);
    const auto s = State<double>::from(fem::evaluate(V, U, {x[i], 0.0}));
    const double bref = std::sqrt(bx[i] * bx[i] + by[i] * by[i] + bz[i] * bz[i]);
    er.add(w, s.rho - rho[i], rho[i]);
    ee.add(w, s.E - E[i], E[i]);
    eb.add(w, vec_norm(s.B) - bref, bref);
  }
  return {{"rho", er.relative()}, {"E", ee.relative()}, {"B", eb.relative()}};
}

std::vector<ConvergenceRow> convergence_table(const RunConfig &tmpl, const std::vector<int> &cells_ladder,
                                              const std::string &reference, std::ostream *log) {
  if (cells_ladder.empty()) throw std::invalid_argument("empty ladder");
  Profile ref;
  if (!reference.empty()) ref = read_profile_csv(reference);
  else if (tmpl.problem != "vortex")
    throw std::invalid_argument("problem '" + tmpl.problem + "' needs a reference profile");

  std::vector<ConvergenceRow> rows;
  for (int n : cells_ladder) {
    RunConfig cfg = tmpl;
    cfg.out_dir.clear();
    for (int d = 0; d < cfg.mesh.dim; ++d) cfg.mesh.cells[d] = n * tmpl.mesh.cells[d] / tmpl.mesh.cells[0];
    const auto res = run(cfg);
    ConvergenceRow row;
    row.cells = n;
    row.dofs = res.disc->space().num_dofs();
    row.aborted = res.aborted;
    const auto &V = res.disc->space();
    row.error = reference.empty() ? vortex_errors(V, res.U, res.t, cfg.vortex_u_inf, cfg.vortex_rho_amp)
                                  : profile_errors(V, res.U, ref);
    if (!rows.empty()) {
      const auto &prev = rows.back();
      const double ratio = std::log(static_cast<double>(n) / prev.cells);
      for (const auto &[k, e] : row.error) {
        const auto &ep = prev.error.at(k);
        row.rate[k] = {std::log(ep[0] / e[0]) / ratio, std::log(ep[1] / e[1]) / ratio};
      }
    }
    if (log) {
      *log << "cells " << n << " dofs " << row.dofs << (row.aborted ? " ABORTED" : "");
      for (const auto &[k, e] : row.error) *log << "  " << k << " L1 " << e[0] << " L2 " << e[1];
      *log << '\n';
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows) {
  if (rows.empty()) return;
  os << "cells,dofs";
  for (const auto &[k, e] : rows.front().error) os << ',' << k << "_L1," << k << "_L1_rate," << k << "_L2," << k << "_L2_rate";
  os << '\n';
  os.precision(8);
  for (const auto &r : rows) {
    os << r.cells << ',' << r.dofs;
    for (const auto &[k, e] : r.error) {
      os << ',' << e[0] << ',';
      if (r.rate.count(k)) os << r.rate.at(k)[0];
      os << ',' << e[1] << ',';
      if (r.rate.count(k)) os << r.rate.at(k)[1];
    }
    os << '\n';
  }
}

}  // namespace gpmhd::bench
