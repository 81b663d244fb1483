#include "gpmhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gpmhd/fem/quadrature.hpp"
#include "gpmhd/flux.hpp"
#include "gpmhd/parse.hpp"

namespace gpmhd {

LedgerRow conserved_integrals(const fem::FeSpace &V, const fem::Field &U, bool star, bool glm) {
  LedgerRow r;
  double E = 0.0, Es = 0.0, L = 0.0;
  const int nl = V.nloc();
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    for (int q = 0; q < V.nq(); ++q) {
      const double w = V.wdet(c, q);
      Conserved<double> u{};
      for (int a = 0; a < nl; ++a)
        for (int k = 0; k < kNumVars; ++k) u[k] += V.phi(q, a) * U[dofs[a]][k];
      const double half_phi2 = 0.5 * u[kPhi] * u[kPhi];
      r.mass += w * u[kRho];
      r.mom_x += w * u[kMom];
      r.mom_y += w * u[kMom + 1];
      r.B_x += w * u[kMag];
      r.B_y += w * u[kMag + 1];
      E += w * (star ? u[kEnergy] - half_phi2 : u[kEnergy]);
      Es += w * (star ? u[kEnergy] : u[kEnergy] + half_phi2);
      if (V.dim() == 2) {
        const auto x = V.qpoint(c, q);
        L += w * (u[kMom] * x[1] - u[kMom + 1] * x[0]);
      }
    }
  }
  r.energy = E;
  if (glm) r.energy_star = Es;
  if (V.dim() == 2) r.ang_mom = L;
  return r;
}

std::optional<double> min_entropy(const fem::Field &U, const EosModel &eos, bool star) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto &c : U) {
    const auto s = State<double>::from(c, star);
    if (!(s.rho > 0.0)) return std::nullopt;
    const double e = s.specific_internal_energy();
    if (!(e > 0.0)) return std::nullopt;
    m = std::min(m, eos.specific_entropy(s.rho, e));
  }
  return m;
}

double divB_norm(const fem::FeSpace &V, const fem::Field &U) {
  const int d = V.dim();
  double acc = 0.0;
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    for (int q = 0; q < V.nq(); ++q) {
      const double *g = V.dphi(c, q);
      double div = 0.0;
      for (int a = 0; a < V.nloc(); ++a)
        for (int i = 0; i < d; ++i) div += g[a * d + i] * U[dofs[a]][kMag + i];
      acc += V.wdet(c, q) * div * div;
    }
  }
  return std::sqrt(acc);
}

double reconnection_rate(const fem::FeSpace &V, const fem::Field &U) {
  if (V.dim() != 2) throw std::invalid_argument("reconnection rate needs a 2D mesh");
  const auto &m = V.mesh();
  const double t = (0.0 - m.lo[1]) / m.spacing(1);
  const int j = static_cast<int>(std::lround(t));
  if (std::abs(t - j) > 1e-9 || j < 0 || j > m.cells[1])
    throw std::invalid_argument("reconnection rate: y = 0 is not a mesh line");
  const int k = V.degree();
  const int jl = k * j;
  const auto g = fem::gauss_legendre(12);
  fem::LagrangeBasis edge(1, k);
  std::vector<double> phi(k + 1);
  const double dx = m.spacing(0);
  double acc = 0.0;
  for (int i = 0; i < m.cells[0]; ++i) {
    for (int q = 0; q < g.size(); ++q) {
      edge.values(g.points[q], phi.data());
      double by = 0.0;
      for (int a = 0; a <= k; ++a) by += phi[a] * U[V.lattice_dof(k * i + a, jl)][kMag + 1];
      acc += g.weights[q] * dx * std::abs(by);
    }
  }
  return 0.5 * acc;
}

LedgerRow ledger_row(const fem::FeSpace &V, const fem::Field &U, double t, const EosModel &eos,
                     const DiagnosticsOptions &opt) {
  auto r = conserved_integrals(V, U, opt.star, opt.glm);
  r.t = t;
  r.min_s = min_entropy(U, eos, opt.star);
  if (V.dim() == 2) r.divB_L2 = divB_norm(V, U);
  if (opt.reconnection) r.f_rec = reconnection_rate(V, U);
  return r;
}

void write_ledger_header(std::ostream &os) { os << kLedgerHeader << '\n'; }

namespace {
void put(std::ostream &os, const std::optional<double> &v) {
  if (v) os << *v;
}
std::optional<double> get(const std::string &s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}
}  // namespace

void write_ledger_row(std::ostream &os, const LedgerRow &r) {
  const auto old = os.precision(17);
  os << r.t << ',' << r.mass << ',' << r.mom_x << ',' << r.mom_y << ',' << r.energy << ',';
  put(os, r.energy_star);
  os << ',' << r.B_x << ',' << r.B_y << ',';
  put(os, r.ang_mom);
  os << ',';
  put(os, r.min_s);
  os << ',';
  put(os, r.divB_L2);
  os << ',';
  put(os, r.f_rec);
  os << '\n';
  os.precision(old);
}

std::vector<LedgerRow> read_ledger(std::istream &is) {
  std::vector<LedgerRow> rows;
  std::string line;
  if (!std::getline(is, line) || line != kLedgerHeader)
    throw std::runtime_error("ledger: unexpected header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    while (f.size() < 12) f.emplace_back();
    LedgerRow r;
    r.t = parse_double(f[0]);
    r.mass = parse_double(f[1]);
    r.mom_x = parse_double(f[2]);
    r.mom_y = parse_double(f[3]);
    r.energy = parse_double(f[4]);
    r.energy_star = get(f[5]);
    r.B_x = parse_double(f[6]);
    r.B_y = parse_double(f[7]);
    r.ang_mom = get(f[8]);
    r.min_s = get(f[9]);
    r.divB_L2 = get(f[10]);
    r.f_rec = get(f[11]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace gpmhd
