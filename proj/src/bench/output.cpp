#include "gpmhd/bench/output.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gpmhd/flux.hpp"
#include "gpmhd/parse.hpp"

namespace gpmhd::bench {

namespace {
struct Derived {
  Vec3<double> u;
  double p, s, E;
};

Derived derive(const Conserved<double> &c, const EosModel &eos, bool star) {
  const auto st = State<double>::from(c, star);
  Derived d;
  d.u = st.velocity();
  const double e = st.specific_internal_energy();
  d.p = eos.pressure(st.rho, e);
  d.s = e > 0.0 ? eos.specific_entropy(st.rho, e) : std::nan("");
  d.E = star ? st.E - 0.5 * st.phi * st.phi : st.E;
  return d;
}
}  // namespace

void write_profile_csv(std::ostream &os, const fem::FeSpace &V, const fem::Field &U,
                       const EosModel &eos, bool star) {
  if (V.dim() != 1) throw std::invalid_argument("profile CSV needs a 1D space");
  os << kProfileHeader << '\n' << std::setprecision(17);
  const int n = V.lattice_size()[0];
  for (int i = 0; i < n; ++i) {
    const auto &c = U[V.lattice_dof(i, 0)];
    const auto d = derive(c, eos, star);
    os << V.lattice_point(i, 0)[0] << ',' << c[kRho] << ',' << d.u[0] << ',' << d.u[1] << ','
       << d.u[2] << ',' << c[kMag] << ',' << c[kMag + 1] << ',' << c[kMag + 2] << ',' << d.s << ','
       << d.p << ',' << d.E << ',' << c[kPhi] << '\n';
  }
}

void write_vtk(std::ostream &os, const fem::FeSpace &V, const fem::Field &U, const EosModel &eos,
               bool star, const std::string &title) {
  if (V.dim() != 2) throw std::invalid_argument("VTK output needs a 2D space");
  const auto L = V.lattice_size();
  const int np = L[0] * L[1];
  const int ntri = 2 * (L[0] - 1) * (L[1] - 1);
  os << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os << std::setprecision(17);
  os << "POINTS " << np << " double\n";
  for (int j = 0; j < L[1]; ++j)
    for (int i = 0; i < L[0]; ++i) {
      const auto x = V.lattice_point(i, j);
      os << x[0] << ' ' << x[1] << " 0\n";
    }
  os << "CELLS " << ntri << ' ' << 4 * ntri << '\n';
  auto id = [&](int i, int j) { return j * L[0] + i; };
  for (int j = 0; j + 1 < L[1]; ++j)
    for (int i = 0; i + 1 < L[0]; ++i) {
      os << "3 " << id(i, j) << ' ' << id(i + 1, j) << ' ' << id(i + 1, j + 1) << '\n';
      os << "3 " << id(i, j) << ' ' << id(i + 1, j + 1) << ' ' << id(i, j + 1) << '\n';
    }
  os << "CELL_TYPES " << ntri << '\n';
  for (int t = 0; t < ntri; ++t) os << "5\n";
  std::vector<Derived> d(np);
  std::vector<const Conserved<double> *> c(np);
  for (int j = 0; j < L[1]; ++j)
    for (int i = 0; i < L[0]; ++i) {
      c[id(i, j)] = &U[V.lattice_dof(i, j)];
      d[id(i, j)] = derive(*c[id(i, j)], eos, star);
    }
  os << "POINT_DATA " << np << '\n';
  auto scalar = [&](const char *name, auto f) {
    os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int k = 0; k < np; ++k) os << f(k) << '\n';
  };
  scalar("rho", [&](int k) { return (*c[k])[kRho]; });
  scalar("p", [&](int k) { return d[k].p; });
  scalar("s", [&](int k) { return d[k].s; });
  scalar("phi", [&](int k) { return (*c[k])[kPhi]; });
  os << "VECTORS u double\n";
  for (int k = 0; k < np; ++k) os << d[k].u[0] << ' ' << d[k].u[1] << ' ' << d[k].u[2] << '\n';
  os << "VECTORS B double\n";
  for (int k = 0; k < np; ++k)
    os << (*c[k])[kMag] << ' ' << (*c[k])[kMag + 1] << ' ' << (*c[k])[kMag + 2] << '\n';
}

void write_snapshot(std::ostream &os, const fem::Field &U, double t) {
  os << std::setprecision(17) << "# t = " << t << '\n' << kSnapshotHeader << '\n';
  for (size_t i = 0; i < U.size(); ++i) {
    os << i;
    for (double v : U[i]) os << ',' << v;
    os << '\n';
  }
}

fem::Field read_snapshot(std::istream &is, double &t) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# t = ", 0) != 0)
    throw std::runtime_error("snapshot: missing time line");
  t = parse_double(line.substr(6));
  if (!std::getline(is, line) || line != kSnapshotHeader)
    throw std::runtime_error("snapshot: unexpected header");
  fem::Field U;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    if (std::stoul(cell) != U.size()) throw std::runtime_error("snapshot: dof order");
    Conserved<double> c{};
    for (int k = 0; k < kNumVars; ++k) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error("snapshot: short row");
      c[k] = parse_double(cell);
    }
    U.push_back(c);
  }
  return U;
}

const std::vector<double> &Profile::col(const std::string &name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return data[i];
  throw std::runtime_error("profile: no column '" + name + "'");
}

Profile read_profile_csv(std::istream &is) {
  Profile p;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("profile: empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) p.columns.push_back(cell);
  }
  p.data.resize(p.columns.size());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    for (size_t k = 0; k < p.columns.size(); ++k) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error("profile: short row");
      p.data[k].push_back(parse_double(cell));
    }
  }
  return p;
}

Profile read_profile_csv(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("profile: cannot open '" + path + "'");
  return read_profile_csv(f);
}

}  // namespace gpmhd::bench
