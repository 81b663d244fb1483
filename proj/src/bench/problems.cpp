#include "gpmhd/bench/problems.hpp"

#include <cmath>

namespace gpmhd::bench {

namespace {

Primitive<double> prim(double rho, Vec3<double> u, double p, Vec3<double> B) {
  Primitive<double> w;
  w.rho = rho;
  w.u = u;
  w.p = p;
  w.B = B;
  w.phi = 0.0;
  return w;
}

double wrap(double x, double lo, double hi) {
  const double L = hi - lo;
  return x - L * std::floor((x - lo) / L);
}

}  // namespace

Primitive<double> vortex_state(const std::array<double, 2> &x, double t,
                               const std::array<double, 2> &u_inf, double rho_amp) {
  const double X = wrap(x[0] - u_inf[0] * t, -10.0, 10.0);
  const double Y = wrap(x[1] - u_inf[1] * t, -10.0, 10.0);
  const double r2 = X * X + Y * Y;
  const double a = std::exp(0.5 * (1.0 - r2)) / (2.0 * M_PI);
  const double g = std::exp(1.0 - r2);
  const double p = 1.0 - r2 * g / (8.0 * M_PI * M_PI) - rho_amp * g * g / (16.0 * M_PI * M_PI);
  return prim(1.0 + rho_amp * g, {u_inf[0] - a * Y, u_inf[1] + a * X, 0.0}, p, {-a * Y, a * X, 0.0});
}

ProblemSetup make_problem(const RunConfig &cfg) {
  ProblemSetup s;
  s.id = cfg.problem;
  if (cfg.problem == "contact") {
    s.initial = [](const std::array<double, 2> &x) {
      const double rho = x[0] < 0.5 ? kContactRhoL : kContactRhoR;
      return prim(rho, {kContactU[0], kContactU[1], 0.0}, kContactP, {kContactB[0], kContactB[1], 0.0});
    };
  } else if (cfg.problem == "briowu") {
    s.initial = [](const std::array<double, 2> &x) {
      if (x[0] < 0.5) return prim(1.0, {0, 0, 0}, 1.0, {0.75, 1.0, 0.0});
      return prim(0.125, {0, 0, 0}, 0.1, {0.75, -1.0, 0.0});
    };
  } else if (cfg.problem == "vortex") {
    const auto uinf = cfg.vortex_u_inf;
    const double amp = cfg.vortex_rho_amp;
    s.exact = [uinf, amp](const std::array<double, 2> &x, double t) { return vortex_state(x, t, uinf, amp); };
    s.initial = [uinf, amp](const std::array<double, 2> &x) { return vortex_state(x, 0.0, uinf, amp); };
  } else if (cfg.problem == "orszag_tang") {
    s.initial = [](const std::array<double, 2> &x) {
      const double tp = 2.0 * M_PI;
      const double b = 1.0 / std::sqrt(4.0 * M_PI);
      return prim(25.0 / (36.0 * M_PI), {-std::sin(tp * x[1]), std::sin(tp * x[0]), 0.0},
                  5.0 / (12.0 * M_PI), {-b * std::sin(tp * x[1]), b * std::sin(2.0 * tp * x[0]), 0.0});
    };
  } else if (cfg.problem == "gem") {
    const double Lx = cfg.mesh.hi[0] - cfg.mesh.lo[0];
    const double Ly = cfg.mesh.hi[1] - cfg.mesh.lo[1];
    const bool harris = cfg.gem_profile == "harris";
    s.reconnection = true;
    s.initial = [Lx, Ly, harris](const std::array<double, 2> &x) {
      const double rho = harris ? 1.0 / std::pow(std::cosh(2.0 * x[1]), 2) + 0.2
                                : 1.0 / (std::cosh(2.0 * x[0]) * std::cosh(2.0 * x[1])) + 0.2;
      const double dBx = -0.1 * M_PI / Ly * std::sin(M_PI * x[1] / Ly) * std::cos(2.0 * M_PI * x[0] / Lx);
      const double dBy = 0.2 * M_PI / Lx * std::sin(2.0 * M_PI * x[0] / Lx) * std::cos(M_PI * x[1] / Ly);
      return prim(rho, {0, 0, 0}, 0.5 * rho, {std::tanh(2.0 * x[1]) + dBx, dBy, 0.0});
    };
  } else {
    throw ConfigError("unknown problem '" + cfg.problem + "'");
  }
  return s;
}

fem::Field initial_field(const fem::FeSpace &V, const ProblemSetup &p, const EosModel &eos,
                         bool star) {
  fem::Field U(V.num_dofs());
  for (int i = 0; i < V.num_dofs(); ++i) {
    const auto w = p.initial(V.node(i));
    if (!(w.rho > 0.0) || !(w.p > 0.0))
      throw ConfigError("initial state of '" + p.id + "' is not admissible at node " + std::to_string(i));
    U[i] = from_primitive(eos, w, star).to_array();
  }
  return U;
}

}  // namespace gpmhd::bench
