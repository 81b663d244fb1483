#include <cmath>
#include <random>

#include "doctest.h"
#include "gpmhd/fem/assembly.hpp"
#include "gpmhd/fem/mass.hpp"
#include "gpmhd/fem/quadrature.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/stabilization.hpp"

using namespace gpmhd;
using namespace gpmhd::fem;

namespace {

MeshSpec line(int n, BoundaryKind bc = BoundaryKind::Periodic, double lo = 0, double hi = 1) {
  MeshSpec m;
  m.dim = 1;
  m.lo = {lo, 0};
  m.hi = {hi, 1};
  m.cells = {n, 1};
  m.bc = {bc, bc};
  return m;
}

MeshSpec box(int nx, int ny, BoundaryKind bx = BoundaryKind::Periodic,
             BoundaryKind by = BoundaryKind::Periodic) {
  MeshSpec m;
  m.dim = 2;
  m.lo = {0, 0};
  m.hi = {1, 1};
  m.cells = {nx, ny};
  m.bc = {bx, by};
  return m;
}

double monomial_integral(int p, int q) {
  // int_T x^p y^q = p! q! / (p + q + 2)!
  return std::tgamma(p + 1) * std::tgamma(q + 1) / std::tgamma(p + q + 3);
}

std::vector<ViscosityCoefficients> uniform_nu(const FeSpace &V, double eps) {
  return std::vector<ViscosityCoefficients>(V.num_dofs(), ViscosityCoefficients::uniform(eps));
}

}  // namespace

TEST_CASE("quadrature exactness") {
  for (int n = 1; n <= 6; ++n) {
    const auto g = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.points[i][0], p);
      CHECK(s == doctest::Approx(1.0 / (p + 1)).epsilon(1e-13));
    }
  }
  for (int deg : {3, 4, 5, 7}) {
    const auto r = triangle_rule(deg);
    CHECK(r.exact_degree >= deg);
    for (int p = 0; p <= deg; ++p)
      for (int q = 0; p + q <= deg; ++q) {
        double s = 0.0;
        for (int i = 0; i < r.size(); ++i)
          s += r.weights[i] * std::pow(r.points[i][0], p) * std::pow(r.points[i][1], q);
        CHECK(s == doctest::Approx(monomial_integral(p, q)).epsilon(1e-12));
      }
  }
}

TEST_CASE("lagrange basis is nodal and a partition of unity") {
  for (int dim : {1, 2})
    for (int k = 1; k <= 3; ++k) {
      LagrangeBasis b(dim, k);
      std::vector<double> v(b.size()), g(b.size() * dim);
      for (int a = 0; a < b.size(); ++a) {
        b.values(b.nodes()[a], v.data());
        for (int c = 0; c < b.size(); ++c) CHECK(v[c] == doctest::Approx(a == c ? 1.0 : 0.0));
      }
      b.values({0.21, dim == 2 ? 0.33 : 0.0}, v.data());
      b.gradients({0.21, dim == 2 ? 0.33 : 0.0}, g.data());
      double s = 0.0, gx = 0.0;
      for (int a = 0; a < b.size(); ++a) {
        s += v[a];
        gx += g[a * dim];
      }
      CHECK(s == doctest::Approx(1.0));
      CHECK(gx == doctest::Approx(0.0));
    }
}

TEST_CASE("dof counts and periodic identification") {
  CHECK(FeSpace(line(10, BoundaryKind::Dirichlet), 1).num_dofs() == 11);
  CHECK(FeSpace(line(10, BoundaryKind::Periodic), 1).num_dofs() == 10);
  CHECK(FeSpace(line(10, BoundaryKind::Periodic), 3).num_dofs() == 30);
  CHECK(FeSpace(box(4, 3), 1).num_dofs() == 12);
  CHECK(FeSpace(box(4, 3, BoundaryKind::Periodic, BoundaryKind::SlipWall), 2).num_dofs() == 8 * 7);
  FeSpace V(box(4, 4), 2);
  CHECK(V.lattice_dof(0, 3) == V.lattice_dof(8, 3));
  CHECK(V.lattice_dof(8, 8) == V.lattice_dof(0, 0));
}

TEST_CASE("mass matrices") {
  const int n = 8;
  const double h = 1.0 / n;
  FeSpace V(line(n, BoundaryKind::Dirichlet), 1);
  const auto d = lumped_mass(V);
  CHECK(d[0] == doctest::Approx(0.5 * h));
  CHECK(d[n] == doctest::Approx(0.5 * h));
  for (int i = 1; i < n; ++i) CHECK(d[i] == doctest::Approx(h));

  for (int k = 1; k <= 3; ++k) {
    FeSpace W(box(3, 2, BoundaryKind::Dirichlet, BoundaryKind::Periodic), k);
    const auto M = consistent_mass(W);
    const Eigen::VectorXd rows = M * Eigen::VectorXd::Ones(W.num_dofs());
    CHECK(rows.sum() == doctest::Approx(1.0));
    if (k != 2) {
      const auto L = lumped_mass(W);
      CHECK((rows - L).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  CHECK_THROWS_AS(lumped_mass(FeSpace(box(3, 3), 2)), std::domain_error);
}

TEST_CASE("mesh size field") {
  FeSpace V(line(50, BoundaryKind::Dirichlet), 1);
  const auto h = mesh_size_field(V);
  for (double x : h) CHECK(std::abs(x - 0.02) <= 1e-10);
  const auto h2 = mesh_size_field(FeSpace(line(100, BoundaryKind::Dirichlet), 1));
  CHECK(h2[10] / h[10] == doctest::Approx(0.5).epsilon(0.05));
  const auto hk = mesh_size_field(FeSpace(line(50, BoundaryKind::Dirichlet), 2));
  CHECK(hk[7] / h[7] == doctest::Approx(0.5).epsilon(1e-9));

  FeSpace W(box(8, 8), 1);
  const auto hw = mesh_size_field(W);
  for (double x : hw) CHECK(x == doctest::Approx(std::sqrt(1.0 / 128.0)));
}

TEST_CASE("gradients of polynomial fields are exact") {
  for (int k = 1; k <= 3; ++k) {
    FeSpace V(box(3, 4, BoundaryKind::Dirichlet, BoundaryKind::Dirichlet), k);
    std::vector<double> f(V.num_dofs());
    // degree-k polynomial
    auto fn = [k](double x, double y) { return 1.0 + 2 * x - y + (k >= 2 ? x * y + y * y : 0.0) + (k >= 3 ? x * x * y : 0.0); };
    auto gx = [k](double x, double y) { return 2.0 + (k >= 2 ? y : 0.0) + (k >= 3 ? 2 * x * y : 0.0); };
    auto gy = [k](double x, double y) { return -1.0 + (k >= 2 ? x + 2 * y : 0.0) + (k >= 3 ? x * x : 0.0); };
    for (int i = 0; i < V.num_dofs(); ++i) f[i] = fn(V.node(i)[0], V.node(i)[1]);
    double err = 0.0;
    for (int c = 0; c < V.num_cells(); ++c)
      for (int q = 0; q < V.nq(); ++q) {
        double g[2];
        gradient_at(V, c, q, f, g);
        const auto x = V.qpoint(c, q);
        err = std::max({err, std::abs(g[0] - gx(x[0], x[1])), std::abs(g[1] - gy(x[0], x[1]))});
      }
    CHECK(err < 1e-12);
    const auto ng = nodal_gradient(V, f);
    double nerr = 0.0;
    for (int i = 0; i < V.num_dofs(); ++i)
      nerr = std::max(nerr, std::abs(ng[i][0] - gx(V.node(i)[0], V.node(i)[1])));
    if (k == 1) CHECK(nerr < 1e-12);
  }
}

TEST_CASE("gradient of a sine converges at order k") {
  for (int k = 1; k <= 3; ++k) {
    double prev = 0.0;
    for (int n : {8, 16}) {
      FeSpace V(line(n), k);
      std::vector<double> f(V.num_dofs());
      for (int i = 0; i < V.num_dofs(); ++i) f[i] = std::sin(2 * M_PI * V.node(i)[0]);
      double err = 0.0;
      for (int c = 0; c < V.num_cells(); ++c)
        for (int q = 0; q < V.nq(); ++q) {
          double g;
          gradient_at(V, c, q, f, &g);
          err = std::max(err, std::abs(g - 2 * M_PI * std::cos(2 * M_PI * V.qpoint(c, q)[0])));
        }
      if (prev > 0) CHECK(std::log2(prev / err) > k - 0.2);
      prev = err;
    }
  }
}

TEST_CASE("free-stream state gives a zero residual") {
  const EosModel eos(5.0 / 3.0);
  const auto U0 = from_primitive(eos, 1.3, Vec3<double>{0.4, -0.7, 0.2}, 0.9,
                                 Vec3<double>{0.5, 0.8, -0.3});
  for (int k = 1; k <= 3; ++k) {
    FeSpace V(box(4, 3), k);
    const Field U(V.num_dofs(), U0.to_array());
    const auto h = mesh_size_field(V);
    for (auto fl : {FluxVariant::GP, FluxVariant::GPs, FluxVariant::Resistive, FluxVariant::Monolithic}) {
      Physics ph;
      ph.eos = eos;
      ph.flux = fl;
      ph.source = SourceConfig::make(SourcePreset::Powell);
      ph.glm.variant = GlmVariant::DednerExtended;
      ph.glm.c_h = 2.0;
      Field r;
      assemble_rhs(V, ph, U, uniform_nu(V, 0.05), h, r);
      double m = 0.0;
      for (const auto &x : r)
        for (double v : x) m = std::max(m, std::abs(v));
      CHECK(m < 1e-13);
    }
  }
}

TEST_CASE("boundary pins") {
  FeSpace V(box(4, 4, BoundaryKind::Periodic, BoundaryKind::SlipWall), 1);
  const auto pins = boundary_pins(V);
  Field r(V.num_dofs());
  for (auto &x : r) x.fill(1.0);
  apply_bc(r, pins);
  const int wall = V.lattice_dof(2, 0), inner = V.lattice_dof(2, 2);
  CHECK(r[wall][kMom + 1] == 0.0);
  CHECK(r[wall][kMag + 1] == 0.0);
  CHECK(r[wall][kMom] == 1.0);
  CHECK(r[inner][kMom + 1] == 1.0);

  FeSpace L(line(5, BoundaryKind::Dirichlet), 1);
  const auto lp = boundary_pins(L);
  CHECK(lp[0] == kAllComponents);
  CHECK(lp[5] == kAllComponents);
  CHECK(lp[2] == 0);
}

TEST_CASE("manufactured advection residual converges at second order") {
  // rho = 1 + 0.2 sin(2 pi x), u, p, B constant: d_t rho = -u d_x rho.
  const EosModel eos(1.4);
  const double u = 0.8;
  double prev = 0.0;
  for (int n : {16, 32, 64}) {
    FeSpace V(line(n), 1);
    Physics ph;
    ph.eos = eos;
    ph.flux = FluxVariant::None;
    const auto U = interpolate(V, [&](const std::array<double, 2> &x) {
      const double rho = 1.0 + 0.2 * std::sin(2 * M_PI * x[0]);
      return from_primitive(eos, rho, Vec3<double>{u, 0, 0}, 1.0, Vec3<double>{0, 0, 0}).to_array();
    });
    Field r;
    assemble_rhs(V, ph, U, uniform_nu(V, 0.0), mesh_size_field(V), r);
    const auto M = lumped_mass(V);
    double err = 0.0;
    for (int i = 0; i < V.num_dofs(); ++i) {
      const double exact = -u * 0.4 * M_PI * std::cos(2 * M_PI * V.node(i)[0]);
      err = std::max(err, std::abs(r[i][kRho] / M[i] - exact));
    }
    if (prev > 0) CHECK(std::log2(prev / err) > 1.9);
    prev = err;
  }
}

TEST_CASE("strong and weak advective forms agree on periodic meshes") {
  const EosModel eos(5.0 / 3.0);
  FeSpace V(box(5, 4), 2);
  const auto U = interpolate(V, [&](const std::array<double, 2> &x) {
    const double rho = 1.0 + 0.3 * std::sin(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]);
    return from_primitive(eos, rho,
                          Vec3<double>{std::sin(2 * M_PI * x[1]), 0.3 * std::cos(2 * M_PI * x[0]), 0.1},
                          1.0 + 0.1 * std::cos(2 * M_PI * (x[0] + x[1])),
                          Vec3<double>{0.2, 0.5 * std::sin(2 * M_PI * x[0]), 0.0})
        .to_array();
  });
  Physics ph;
  ph.eos = eos;
  ph.flux = FluxVariant::None;
  const auto h = mesh_size_field(V);
  Field a, b;
  assemble_rhs(V, ph, U, uniform_nu(V, 0.0), h, a);
  AssemblyOptions opt;
  opt.weak_advection = true;
  assemble_rhs(V, ph, U, uniform_nu(V, 0.0), h, b, opt);
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < kNumVars; ++k) m = std::max(m, std::abs(a[i][k] - b[i][k]));
  CHECK(m < 1e-12);
}

TEST_CASE("GPs compensation vanishes for one-dimensional velocity") {
  const EosModel eos(1.4);
  FeSpace V(line(20), 1);
  const auto U = interpolate(V, [&](const std::array<double, 2> &x) {
    const double rho = 1.0 + 0.3 * std::sin(2 * M_PI * x[0]);
    return from_primitive(eos, rho, Vec3<double>{0.5 + 0.2 * std::cos(2 * M_PI * x[0]), 0, 0}, 1.0,
                          Vec3<double>{0.7, 0.3, 0})
        .to_array();
  });
  const auto h = mesh_size_field(V);
  Physics a, b;
  a.eos = b.eos = eos;
  a.flux = FluxVariant::GP;
  b.flux = FluxVariant::GPs;
  Field ra, rb;
  assemble_rhs(V, a, U, uniform_nu(V, 0.01), h, ra);
  assemble_rhs(V, b, U, uniform_nu(V, 0.01), h, rb);
  for (size_t i = 0; i < ra.size(); ++i)
    for (int k = 0; k < kNumVars; ++k) CHECK(ra[i][k] == doctest::Approx(rb[i][k]).epsilon(1e-12));
}

TEST_CASE("non-positive density is reported with a cell id") {
  const EosModel eos(1.4);
  FeSpace V(line(4), 2);
  Field U(V.num_dofs(), from_primitive(eos, 1.0, Vec3<double>{0, 0, 0}, 1.0, Vec3<double>{0, 0, 0}).to_array());
  // positive nodal values whose P2 interpolant dips below zero in cell 0
  U[0][kRho] = 3.0;
  U[1][kRho] = 0.01;
  U[2][kRho] = 0.01;
  Physics ph;
  ph.eos = eos;
  Field r;
  bool thrown = false;
  try {
    assemble_rhs(V, ph, U, uniform_nu(V, 0.0), mesh_size_field(V), r);
  } catch (const AssemblyError &e) {
    thrown = true;
    CHECK(e.cell() == 0);
  }
  CHECK(thrown);
}
