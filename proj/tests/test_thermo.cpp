#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "gpmhd/thermo.hpp"

using namespace gpmhd;

TEST_CASE("pressure of the ideal gas") {
  const EosModel eos2(2.0);
  CHECK(eos2.pressure(1.0, 1.0) == doctest::Approx(1.0));
  // contact-wave data: p0 / ((gamma - 1) rho_L) recovers e
  const double rhoL = 0.7156521382, p0 = 0.5122334291;
  const double e = p0 / rhoL;
  CHECK(eos2.pressure(rhoL, e) == doctest::Approx(p0).epsilon(1e-14));
  const EosModel eos53(5.0 / 3.0);
  const double rho = 25.0 / (36.0 * M_PI), p = 5.0 / (12.0 * M_PI);
  CHECK(eos53.pressure(rho, eos53.internal_energy_from_pressure(rho, p)) ==
        doctest::Approx(p).epsilon(1e-14));
  CHECK_THROWS_AS(eos2.pressure(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(EosModel(1.0), std::domain_error);
}

TEST_CASE("specific entropy normalization") {
  const EosModel eos(1.4);
  CHECK(eos.specific_entropy(1.0, 1.0) == doctest::Approx(0.0));
  CHECK(eos.specific_entropy(1.0, std::exp(0.4)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(eos.specific_entropy(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(eos.specific_entropy(-1.0, 1.0), std::domain_error);
}

TEST_CASE("EOS residual p s_e + rho^2 s_rho vanishes") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  double worst = 0.0;
  for (double gamma : {1.4, 5.0 / 3.0, 2.0}) {
    const EosModel eos(gamma);
    for (int s = 0; s < 20000; ++s) {
      const double rho = std::pow(10.0, lg(rng)), e = std::pow(10.0, lg(rng));
      const auto d = eos.derivative_bundle(rho, e);
      const double r = eos.pressure(rho, e) * d.s_e + rho * rho * d.s_rho;
      worst = std::max(worst, std::abs(r) / std::abs(rho * rho * d.s_rho));
    }
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("derivative bundle closed forms") {
  const EosModel eos(1.4);
  const auto d = eos.derivative_bundle(1.0, 1.0);
  CHECK(d.s_e == doctest::Approx(2.5));
  CHECK(d.s_rho == doctest::Approx(-1.0));
  CHECK(d.s_ee == doctest::Approx(-2.5));
  CHECK(d.s_rhoe == 0.0);
  CHECK(EosModel(2.0).derivative_bundle(2.0, 1.0).s_rho == doctest::Approx(-0.5));
  const auto d2 = eos.derivative_bundle(0.3, 7.0);
  CHECK(d2.s_e * eos.temperature(7.0) == doctest::Approx(1.0));
}

TEST_CASE("derivative bundle against central differences") {
  const EosModel eos(5.0 / 3.0);
  const double rho = 0.8, e = 1.7;
  const auto d = eos.derivative_bundle(rho, e);
  // long double keeps round-off below the truncation error at the small steps
  auto s = [&](long double r, long double x) { return eos.specific_entropy(r, x); };
  auto order = [](double e1, double e2, double ratio) { return std::log(e1 / e2) / std::log(ratio); };

  auto first = [&](long double h) {
    const double fe = double((s(rho, e + h) - s(rho, e - h)) / (2 * h));
    const double fr = double((s(rho + h, e) - s(rho - h, e)) / (2 * h));
    return std::array<double, 2>{std::abs(fe - d.s_e), std::abs(fr - d.s_rho)};
  };
  const auto a = first(1e-4L), b = first(1e-5L);
  for (int k = 0; k < 2; ++k) CHECK(order(a[k], b[k], 10.0) >= 1.9);

  auto second = [&](long double h) {
    const long double h2 = h * h;
    const double see = double((s(rho, e + h) - 2 * s(rho, e) + s(rho, e - h)) / h2);
    const double srr = double((s(rho + h, e) - 2 * s(rho, e) + s(rho - h, e)) / h2);
    const double sre = double(
        (s(rho + h, e + h) - s(rho + h, e - h) - s(rho - h, e + h) + s(rho - h, e - h)) /
        (4 * h2));
    return std::array<double, 3>{std::abs(see - d.s_ee), std::abs(srr - d.s_rhorho),
                                 std::abs(sre - d.s_rhoe)};
  };
  const auto c = second(1e-2L), g = second(1e-3L);
  CHECK(order(c[0], g[0], 10.0) >= 1.9);
  CHECK(order(c[1], g[1], 10.0) >= 1.9);
  // s is separable in (rho, e), so the mixed difference is zero up to round-off
  CHECK(g[2] <= 1e-10);
}

TEST_CASE("cp and generalized entropy admissibility") {
  CHECK(cp(2.0) == doctest::Approx(2.0));
  CHECK(cp(5.0 / 3.0) == doctest::Approx(2.5));
  CHECK(cp(1e12) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cp(1.0), std::domain_error);
  CHECK(generalized_entropy_admissible(0.0, 1.0, 0.0, 0.0, 1.4));
  CHECK_FALSE(generalized_entropy_admissible(0.0, 1.0, 2.0 / cp(1.4), 0.0, 1.4));
  const double c = cp(1.4);
  for (double s : {-5.0, 0.0, 3.0}) {
    const double p1 = std::exp(s / (2 * c)) / (2 * c);
    const double p2 = p1 / (2 * c);
    CHECK(generalized_entropy_admissible(std::exp(s / (2 * c)), p1, p2, s, 1.4));
  }
}

TEST_CASE("Lemma matrix is negative definite, J3 negative semidefinite") {
  const EosModel eos(1.4);
  const auto J1 = j1_matrix(eos, 1.0, 1.0);
  CHECK(J1(0, 0) == doctest::Approx(-1.0));
  CHECK(J1(1, 1) == doctest::Approx(-2.5));
  CHECK(J1(0, 1) == 0.0);
  // For the ideal gas J3 = -(1/gamma) v v^T with v = (rho^-1/2, rho^1/2 / e), so it is
  // rank one and its determinant vanishes.
  const auto J3 = j3_matrix(eos, 1.0, 1.0);
  CHECK(J3(0, 0) == doctest::Approx(-1.0 / 1.4));
  CHECK(J3(0, 1) == doctest::Approx(-1.0 / 1.4));
  CHECK(J3(1, 1) == doctest::Approx(-1.0 / 1.4));
  CHECK(std::abs(J3.determinant()) <= 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  double worst_rel = -1e300;
  for (double gamma : {1.4, 5.0 / 3.0, 2.0}) {
    const EosModel g(gamma);
    for (int s = 0; s < 10000; ++s) {
      const double rho = std::pow(10.0, lg(rng)), e = std::pow(10.0, lg(rng));
      const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> ev(j3_matrix(g, rho, e));
      const double lo = ev.eigenvalues().minCoeff(), hi = ev.eigenvalues().maxCoeff();
      CHECK(lo < 0.0);
      worst_rel = std::max(worst_rel, hi / std::abs(lo));
      const auto M = j1_matrix(g, rho, e);
      CHECK(M.determinant() > 0.0);
      CHECK(M.trace() < 0.0);
    }
  }
  // the second eigenvalue is zero up to round-off
  CHECK(worst_rel <= 1e-12);
}

TEST_CASE("direct J1 equals the quadratic form of the matrix") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.2, 3.0);
  for (int s = 0; s < 200; ++s) {
    const EosModel eos(s % 2 ? 1.4 : 2.0);
    const double rho = pos(rng), e = pos(rng), kappa = pos(rng);
    const std::array<double, 3> gr{u(rng), u(rng), u(rng)}, ge{u(rng), u(rng), u(rng)};
    const auto M = j1_matrix(eos, rho, e, kappa);
    double q = 0.0;
    for (int i = 0; i < 3; ++i)
      q += M(0, 0) * gr[i] * gr[i] + 2 * M(0, 1) * gr[i] * ge[i] + M(1, 1) * ge[i] * ge[i];
    CHECK(j1_direct(eos, rho, e, kappa, gr, ge) == doctest::Approx(q).epsilon(1e-12));
    CHECK(q < 0.0);
  }
}
