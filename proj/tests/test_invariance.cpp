#include "doctest.h"
#include "gpmhd/invariance.hpp"

using namespace gpmhd;

TEST_CASE("identity rotation is exact") {
  std::mt19937_64 rng(51);
  const EosModel eos(1.4);
  const auto U = random_state(rng, eos);
  CHECK(check_advective_rotation(U, {0.0, 0.0}, eos) == 0.0);
  const auto Q = random_state(rng, eos);
  CHECK(check_advective_rotation(Q, {0.0, M_PI / 2}, eos) <= 1e-12);
}

TEST_CASE("viscous rotation with zero gradient") {
  std::mt19937_64 rng(53);
  const EosModel eos(1.4);
  Conserved<double> g;
  g.fill(0.0);
  CHECK(check_viscous_rotation_i(random_state(rng, eos), g, FluxVariant::GP,
                                 ViscosityCoefficients::uniform(1.0), random_rotation(rng),
                                 eos) == 0.0);
  Primitive<double> w{1.0, {0.1, 0.2, 0.3}, 1.0, {0.3, 0.2, 0.1}, 0.0};
  CHECK(check_viscous_rotation_ii(SmoothField::constant(w), FluxVariant::GP,
                                  ViscosityCoefficients::uniform(1.0), random_rotation(rng),
                                  eos, {0.1, 0.2, 0.3, 0.0}) == 0.0);
}

TEST_CASE("rotation suite passes") {
  SweepOptions opt;
  opt.samples = 100;
  for (const auto &r : rotation_suite(opt)) {
    INFO(r.name << " residual " << r.max_residual);
    CHECK(r.passed());
  }
}

TEST_CASE("Galilean boost with V = 0 is trivial") {
  std::mt19937_64 rng(59);
  const auto f = SmoothField::random(rng);
  ResidualModel m;
  m.flux = FluxVariant::GPs;
  m.nu = ViscosityCoefficients::uniform(0.5);
  CHECK(check_galilean(f, m, {0.0}, {0.1, 0.2, 0.3, 0.4}) == 0.0);
}

TEST_CASE("Galilean suite matches the expected pattern") {
  SweepOptions opt;
  opt.samples = 30;
  for (const auto &r : galilean_suite(opt)) {
    INFO(r.name << " residual " << r.max_residual);
    CHECK(r.passed());
  }
}

TEST_CASE("residual operator vanishes on a constant state") {
  Primitive<double> w{1.2, {0.4, -0.2, 0.1}, 0.9, {0.5, 0.3, -0.7}, 0.0};
  ResidualModel m;
  m.flux = FluxVariant::GP;
  m.nu = ViscosityCoefficients::uniform(0.3);
  m.source = SourceConfig::make(SourcePreset::Powell);
  const auto R = strong_residual(SmoothField::constant(w), m, {0.3, 0.1, 0.0, 0.0});
  for (double x : R) CHECK(x == doctest::Approx(0.0).scale(1.0));
}
