#include "gpmhd/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>


#include "gpmhd/flux.hpp"
#include "gpmhd/thermo.hpp"

namespace gpmhd {

namespace {

constexpr double kGammas[] = {1.4, 5.0 / 3.0, 2.0};

// Scale-free definiteness measure of a symmetric 2x2 matrix: M01^2 / (M00 M11)
// when both diagonal entries are negative, +inf otherwise. Negative definite
// iff the value is below 1; a singular negative semidefinite matrix gives 1.
double definiteness_ratio(const Eigen::Matrix2d &M) {
  if (!(M(0, 0) < 0.0) || !(M(1, 1) < 0.0)) return INFINITY;
  return M(0, 1) * M(1, 0) / (M(0, 0) * M(1, 1));
}

StateGradient<double> random_gradient(std::mt19937_64 &rng, int dim) {
  std::uniform_real_distribution<double> u(-1, 1);
  StateGradient<double> G;
  G.grad_rho = zero_vec<double>();
  G.grad_rho_e = zero_vec<double>();
  G.grad_phi = zero_vec<double>();
  G.grad_u = zero_mat<double>();
  G.grad_B = zero_mat<double>();
  for (int i = 0; i < dim; ++i) {
    G.grad_rho[i] = u(rng);
    G.grad_rho_e[i] = u(rng);
    for (int j = 0; j < 3; ++j) {
      G.grad_u[i][j] = u(rng);
      G.grad_B[i][j] = u(rng);
    }
  }
  return G;
}

}  // namespace

std::vector<SweepResult> thermo_suite(const PropertyOptions &opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> lg(-3.0, 3.0), u(-1.0, 1.0);
  const int n = opt.state_samples;

  SweepResult eos_res{"EOS residual p s_e + rho^2 s_rho", 0, 0.0, 1e-13};
  SweepResult mass_diff{"mass-diffusion matrix negative definite", 0, -1e300, 1.0 - 1e-10};
  SweepResult j3{"J3 negative definite", 0, -1e300, 1.0 - 1e-10};
  SweepResult j3_semi{"J3 negative semidefinite", 0, -1e300, 1.0 + 1e-12};
  for (double gamma : kGammas) {
    const EosModel eos(gamma);
    for (int s = 0; s < n; ++s) {
      const double rho = std::pow(10.0, lg(rng)), e = std::pow(10.0, lg(rng));
      const auto d = eos.derivative_bundle(rho, e);
      const double r = eos.pressure(rho, e) * d.s_e + rho * rho * d.s_rho;
      eos_res.max_residual = std::max(eos_res.max_residual, std::abs(r) / std::abs(rho * rho * d.s_rho));
      mass_diff.max_residual = std::max(mass_diff.max_residual, definiteness_ratio(j1_matrix(eos, rho, e)));
      const double q3 = definiteness_ratio(j3_matrix(eos, rho, e));
      j3.max_residual = std::max(j3.max_residual, q3);
      j3_semi.max_residual = std::max(j3_semi.max_residual, q3);
    }
  }
  for (auto *r : {&eos_res, &mass_diff, &j3, &j3_semi}) r->samples = 3 * n;

  // -kappa rho phi'' |grad s|^2 - phi' J1 >= 0 for phi(s) = s and
  // phi(s) = exp(s / (2 c_p))
  SweepResult kernel{"generalized entropy production >= 0", opt.kernel_samples, -1e300, 0.0};
  std::uniform_real_distribution<double> lg2(-2.0, 2.0);
  for (int s = 0; s < opt.kernel_samples; ++s) {
    const EosModel eos(kGammas[s % 3]);
    const double rho = std::pow(10.0, lg2(rng)), e = std::pow(10.0, lg2(rng)), kappa = 0.5;
    const double c = eos.cp();
    const double sv = eos.specific_entropy(rho, e);
    const double p1 = (s % 2) ? std::exp(sv / (2 * c)) / (2 * c) : 1.0;
    const double p2 = (s % 2) ? p1 / (2 * c) : 0.0;
    const std::array<double, 3> gr{u(rng), u(rng), u(rng)}, ge{u(rng), u(rng), u(rng)};
    const auto d = eos.derivative_bundle(rho, e);
    double gs2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double gsi = d.s_rho * gr[i] + d.s_e * ge[i];
      gs2 += gsi * gsi;
    }
    const double val = -kappa * rho * p2 * gs2 - p1 * j1_direct(eos, rho, e, kappa, gr, ge);
    kernel.max_residual = std::max(kernel.max_residual, -val);
  }
  return {eos_res, mass_diff, j3, j3_semi, kernel};
}

std::vector<SweepResult> flux_suite(const PropertyOptions &opt) {
  std::mt19937_64 rng(opt.seed + 1);
  const int n = opt.kernel_samples;
  SweepResult mag{"magnetic production k : grad B >= 0", n, -1e300, 0.0};
  SweepResult visc{"viscous production mu S(grad u) : grad u >= 0", n, -1e300, 0.0};
  for (int s = 0; s < n; ++s) {
    const auto G = random_gradient(rng, 3);
    mag.max_residual = std::max(mag.max_residual, -contract(magnetic_viscous_block(G.grad_B, 0.8), G.grad_B));
    visc.max_residual =
        std::max(visc.max_residual, -1.3 * contract(symmetric_part(G.grad_u), G.grad_u));
  }

  const int m = std::max(1, n / 100);
  SweepResult anti{"magnetic block antisymmetric", m, 0.0, 1e-14};
  SweepResult one_d{"GPs = GP for x-only gradients and velocity", m, 0.0, 1e-14};
  for (int s = 0; s < m; ++s) {
    const EosModel eos(kGammas[s % 3]);
    auto U = random_state(rng, eos);
    const auto G = random_gradient(rng, 3);
    const auto nu = ViscosityCoefficients::uniform(0.4);
    for (const auto &F : {gp_flux(U, G, nu), gps_flux(U, G, nu), resistive_flux(U, G, nu, eos)}) {
      const auto k = F.magnetic();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) anti.max_residual = std::max(anti.max_residual, std::abs(k[i][j] + k[j][i]));
    }
    U.m[1] = U.m[2] = 0.0;
    const auto G1 = random_gradient(rng, 1);
    const auto a = gp_flux(U, G1, nu), b = gps_flux(U, G1, nu);
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < kNumVars; ++c)
        one_d.max_residual = std::max(one_d.max_residual, std::abs(a.F[i][c] - b.F[i][c]));
  }
  return {mag, visc, anti, one_d};
}

}  // namespace gpmhd
