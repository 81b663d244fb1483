#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "gpmhd/bench/config.hpp"
#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/flux.hpp"

namespace gpmhd::bench {

using PointFn = std::function<Primitive<double>(const std::array<double, 2> &)>;

struct ProblemSetup {
  std::string id;
  PointFn initial;
  /// Exact solution at time t, when known.
  std::function<Primitive<double>(const std::array<double, 2> &, double)> exact;
  bool reconnection = false;
};

/// contact, vortex, briowu, orszag_tang, gem.
ProblemSetup make_problem(const RunConfig &cfg);

/// Nodal interpolation of the initial data. Throws ConfigError if any node
/// has rho <= 0 or e <= 0.
fem::Field initial_field(const fem::FeSpace &V, const ProblemSetup &p, const EosModel &eos,
                         bool star);

// contact-wave data
inline constexpr double kContactRhoL = 0.7156521382;
inline constexpr double kContactRhoR = 0.2348529760;
inline constexpr double kContactP = 0.5122334291;
inline constexpr std::array<double, 2> kContactU{0.5915470932, -1.5792628803};
inline constexpr std::array<double, 2> kContactB{0.75, -0.5349102426};

/// Smooth magnetized vortex centred at the origin, translated by u_inf t on
/// the periodic box [-10, 10]^2. With r^2 = X^2 + Y^2 in the comoving frame
/// and a = exp((1 - r^2) / 2) / (2 pi):
///   u = u_inf + a (-Y, X),  B = a (-Y, X),
///   rho = 1 + rho_amp exp(1 - r^2),
///   p = 1 - r^2 exp(1 - r^2) / (8 pi^2) - rho_amp exp(2 (1 - r^2)) / (16 pi^2).
/// rho_amp = 0 is the usual constant-density vortex.
Primitive<double> vortex_state(const std::array<double, 2> &x, double t,
                               const std::array<double, 2> &u_inf, double rho_amp = 0.0);

}  // namespace gpmhd::bench
