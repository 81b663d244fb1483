#pragma once

// Ideal-gas closure: pressure, temperature, specific entropy and its partial
// derivatives, plus the 2x2 quadratic forms that govern the sign of the
// entropy production of the mass/internal-energy diffusion.

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "gpmhd/dual.hpp"

namespace gpmhd {

/// Partial derivatives of the specific entropy s(rho, e).
struct ThermoDerivatives {
  double s = 0.0;
  double s_e = 0.0;
  double s_rho = 0.0;
  double s_ee = 0.0;
  double s_rhorho = 0.0;
  double s_rhoe = 0.0;
};

class EosModel {
 public:
  explicit EosModel(double gamma = 1.4) : gamma_(gamma) {
    if (!(gamma > 1.0)) throw std::domain_error("EosModel: gamma must be > 1");
  }

  double gamma() const { return gamma_; }

  /// Heat capacity at constant pressure, gamma / (gamma - 1).
  double cp() const { return gamma_ / (gamma_ - 1.0); }

  /// p = (gamma - 1) rho e. Any real e is accepted.
  template <class T>
  T pressure(const T &rho, const T &e) const {
    if (!(value_of(rho) > 0.0)) throw std::domain_error("pressure: rho must be > 0");
    return (gamma_ - 1.0) * rho * e;
  }

  /// T = 1 / s_e = (gamma - 1) e.
  template <class T>
  T temperature(const T &e) const {
    return (gamma_ - 1.0) * e;
  }

  /// s = ln(e) / (gamma - 1) - ln(rho); the additive constant is dropped.
  template <class T>
  T specific_entropy(const T &rho, const T &e) const {
    check_state(value_of(rho), value_of(e));
    using std::log;
    return log(e) / (gamma_ - 1.0) - log(rho);
  }

  /// Specific internal energy recovered from a pressure.
  double internal_energy_from_pressure(double rho, double p) const {
    return p / ((gamma_ - 1.0) * rho);
  }

  double sound_speed_squared(double rho, double p) const { return gamma_ * p / rho; }

  ThermoDerivatives derivative_bundle(double rho, double e) const {
    check_state(rho, e);
    const double g1 = gamma_ - 1.0;
    ThermoDerivatives d;
    d.s = std::log(e) / g1 - std::log(rho);
    d.s_e = 1.0 / (g1 * e);
    d.s_rho = -1.0 / rho;
    d.s_ee = -1.0 / (g1 * e * e);
    d.s_rhorho = 1.0 / (rho * rho);
    d.s_rhoe = 0.0;
    return d;
  }

  static void check_state(double rho, double e) {
    if (!(rho > 0.0)) throw std::domain_error("thermo: rho must be > 0");
    if (!(e > 0.0)) throw std::domain_error("thermo: e must be > 0");
  }

 private:
  double gamma_;
};

/// Heat capacity at constant pressure for an ideal gas with this gamma.
double cp(double gamma);

/// Matrix of the quadratic form J1 in (grad rho, grad e), scaled by the mass
/// diffusivity: kappa * [[rho^-1 d_rho(rho^2 s_rho), rho s_rhoe],
///                       [rho s_rhoe,                rho s_ee  ]].
Eigen::Matrix2d j1_matrix(const EosModel &eos, double rho, double e, double kappa = 1.0);

/// J3 = J1-matrix + c_p^-1 rho (s_rho, s_e)^T (s_rho, s_e).
Eigen::Matrix2d j3_matrix(const EosModel &eos, double rho, double e);

/// Strict convexity test for the generalized entropy -rho phi(s):
/// phi'(s) > 0 and phi'(s) / c_p - phi''(s) > 0.
bool generalized_entropy_admissible(double phi, double phi1, double phi2, double s,
                                    double gamma);

/// Direct evaluation of
///   J1 = -f . grad(e s_e - rho s_rho) + l . grad(s_e) + kappa grad(rho) . grad(s)
/// with f = kappa grad(rho), l = kappa grad(rho e), via the chain rule in 3D.
double j1_direct(const EosModel &eos, double rho, double e, double kappa,
                 const std::array<double, 3> &grad_rho, const std::array<double, 3> &grad_e);

}  // namespace gpmhd
