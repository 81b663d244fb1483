#pragma once

// Wave-speed bound, first-order viscosity and the entropy-residual viscosity.

#include <deque>
#include <string>
#include <vector>

#include "gpmhd/fem/assembly.hpp"
#include "gpmhd/fem/field.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/flux.hpp"

namespace gpmhd {

/// |u| + sqrt(gamma p / rho + |B|^2 / rho). Bounds the fast speed in every
/// direction; negative pressures are clipped to 0.
double max_wave_speed(const State<double> &U, const EosModel &eos);

/// Exact fast magnetosonic speed along the unit vector n.
double fast_speed(const State<double> &U, const EosModel &eos, const Vec3<double> &n);

enum class ViscosityMode { None, FirstOrder, RV };
enum class StartupMode { Rhs, FirstOrder };

ViscosityMode parse_viscosity_mode(const std::string &s);
std::string to_string(ViscosityMode m);
StartupMode parse_startup_mode(const std::string &s);
std::string to_string(StartupMode m);

struct ViscositySettings {
  ViscosityMode mode = ViscosityMode::RV;
  double C_E = 1.0;
  double kappa_phys = 0.0;
  double mu_phys = 0.0;
  double eta_phys = 0.0;
  StartupMode startup = StartupMode::Rhs;
};

/// Nodal wave-speed bounds.
std::vector<double> nodal_wave_speed(const fem::Field &U, const EosModel &eos, bool star);

/// eps_i = h_i lambda_i / 2.
std::vector<double> first_order_viscosity(const std::vector<double> &h,
                                          const std::vector<double> &lambda);

/// eps_i = min(h_i lambda_i / 2, C_E h_i^2 |R_i|) with R_i the nodal entropy
/// residual d_t s + u . grad s divided by max_j |s_j - mean s|. A constant
/// entropy field gives 0.
std::vector<double> residual_viscosity(const fem::FeSpace &V, const std::vector<double> &s,
                                       const std::vector<double> &ds_dt,
                                       const std::vector<std::array<double, 2>> &u,
                                       const std::vector<double> &h,
                                       const std::vector<double> &lambda, double C_E,
                                       const Eigen::VectorXd &lumped);

/// Maps a scalar viscosity to the coefficients of a flux variant and applies
/// the physical floors.
ViscosityCoefficients coefficients_for(FluxVariant flux, double eps, const ViscositySettings &vs);

/// Nodal specific entropy.
std::vector<double> nodal_entropy(const fem::Field &U, const EosModel &eos, bool star);

/// Entropy history and variable-step BDF2 time derivative.
class EntropyHistory {
 public:
  void push(double t, std::vector<double> s);
  size_t levels() const { return s_.size(); }
  /// BDF2 on the last three levels (BDF1 on two).
  std::vector<double> time_derivative() const;
  void clear() {
    s_.clear();
    t_.clear();
  }

 private:
  std::deque<std::vector<double>> s_;
  std::deque<double> t_;
};

/// d_t s at the nodes from the semi-discrete inviscid right-hand side:
/// s_rho d_t rho + s_e d_t e with d_t U = M^-1 r(U).
std::vector<double> entropy_rate_from_rhs(const fem::Field &U, const fem::Field &dUdt,
                                          const EosModel &eos, bool star);

}  // namespace gpmhd
