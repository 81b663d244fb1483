#pragma once

// SSPRK(5,4) time stepping, CFL control and the step loop.

#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "gpmhd/fem/assembly.hpp"
#include "gpmhd/fem/mass.hpp"
#include "gpmhd/fem/space.hpp"
#include "gpmhd/stabilization.hpp"

namespace gpmhd {

namespace detail {
inline double &at(std::vector<double> &v, size_t i, int) { return v[i]; }
inline double at(const std::vector<double> &v, size_t i, int) { return v[i]; }
inline double &at(fem::Field &v, size_t i, int k) { return v[i][k]; }
inline double at(const fem::Field &v, size_t i, int k) { return v[i][k]; }
template <class Vec>
constexpr int width() {
  if constexpr (std::is_same_v<Vec, fem::Field>) return kNumVars; else return 1;
}

// out = base + sum a (v - base) + sum b L. The convex weights act on
// differences so that a state with zero rate is reproduced bit for bit.
template <class Vec>
void combine(Vec &out, const Vec &base, std::initializer_list<std::pair<double, const Vec *>> states,
             std::initializer_list<std::pair<double, const Vec *>> rates) {
  Vec r = base;
  for (size_t i = 0; i < base.size(); ++i)
    for (int k = 0; k < width<Vec>(); ++k) {
      const double b = at(base, i, k);
      double d = 0.0;
      for (const auto &[a, v] : states) d += a * (at(*v, i, k) - b);
      for (const auto &[a, v] : rates) d += a * at(*v, i, k);
      at(r, i, k) = b + d;
    }
  out.swap(r);
}
}  // namespace detail

/// One step of the five-stage fourth-order strong-stability-preserving
/// Runge-Kutta method. `rate(u, out)` writes du/dt.
template <class Vec, class Rate>
void ssprk54_step(Vec &u, double dt, Rate &&rate) {
  using detail::combine;
  Vec L, u1, u2, u3, u4, L3;
  rate(u, L);
  combine(u1, u, {}, {{0.391752226571890 * dt, &L}});
  rate(u1, L);
  combine(u2, u, {{0.555629506348765, &u1}}, {{0.368410593050371 * dt, &L}});
  rate(u2, L);
  combine(u3, u, {{0.379898148511597, &u2}}, {{0.251891774271694 * dt, &L}});
  rate(u3, L3);
  combine(u4, u, {{0.821920045606868, &u3}}, {{0.544974750228521 * dt, &L3}});
  rate(u4, L);
  combine(u, u, {{0.517231671970585, &u2}, {0.096059710526147, &u3}, {0.386708617503269, &u4}},
          {{0.063692468666290 * dt, &L3}, {0.226007483236906 * dt, &L}});
}

/// Raised when a step produces NaN or non-positive density. Carries the last
/// valid state.
class RuntimeAbort : public std::runtime_error {
 public:
  RuntimeAbort(const std::string &what, fem::Field last_valid, double t)
      : std::runtime_error(what), last_valid_(std::move(last_valid)), t_(t) {}
  const fem::Field &last_valid() const { return last_valid_; }
  double time() const { return t_; }

 private:
  fem::Field last_valid_;
  double t_;
};

/// Space, mesh-size field, mass operator, boundary pins and physics.
class Discretization {
 public:
  Discretization(const fem::MeshSpec &mesh, int degree, const fem::Physics &phys, bool lumped);

  const fem::FeSpace &space() const { return V_; }
  const std::vector<double> &h() const { return h_; }
  const fem::PinMask &pins() const { return pins_; }
  const fem::MassOperator &mass() const { return *M_; }
  const Eigen::VectorXd &lumped() const { return lumped_; }
  fem::Physics &physics() { return phys_; }
  const fem::Physics &physics() const { return phys_; }

  /// du/dt = M^-1 bc(r(U)).
  void rate(const fem::Field &U, const std::vector<ViscosityCoefficients> &nu, fem::Field &out,
            const fem::AssemblyOptions &opt = {}) const;

 private:
  fem::FeSpace V_;
  fem::Physics phys_;
  std::vector<double> h_;
  fem::PinMask pins_;
  std::unique_ptr<fem::MassOperator> M_;
  Eigen::VectorXd lumped_;
};

/// dt = cfl min_i h_i / lambda_i. Throws on vacuum.
double compute_dt(const fem::Field &U, const std::vector<double> &h, double cfl,
                  const EosModel &eos, bool star);

struct StepReport {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
};

class Simulation {
 public:
  Simulation(Discretization &disc, fem::Field U0, const ViscositySettings &visc, double cfl,
             double t0 = 0.0);

  const fem::Field &state() const { return U_; }
  double time() const { return t_; }
  long steps() const { return step_; }
  const std::vector<ViscosityCoefficients> &viscosity() const { return nu_; }
  const std::vector<double> &epsilon() const { return eps_; }
  Discretization &discretization() { return disc_; }

  /// Refreshes c_h and the frozen viscosity field for the next step.
  void prepare();
  /// Advances by dt (prepare() must have been called).
  void advance(double dt);
  /// One full step toward t_final; returns the dt used.
  double step(double t_final);
  /// Steps until t_final or max_steps; `after_step` is called after each step.
  void run(double t_final, long max_steps = -1,
           const std::function<void(const Simulation &, const StepReport &)> &after_step = {});

 private:
  Discretization &disc_;
  fem::Field U_;
  ViscositySettings visc_;
  double cfl_;
  double t_;
  long step_ = 0;
  EntropyHistory hist_;
  std::vector<ViscosityCoefficients> nu_;
  std::vector<double> eps_;
};

}  // namespace gpmhd
