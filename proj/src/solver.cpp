#include "gpmhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gpmhd {

Discretization::Discretization(const fem::MeshSpec &mesh, int degree, const fem::Physics &phys,
                               bool lumped)
    : V_(mesh, degree), phys_(phys) {
  h_ = fem::mesh_size_field(V_);
  pins_ = fem::boundary_pins(V_);
  M_ = std::make_unique<fem::MassOperator>(V_, lumped, pins_);
  lumped_ = lumped ? M_->diagonal() : fem::consistent_mass(V_) * Eigen::VectorXd::Ones(V_.num_dofs());
}

void Discretization::rate(const fem::Field &U, const std::vector<ViscosityCoefficients> &nu,
                          fem::Field &out, const fem::AssemblyOptions &opt) const {
  fem::Field r;
  fem::assemble_rhs(V_, phys_, U, nu, h_, r, opt);
  fem::apply_bc(r, pins_);
  M_->solve(r, out);
}

double compute_dt(const fem::Field &U, const std::vector<double> &h, double cfl,
                  const EosModel &eos, bool star) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < U.size(); ++i) {
    const auto s = State<double>::from(U[i], star);
    if (!(s.rho > 0.0)) throw std::domain_error("compute_dt: vacuum state");
    const double lam = max_wave_speed(s, eos);
    if (!(lam > 0.0)) throw std::domain_error("compute_dt: zero wave speed");
    m = std::min(m, h[i] / lam);
  }
  return cfl * m;
}

Simulation::Simulation(Discretization &disc, fem::Field U0, const ViscositySettings &visc,
                       double cfl, double t0)
    : disc_(disc), U_(std::move(U0)), visc_(visc), cfl_(cfl), t_(t0) {
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be > 0");
}

void Simulation::prepare() {
  auto &phys = disc_.physics();
  const bool star = phys.star();
  const auto lam = nodal_wave_speed(U_, phys.eos, star);
  if (phys.glm.variant != GlmVariant::None) phys.glm.c_h = *std::max_element(lam.begin(), lam.end());

  const auto &h = disc_.h();
  const size_t n = U_.size();
  switch (visc_.mode) {
    case ViscosityMode::None:
      eps_.assign(n, 0.0);
      break;
    case ViscosityMode::FirstOrder:
      eps_ = first_order_viscosity(h, lam);
      break;
    case ViscosityMode::RV: {
      auto s = nodal_entropy(U_, phys.eos, star);
      hist_.push(t_, s);
      std::vector<double> ds;
      if (hist_.levels() >= 3) {
        ds = hist_.time_derivative();
      } else if (visc_.startup == StartupMode::Rhs) {
        fem::Field dU;
        const std::vector<ViscosityCoefficients> zero(n, ViscosityCoefficients{0, 0, 0, 0, 0, 0});
        fem::AssemblyOptions opt;
        opt.viscous = false;
        disc_.rate(U_, zero, dU, opt);
        ds = entropy_rate_from_rhs(U_, dU, phys.eos, star);
      }
      if (ds.empty()) {
        eps_ = first_order_viscosity(h, lam);
      } else {
        std::vector<std::array<double, 2>> u(n);
        for (size_t i = 0; i < n; ++i) {
          const auto v = State<double>::from(U_[i], star).velocity();
          u[i] = {v[0], v[1]};
        }
        eps_ = residual_viscosity(disc_.space(), s, ds, u, h, lam, visc_.C_E, disc_.lumped());
      }
      break;
    }
  }
  nu_.resize(n);
  for (size_t i = 0; i < n; ++i) nu_[i] = coefficients_for(phys.flux, eps_[i], visc_);
}

void Simulation::advance(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  fem::Field before = U_;
  try {
    ssprk54_step(U_, dt, [&](const fem::Field &u, fem::Field &out) { disc_.rate(u, nu_, out); });
  } catch (const fem::AssemblyError &e) {
    U_ = before;
    throw RuntimeAbort(std::string("assembly failed: ") + e.what(), std::move(before), t_);
  }
  for (size_t i = 0; i < U_.size(); ++i) {
    bool ok = U_[i][kRho] > 0.0;
    for (double v : U_[i]) ok = ok && std::isfinite(v);
    if (!ok) {
      U_.swap(before);
      throw RuntimeAbort("non-finite or non-positive density at dof " + std::to_string(i),
                         U_, t_);
    }
  }
  t_ += dt;
  ++step_;
}

double Simulation::step(double t_final) {
  prepare();
  const auto &phys = disc_.physics();
  double dt = compute_dt(U_, disc_.h(), cfl_, phys.eos, phys.star());
  if (t_ + dt > t_final) dt = t_final - t_;
  advance(dt);
  return dt;
}

void Simulation::run(double t_final, long max_steps,
                     const std::function<void(const Simulation &, const StepReport &)> &after_step) {
  const double tol = 1e-14 * std::max(1.0, std::abs(t_final));
  while (t_final - t_ > tol && (max_steps < 0 || step_ < max_steps)) {
    const double dt = step(t_final);
    if (after_step) after_step(*this, StepReport{step_, t_, dt});
  }
}

}  // namespace gpmhd
