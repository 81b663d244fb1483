#include "gpmhd/stabilization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpmhd {

double max_wave_speed(const State<double> &U, const EosModel &eos) {
  const auto u = U.velocity();
  const double p = std::max(0.0, eos.pressure(U.rho, U.specific_internal_energy()));
  return std::sqrt(norm2(u)) + std::sqrt((eos.gamma() * p + norm2(U.B)) / U.rho);
}

double fast_speed(const State<double> &U, const EosModel &eos, const Vec3<double> &n) {
  const double p = std::max(0.0, eos.pressure(U.rho, U.specific_internal_energy()));
  const double a2 = eos.gamma() * p / U.rho;
  const double b2 = norm2(U.B) / U.rho;
  const double bn = dot(U.B, n);
  const double bn2 = bn * bn / U.rho;
  const double s = a2 + b2;
  const double cf2 = 0.5 * (s + std::sqrt(std::max(0.0, s * s - 4.0 * a2 * bn2)));
  return std::abs(dot(U.velocity(), n)) + std::sqrt(cf2);
}

ViscosityMode parse_viscosity_mode(const std::string &s) {
  if (s == "none") return ViscosityMode::None;
  if (s == "first_order") return ViscosityMode::FirstOrder;
  if (s == "rv") return ViscosityMode::RV;
  throw std::invalid_argument("unknown visc.mode '" + s + "'");
}

std::string to_string(ViscosityMode m) {
  switch (m) {
    case ViscosityMode::None: return "none";
    case ViscosityMode::FirstOrder: return "first_order";
    case ViscosityMode::RV: return "rv";
  }
  return "rv";
}

StartupMode parse_startup_mode(const std::string &s) {
  if (s == "rhs") return StartupMode::Rhs;
  if (s == "first_order") return StartupMode::FirstOrder;
  throw std::invalid_argument("unknown visc.startup '" + s + "'");
}

std::string to_string(StartupMode m) {
  return m == StartupMode::Rhs ? "rhs" : "first_order";
}

std::vector<double> nodal_wave_speed(const fem::Field &U, const EosModel &eos, bool star) {
  std::vector<double> lam(U.size());
  for (size_t i = 0; i < U.size(); ++i) lam[i] = max_wave_speed(State<double>::from(U[i], star), eos);
  return lam;
}

std::vector<double> first_order_viscosity(const std::vector<double> &h,
                                          const std::vector<double> &lambda) {
  std::vector<double> eps(h.size());
  for (size_t i = 0; i < h.size(); ++i) eps[i] = 0.5 * h[i] * std::abs(lambda[i]);
  return eps;
}

std::vector<double> residual_viscosity(const fem::FeSpace &V, const std::vector<double> &s,
                                       const std::vector<double> &ds_dt,
                                       const std::vector<std::array<double, 2>> &u,
                                       const std::vector<double> &h,
                                       const std::vector<double> &lambda, double C_E,
                                       const Eigen::VectorXd &lumped) {
  const size_t n = s.size();
  double mean = 0.0, vol = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mean += lumped[i] * s[i];
    vol += lumped[i];
  }
  mean /= vol;
  double dev = 0.0;
  for (size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(s[i] - mean));
  std::vector<double> eps(n, 0.0);
  if (dev == 0.0) return eps;
  const auto gs = fem::nodal_gradient(V, s);
  for (size_t i = 0; i < n; ++i) {
    const double R = (ds_dt[i] + u[i][0] * gs[i][0] + u[i][1] * gs[i][1]) / dev;
    eps[i] = std::min(0.5 * h[i] * std::abs(lambda[i]), C_E * h[i] * h[i] * std::abs(R));
  }
  return eps;
}

ViscosityCoefficients coefficients_for(FluxVariant flux, double eps, const ViscositySettings &vs) {
  ViscosityCoefficients nu{0, 0, 0, 0, 0, 0};
  switch (flux) {
    case FluxVariant::GP:
    case FluxVariant::GPs:
      nu.kappa = eps;
      nu.mu = eps;
      nu.eta = eps;
      break;
    case FluxVariant::Resistive:
      nu.mu = eps;
      nu.eta = eps;
      nu.kappa_T = eps;
      break;
    case FluxVariant::Monolithic:
      nu.epsilon = eps;
      break;
    case FluxVariant::None:
      return nu;
  }
  nu.kappa = std::max(nu.kappa, vs.kappa_phys);
  nu.mu = std::max(nu.mu, vs.mu_phys);
  nu.eta = std::max(nu.eta, vs.eta_phys);
  if (flux == FluxVariant::Resistive) nu.kappa_T = std::max(nu.kappa_T, vs.kappa_phys);
  return nu;
}

std::vector<double> nodal_entropy(const fem::Field &U, const EosModel &eos, bool star) {
  std::vector<double> s(U.size());
  for (size_t i = 0; i < U.size(); ++i) {
    const auto st = State<double>::from(U[i], star);
    s[i] = eos.specific_entropy(st.rho, st.specific_internal_energy());
  }
  return s;
}

void EntropyHistory::push(double t, std::vector<double> s) {
  if (!t_.empty() && t == t_.back()) {
    s_.back() = std::move(s);
    return;
  }
  s_.push_back(std::move(s));
  t_.push_back(t);
  while (s_.size() > 3) {
    s_.pop_front();
    t_.pop_front();
  }
}

std::vector<double> EntropyHistory::time_derivative() const {
  const size_t L = s_.size();
  if (L < 2) throw std::logic_error("entropy history: need two levels");
  const auto &s0 = s_[L - 1];
  std::vector<double> d(s0.size());
  const double dt1 = t_[L - 1] - t_[L - 2];
  if (L == 2) {
    for (size_t i = 0; i < d.size(); ++i) d[i] = (s0[i] - s_[L - 2][i]) / dt1;
    return d;
  }
  const double dt0 = t_[L - 2] - t_[L - 3];
  const double w = dt1 / dt0;
  const double c0 = (1.0 + 2.0 * w) / ((1.0 + w) * dt1);
  const double c1 = -(1.0 + w) / dt1;
  const double c2 = w * w / ((1.0 + w) * dt1);
  const auto &s1 = s_[L - 2];
  const auto &s2 = s_[L - 3];
  for (size_t i = 0; i < d.size(); ++i) d[i] = c0 * s0[i] + c1 * s1[i] + c2 * s2[i];
  return d;
}

std::vector<double> entropy_rate_from_rhs(const fem::Field &U, const fem::Field &dUdt,
                                          const EosModel &eos, bool star) {
  using D = Dual<double, 1>;
  std::vector<double> r(U.size());
  for (size_t i = 0; i < U.size(); ++i) {
    Conserved<D> c;
    for (int k = 0; k < kNumVars; ++k) {
      c[k].v = U[i][k];
      c[k].d[0] = dUdt[i][k];
    }
    const auto st = State<D>::from(c, star);
    r[i] = eos.specific_entropy(st.rho, st.specific_internal_energy()).d[0];
  }
  return r;
}

}  // namespace gpmhd
