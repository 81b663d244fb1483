#pragma once

// Pointwise advective and viscous fluxes of the regularized MHD system.
//
// Conserved layout (always 9 slots, independent of the mesh dimension):
//   0 rho | 1..3 m | 4 E (or E* = E + Phi^2/2) | 5..7 B | 8 Phi
// A FluxBlock F holds F[i][c], the flux of component c in direction x_i, so the
// divergence of component c is sum_i d_i F[i][c].

#include <array>
#include <stdexcept>

#include "gpmhd/dual.hpp"
#include "gpmhd/tensor.hpp"
#include "gpmhd/thermo.hpp"

namespace gpmhd {

inline constexpr int kNumVars = 9;
inline constexpr int kRho = 0;
inline constexpr int kMom = 1;
inline constexpr int kEnergy = 4;
inline constexpr int kMag = 5;
inline constexpr int kPhi = 8;

template <class T>
using Conserved = std::array<T, kNumVars>;

template <class T>
struct State {
  T rho{};
  Vec3<T> m{};
  T E{};  ///< stored energy; E* when `star` is set
  Vec3<T> B{};
  T phi{};
  bool star = false;

  static State from(const Conserved<T> &c, bool star = false) {
    State s;
    s.rho = c[kRho];
    s.E = c[kEnergy];
    s.phi = c[kPhi];
    for (int j = 0; j < 3; ++j) {
      s.m[j] = c[kMom + j];
      s.B[j] = c[kMag + j];
    }
    s.star = star;
    return s;
  }

  Conserved<T> to_array() const {
    Conserved<T> c;
    c[kRho] = rho;
    c[kEnergy] = E;
    c[kPhi] = phi;
    for (int j = 0; j < 3; ++j) {
      c[kMom + j] = m[j];
      c[kMag + j] = B[j];
    }
    return c;
  }

  Vec3<T> velocity() const {
    if (!(value_of(rho) > 0.0)) throw std::domain_error("state: rho must be > 0");
    return scale(T(1) / rho, m);
  }

  /// rho e = E - |m|^2 / (2 rho) - |B|^2 / 2 [- Phi^2 / 2].
  T internal_energy_density() const {
    const auto u = velocity();
    T re = E - 0.5 * dot(m, u) - 0.5 * norm2(B);
    if (star) re = re - 0.5 * phi * phi;
    return re;
  }

  /// Specific internal energy e.
  T specific_internal_energy() const { return internal_energy_density() / rho; }
};

/// Primitive variables (rho, u, p, B, Phi).
template <class T>
struct Primitive {
  T rho{};
  Vec3<T> u{};
  T p{};
  Vec3<T> B{};
  T phi{};
};

/// Conserved state from primitive variables (rho, u, p, B, Phi).
template <class T>
State<T> from_primitive(const EosModel &eos, const T &rho, const Vec3<T> &u, const T &p,
                        const Vec3<T> &B, const T &phi = T(0), bool star = false);

template <class T>
State<T> from_primitive(const EosModel &eos, const Primitive<T> &w, bool star = false) {
  return from_primitive(eos, w.rho, w.u, w.p, w.B, w.phi, star);
}

template <class T>
State<T> from_primitive(const EosModel &eos, const T &rho, const Vec3<T> &u, const T &p,
                        const Vec3<T> &B, const T &phi, bool star) {
  State<T> s;
  s.rho = rho;
  s.m = scale(rho, u);
  s.E = p / (eos.gamma() - 1.0) + 0.5 * rho * norm2(u) + 0.5 * norm2(B);
  if (star) s.E = s.E + 0.5 * phi * phi;
  s.B = B;
  s.phi = phi;
  s.star = star;
  return s;
}

/// Spatial gradients of the conserved variables: dU[c][i] = d_i U_c.
template <class T>
using ConservedGradient = std::array<Vec3<T>, kNumVars>;

template <class T>
struct StateGradient {
  Vec3<T> grad_rho{};
  Mat3<T> grad_u{};  ///< (i, j) = d_i u_j
  Vec3<T> grad_rho_e{};
  Mat3<T> grad_B{};  ///< (i, j) = d_i B_j
  Vec3<T> grad_phi{};
};

/// Primitive gradients from conserved gradients (chain rule through u = m/rho
/// and rho e = E - |m|^2/(2 rho) - |B|^2/2 [- Phi^2/2]).
template <class T>
StateGradient<T> primitive_gradient(const State<T> &U, const ConservedGradient<T> &dU) {
  StateGradient<T> G;
  const auto u = U.velocity();
  const T inv_rho = T(1) / U.rho;
  const T half_u2 = 0.5 * norm2(u);
  for (int i = 0; i < 3; ++i) {
    const T dr = dU[kRho][i];
    G.grad_rho[i] = dr;
    T dre = dU[kEnergy][i] + half_u2 * dr;
    for (int j = 0; j < 3; ++j) {
      const T dm = dU[kMom + j][i];
      G.grad_u[i][j] = (dm - u[j] * dr) * inv_rho;
      G.grad_B[i][j] = dU[kMag + j][i];
      dre = dre - u[j] * dm - U.B[j] * dU[kMag + j][i];
    }
    if (U.star) dre = dre - U.phi * dU[kPhi][i];
    G.grad_rho_e[i] = dre;
    G.grad_phi[i] = dU[kPhi][i];
  }
  return G;
}

struct ViscosityCoefficients {
  double kappa = 0.0;
  double mu = 0.0;
  double eta = 0.0;
  double lambda = 0.0;   ///< bulk viscosity, resistive flux only
  double kappa_T = 0.0;  ///< thermal diffusivity, resistive flux only
  double epsilon = 0.0;  ///< monolithic coefficient

  /// All coefficients equal to `eps` (lambda stays 0).
  static ViscosityCoefficients uniform(double eps) {
    return {eps, eps, eps, 0.0, eps, eps};
  }
};

template <class T>
struct FluxBlock {
  std::array<Conserved<T>, 3> F{};

  FluxBlock() {
    for (auto &row : F) row.fill(T(0));
  }

  Vec3<T> mass() const { return {F[0][kRho], F[1][kRho], F[2][kRho]}; }
  Vec3<T> energy() const { return {F[0][kEnergy], F[1][kEnergy], F[2][kEnergy]}; }
  Vec3<T> phi() const { return {F[0][kPhi], F[1][kPhi], F[2][kPhi]}; }
  Mat3<T> momentum() const { return block(kMom); }
  Mat3<T> magnetic() const { return block(kMag); }

  void set_mass(const Vec3<T> &v) { set_vec(kRho, v); }
  void set_energy(const Vec3<T> &v) { set_vec(kEnergy, v); }
  void set_momentum(const Mat3<T> &a) { set_block(kMom, a); }
  void set_magnetic(const Mat3<T> &a) { set_block(kMag, a); }

 private:
  Mat3<T> block(int off) const {
    Mat3<T> a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a[i][j] = F[i][off + j];
    return a;
  }
  void set_vec(int c, const Vec3<T> &v) {
    for (int i = 0; i < 3; ++i) F[i][c] = v[i];
  }
  void set_block(int off, const Mat3<T> &a) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) F[i][off + j] = a[i][j];
  }
};

enum class FluxVariant { GP, GPs, Resistive, Monolithic, None };

/// Maxwell stress beta = -|B|^2/2 I + B (x) B.
template <class T>
Mat3<T> maxwell_stress(const Vec3<T> &B) {
  auto beta = outer(B, B);
  const T half_b2 = 0.5 * norm2(B);
  for (int i = 0; i < 3; ++i) beta[i][i] = beta[i][i] - half_b2;
  return beta;
}

template <class T>
FluxBlock<T> advective_flux(const State<T> &U, const EosModel &eos) {
  const auto u = U.velocity();
  const T e = U.specific_internal_energy();
  const T p = eos.pressure(U.rho, e);
  const auto beta = maxwell_stress(U.B);
  FluxBlock<T> f;
  f.set_mass(U.m);
  auto mom = sub(outer(U.m, u), beta);
  for (int i = 0; i < 3; ++i) mom[i][i] = mom[i][i] + p;
  f.set_momentum(mom);
  // The total-energy flux always carries E, not E*.
  const T E = U.star ? U.E - 0.5 * U.phi * U.phi : U.E;
  f.set_energy(sub(scale(E + p, u), matvec(beta, u)));
  f.set_magnetic(sub(outer(u, U.B), outer(U.B, u)));
  return f;
}

/// k = eta (grad B - grad B^T)
template <class T>
Mat3<T> magnetic_viscous_block(const Mat3<T> &grad_B, double eta) {
  return scale(eta, sub(grad_B, transpose(grad_B)));
}

namespace detail {
template <class T>
FluxBlock<T> gp_family(const State<T> &U, const StateGradient<T> &G,
                       const ViscosityCoefficients &nu, bool symmetric) {
  const auto u = U.velocity();
  const auto f = scale(nu.kappa, G.grad_rho);
  const auto Su = symmetric_part(G.grad_u);
  const auto k = magnetic_viscous_block(G.grad_B, nu.eta);
  FluxBlock<T> F;
  F.set_mass(f);
  auto mom = scale(nu.mu * U.rho, Su);
  if (symmetric)
    mom = add(mom, scale(0.5, add(outer(f, u), outer(u, f))));
  else
    mom = add(mom, outer(f, u));
  F.set_momentum(mom);
  auto en = scale(nu.kappa, G.grad_rho_e);
  en = add(en, scale(0.5 * norm2(u), f));
  en = add(en, scale(nu.mu * U.rho, matvec(Su, u)));
  en = add(en, matvec(k, U.B));
  F.set_energy(en);
  F.set_magnetic(k);
  return F;
}
}  // namespace detail

template <class T>
FluxBlock<T> gp_flux(const State<T> &U, const StateGradient<T> &G,
                     const ViscosityCoefficients &nu) {
  return detail::gp_family(U, G, nu, false);
}

/// GP flux with the momentum mass-diffusion term symmetrized.
template <class T>
FluxBlock<T> gps_flux(const State<T> &U, const StateGradient<T> &G,
                      const ViscosityCoefficients &nu) {
  return detail::gp_family(U, G, nu, true);
}

/// A = u (x) (kappa grad rho) - (kappa grad rho) (x) u. The energy
/// compensation of the GP^s system is (div A) . u / 2.
template <class T>
Mat3<T> compensation_tensor(const State<T> &U, const StateGradient<T> &G, double kappa) {
  const auto u = U.velocity();
  const auto f = scale(kappa, G.grad_rho);
  return sub(outer(u, f), outer(f, u));
}

/// Energy source (div A) . u / 2 given the divergence (div A)_j = sum_i d_i A(i, j).
template <class T>
T gps_energy_compensation(const Vec3<T> &div_A, const Vec3<T> &u) {
  return 0.5 * dot(div_A, u);
}

template <class T>
FluxBlock<T> resistive_flux(const State<T> &U, const StateGradient<T> &G,
                            const ViscosityCoefficients &nu, const EosModel &eos) {
  const auto u = U.velocity();
  const T e = U.specific_internal_energy();
  const auto k = magnetic_viscous_block(G.grad_B, nu.eta);
  auto tau = scale(2.0 * nu.mu, symmetric_part(G.grad_u));
  const T div_u = G.grad_u[0][0] + G.grad_u[1][1] + G.grad_u[2][2];
  for (int i = 0; i < 3; ++i) tau[i][i] = tau[i][i] + nu.lambda * div_u;
  // grad T = (gamma - 1) grad e, grad e = (grad(rho e) - e grad rho) / rho
  const auto grad_e = scale(T(1) / U.rho, sub(G.grad_rho_e, scale(e, G.grad_rho)));
  const auto grad_T = scale(eos.gamma() - 1.0, grad_e);
  FluxBlock<T> F;
  F.set_momentum(tau);
  F.set_energy(add(add(matvec(tau, u), scale(nu.kappa_T, grad_T)), matvec(k, U.B)));
  F.set_magnetic(k);
  return F;
}

/// F = epsilon grad U, every conserved slot.
template <class T>
FluxBlock<T> monolithic_flux(const ConservedGradient<T> &dU, double epsilon) {
  FluxBlock<T> F;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < kNumVars; ++c) F.F[i][c] = epsilon * dU[c][i];
  return F;
}

/// Viscous flux for a variant; the GP^s compensation is handled separately.
template <class T>
FluxBlock<T> viscous_flux(FluxVariant v, const State<T> &U, const ConservedGradient<T> &dU,
                          const ViscosityCoefficients &nu, const EosModel &eos) {
  switch (v) {
    case FluxVariant::GP:
      return gp_flux(U, primitive_gradient(U, dU), nu);
    case FluxVariant::GPs:
      return gps_flux(U, primitive_gradient(U, dU), nu);
    case FluxVariant::Resistive:
      return resistive_flux(U, primitive_gradient(U, dU), nu, eos);
    case FluxVariant::Monolithic:
      return monolithic_flux(dU, nu.epsilon);
    case FluxVariant::None:
      break;
  }
  return FluxBlock<T>{};
}

}  // namespace gpmhd
