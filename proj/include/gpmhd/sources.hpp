#pragma once

// Divergence source family Psi(alpha_m, alpha_E, alpha_B) and the three GLM
// cleaning variants. All terms are right-hand-side contributions.

#include <string>

#include "gpmhd/flux.hpp"

namespace gpmhd {

enum class SourcePreset { None, Powell, Janhunen, BB, Custom };

struct SourceConfig {
  SourcePreset preset = SourcePreset::None;
  double alpha_m = 0.0;
  double alpha_E = 0.0;
  double alpha_B = 0.0;

  static SourceConfig make(SourcePreset p);
  static SourceConfig custom(double am, double aE, double aB);
  bool active() const { return alpha_m != 0.0 || alpha_E != 0.0 || alpha_B != 0.0; }
};

/// True iff alpha_E - alpha_m - alpha_B == 1.
bool entropy_compatibility(const SourceConfig &cfg);

std::string to_string(SourcePreset p);

enum class GlmVariant { None, DednerExtended, NineWave, EnergyConservative };

struct GlmConfig {
  GlmVariant variant = GlmVariant::None;
  double c_h = 0.0;
  double c_r = 0.18;

  /// The nine-wave and energy-conservative variants store E* in the energy slot.
  bool stores_energy_star() const {
    return variant == GlmVariant::NineWave || variant == GlmVariant::EnergyConservative;
  }
};

std::string to_string(GlmVariant v);

/// (0, alpha_m B, alpha_E u.B, alpha_B u) div B
template <class T>
Conserved<T> psi_source(const State<T> &U, const T &div_B, const SourceConfig &cfg) {
  Conserved<T> s;
  s.fill(T(0));
  if (!cfg.active()) return s;
  const auto u = U.velocity();
  for (int j = 0; j < 3; ++j) {
    s[kMom + j] = cfg.alpha_m * U.B[j] * div_B;
    s[kMag + j] = cfg.alpha_B * u[j] * div_B;
  }
  s[kEnergy] = cfg.alpha_E * dot(u, U.B) * div_B;
  return s;
}

/// GLM terms. `h` is the local mesh-size indicator used by the Dedner damping.
template <class T>
Conserved<T> glm_source(const State<T> &U, const Vec3<T> &grad_phi, const T &div_B,
                        const GlmConfig &cfg, double h = 1.0) {
  Conserved<T> s;
  s.fill(T(0));
  const double ch = cfg.c_h;
  switch (cfg.variant) {
    case GlmVariant::None:
      return s;
    case GlmVariant::DednerExtended: {
      const auto u = U.velocity();
      s[kEnergy] = -ch * dot(U.B, grad_phi);
      for (int j = 0; j < 3; ++j) s[kMag + j] = -ch * grad_phi[j];
      s[kPhi] = -dot(u, grad_phi) - (cfg.c_r * ch / h) * U.phi - ch * div_B;
      return s;
    }
    case GlmVariant::NineWave: {
      const auto u = U.velocity();
      const T u_gphi = dot(u, grad_phi);
      s[kEnergy] = -ch * (dot(U.B, grad_phi) + U.phi * div_B) - U.phi * u_gphi;
      for (int j = 0; j < 3; ++j) s[kMag + j] = -ch * grad_phi[j];
      s[kPhi] = -u_gphi - ch * div_B;
      return s;
    }
    case GlmVariant::EnergyConservative: {
      s[kEnergy] = -ch * (dot(U.B, grad_phi) + U.phi * div_B);
      for (int j = 0; j < 3; ++j) s[kMag + j] = -ch * grad_phi[j];
      s[kPhi] = -ch * div_B;
      return s;
    }
  }
  return s;
}

}  // namespace gpmhd
