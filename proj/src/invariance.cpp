#include "gpmhd/invariance.hpp"

#include <algorithm>

namespace gpmhd {

Mat3<double> RotationSpec::matrix() const {
  const double cp = std::cos(psi), sp = std::sin(psi);
  const double ct = std::cos(theta), st = std::sin(theta);
  const Mat3<double> Rpsi{{{cp, 0.0, sp}, {0.0, 1.0, 0.0}, {-sp, 0.0, cp}}};
  const Mat3<double> Rtheta{{{ct, st, 0.0}, {-st, ct, 0.0}, {0.0, 0.0, 1.0}}};
  return matmul(Rpsi, Rtheta);
}

Conserved<double> galilean_map(const Conserved<double> &r, double V) {
  Conserved<double> a = r;
  a[kMom] = r[kMom] - V * r[kRho];
  a[kEnergy] = r[kEnergy] - V * r[kMom] + 0.5 * V * V * r[kRho];
  return a;
}

namespace {

double max_diff(const Conserved<double> &a, const Conserved<double> &b) {
  double m = 0.0;
  for (int c = 0; c < kNumVars; ++c) m = std::max(m, std::abs(a[c] - b[c]));
  return m;
}

double uniform(std::mt19937_64 &rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

template <class T>
ConservedGradient<T> zero_gradient() {
  ConservedGradient<T> g;
  for (auto &row : g) row = zero_vec<T>();
  return g;
}

ResidualModel model_for(FluxVariant v, const ViscosityCoefficients &nu, const EosModel &eos) {
  ResidualModel m;
  m.eos = eos;
  m.flux = v;
  m.nu = nu;
  return m;
}

}  // namespace

State<double> random_state(std::mt19937_64 &rng, const EosModel &eos, bool with_phi) {
  const double rho = uniform(rng, 0.5, 2.0);
  const Vec3<double> u{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
  const double p = uniform(rng, 0.5, 2.0);
  const Vec3<double> B{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
  const double phi = with_phi ? uniform(rng, -0.5, 0.5) : 0.0;
  return from_primitive(eos, rho, u, p, B, phi, false);
}

RotationSpec random_rotation(std::mt19937_64 &rng) {
  return {uniform(rng, -M_PI, M_PI), uniform(rng, -M_PI, M_PI)};
}

SmoothField SmoothField::random(std::mt19937_64 &rng, int waves_per_component) {
  SmoothField f;
  for (int c = 0; c < 9; ++c) {
    auto &comp = f.comp[c];
    const bool positive = (c == 0 || c == 4);
    comp.mean = positive ? uniform(rng, 1.5, 2.5) : uniform(rng, -1.0, 1.0);
    for (int w = 0; w < waves_per_component; ++w) {
      Wave wave;
      wave.amp = uniform(rng, 0.05, 0.3);
      for (auto &k : wave.k) k = uniform(rng, -2.0, 2.0);
      wave.omega = uniform(rng, -1.0, 1.0);
      wave.phase = uniform(rng, 0.0, 2.0 * M_PI);
      comp.waves.push_back(wave);
    }
  }
  return f;
}

SmoothField SmoothField::constant(const Primitive<double> &w) {
  SmoothField f;
  f.comp[0].mean = w.rho;
  for (int j = 0; j < 3; ++j) {
    f.comp[1 + j].mean = w.u[j];
    f.comp[5 + j].mean = w.B[j];
  }
  f.comp[4].mean = w.p;
  f.comp[8].mean = w.phi;
  return f;
}

double check_advective_rotation(const State<double> &U, const RotationSpec &rot,
                                const EosModel &eos) {
  const auto R = rot.matrix();
  const auto Rt = transpose(R);
  const auto F = advective_flux(U, eos);
  const auto TU = State<double>::from(apply_T(R, U.to_array()), U.star);
  const auto Fr = advective_flux(TU, eos);
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    Conserved<double> lhs;
    lhs.fill(0.0);
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < kNumVars; ++c) lhs[c] += R[i][k] * F.F[k][c];
    m = std::max(m, max_diff(lhs, apply_T(Rt, Fr.F[i])));
  }
  return m;
}

double check_viscous_rotation_i(const State<double> &U, const Conserved<double> &g,
                                FluxVariant variant, const ViscosityCoefficients &nu,
                                const RotationSpec &rot, const EosModel &eos) {
  const auto R = rot.matrix();
  auto dU = zero_gradient<double>();
  for (int c = 0; c < kNumVars; ++c) dU[c][0] = g[c];
  const auto F = viscous_flux(variant, U, dU, nu, eos);
  const auto lhs = apply_T(R, F.F[0]);

  const auto TU = State<double>::from(apply_T(R, U.to_array()), U.star);
  const auto Tg = apply_T(R, g);
  auto dUr = zero_gradient<double>();
  for (int c = 0; c < kNumVars; ++c)
    for (int m = 0; m < 3; ++m) dUr[c][m] = R[m][0] * Tg[c];
  const auto Fr = viscous_flux(variant, TU, dUr, nu, eos);
  Conserved<double> rhs;
  rhs.fill(0.0);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < kNumVars; ++c) rhs[c] += R[i][0] * Fr.F[i][c];
  return max_diff(lhs, rhs);
}

double check_viscous_rotation_ii(const SmoothField &f, FluxVariant variant,
                                 const ViscosityCoefficients &nu, const RotationSpec &rot,
                                 const EosModel &eos, const std::array<double, 4> &X) {
  const auto R = rot.matrix();
  const auto model = model_for(variant, nu, eos);
  State<D1> U;
  ConservedGradient<D1> dU;
  detail::field_jet(f, model, X, U, dU);

  // Directional gradients: only row `dir` populated.
  auto only_row = [&](int dir) {
    auto g = zero_gradient<D1>();
    for (int c = 0; c < kNumVars; ++c) g[c][dir] = dU[c][dir];
    return g;
  };
  const auto Fa = viscous_flux(variant, U, only_row(1), nu, eos);
  const auto Fb = viscous_flux(variant, U, only_row(0), nu, eos);
  Conserved<double> inner;
  for (int c = 0; c < kNumVars; ++c) inner[c] = Fa.F[0][c].d[0] + Fb.F[1][c].d[1];
  const auto lhs = apply_T(R, inner);

  const auto TU = State<D1>::from(apply_T(R, U.to_array()), U.star);
  auto rotated_gradient = [&](int j) {
    Conserved<D1> col;
    for (int c = 0; c < kNumVars; ++c) col[c] = dU[c][j];
    const auto Tcol = apply_T(R, col);
    auto g = zero_gradient<D1>();
    for (int c = 0; c < kNumVars; ++c)
      for (int m = 0; m < 3; ++m) g[c][m] = R[m][j] * Tcol[c];
    return g;
  };
  const auto Fc = viscous_flux(variant, TU, rotated_gradient(1), nu, eos);
  const auto Fd = viscous_flux(variant, TU, rotated_gradient(0), nu, eos);
  Conserved<double> rhs;
  rhs.fill(0.0);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < kNumVars; ++c)
      rhs[c] += R[i][0] * Fc.F[i][c].d[0] + R[i][1] * Fd.F[i][c].d[1];
  return max_diff(lhs, rhs);
}

double check_psi_rotation(const State<double> &U, const Vec3<double> &dB_dx1,
                          const SourceConfig &cfg, const RotationSpec &rot) {
  const auto R = rot.matrix();
  const auto lhs = psi_source(U, dB_dx1[0], cfg);
  const auto TU = State<double>::from(apply_T(R, U.to_array()), U.star);
  const auto RdB = matvec(R, dB_dx1);
  Conserved<double> acc;
  acc.fill(0.0);
  for (int k = 0; k < 3; ++k) {
    // Psi^{d_k}(TU): only the d_k (TU)_{B_k} part of div B, whose x1 share is R(k,1) (R dB)_k.
    const auto part = psi_source(TU, RdB[k], cfg);
    for (int c = 0; c < kNumVars; ++c) acc[c] += R[k][0] * part[c];
  }
  return max_diff(lhs, apply_T(transpose(R), acc));
}

double check_viscous_divergence_rotation(const SmoothField &f, FluxVariant variant,
                                         const ViscosityCoefficients &nu,
                                         const RotationSpec &rot, const EosModel &eos,
                                         const std::array<double, 4> &X) {
  const auto R = rot.matrix();
  const auto model = model_for(variant, nu, eos);
  State<D1> U;
  ConservedGradient<D1> dU;
  detail::field_jet(f, model, X, U, dU);

  const auto F = viscous_flux(variant, U, dU, nu, eos);
  Conserved<double> div;
  for (int c = 0; c < kNumVars; ++c) {
    div[c] = 0.0;
    for (int k = 0; k < 3; ++k) div[c] += F.F[k][c].d[k];
  }
  const auto lhs = apply_T(R, div);

  const auto TU = State<D1>::from(apply_T(R, U.to_array()), U.star);
  std::array<Conserved<D1>, 3> Tcols;
  for (int j = 0; j < 3; ++j) {
    Conserved<D1> col;
    for (int c = 0; c < kNumVars; ++c) col[c] = dU[c][j];
    Tcols[j] = apply_T(R, col);
  }
  auto G = zero_gradient<D1>();
  for (int c = 0; c < kNumVars; ++c)
    for (int m = 0; m < 3; ++m)
      for (int j = 0; j < 3; ++j) G[c][m] = G[c][m] + R[m][j] * Tcols[j][c];
  const auto Fr = viscous_flux(variant, TU, G, nu, eos);
  Conserved<double> rhs;
  rhs.fill(0.0);
  for (int c = 0; c < kNumVars; ++c)
    for (int m = 0; m < 3; ++m)
      for (int j = 0; j < 3; ++j) rhs[c] += R[m][j] * Fr.F[m][c].d[j];
  return max_diff(lhs, rhs);
}

double check_galilean(const SmoothField &f, const ResidualModel &model,
                      const GalileanBoost &boost, const std::array<double, 4> &X) {
  return galilean_residual_at(f, model, boost.V, X);
}

namespace {

const char *variant_name(FluxVariant v) {
  switch (v) {
    case FluxVariant::GP: return "GP";
    case FluxVariant::GPs: return "GPs";
    case FluxVariant::Resistive: return "resistive";
    case FluxVariant::Monolithic: return "monolithic";
    case FluxVariant::None: return "none";
  }
  return "none";
}

ViscosityCoefficients random_nu(std::mt19937_64 &rng) {
  ViscosityCoefficients nu;
  nu.kappa = uniform(rng, 0.1, 1.0);
  nu.mu = uniform(rng, 0.1, 1.0);
  nu.eta = uniform(rng, 0.1, 1.0);
  nu.lambda = uniform(rng, 0.0, 0.5);
  nu.kappa_T = uniform(rng, 0.1, 1.0);
  nu.epsilon = uniform(rng, 0.1, 1.0);
  return nu;
}

std::array<double, 4> random_point(std::mt19937_64 &rng) {
  return {uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, 0, 1)};
}

}  // namespace

std::vector<SweepResult> rotation_suite(const SweepOptions &opt) {
  std::vector<SweepResult> out;
  const double tol = 1e-10;
  const std::array<double, 3> gammas{1.4, 5.0 / 3.0, 2.0};
  const std::array<FluxVariant, 4> variants{FluxVariant::GP, FluxVariant::GPs,
                                            FluxVariant::Resistive, FluxVariant::Monolithic};
  std::mt19937_64 rng(opt.seed);

  {
    SweepResult r{"rotation matrix orthogonality", opt.samples, 0.0, 1e-14};
    for (int s = 0; s < opt.samples; ++s) {
      const auto R = random_rotation(rng).matrix();
      const auto P = matmul(transpose(R), R);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          r.max_residual = std::max(r.max_residual, std::abs(P[i][j] - (i == j ? 1.0 : 0.0)));
    }
    out.push_back(r);
  }
  {
    SweepResult r{"advective flux rotation", opt.samples, 0.0, tol};
    for (int s = 0; s < opt.samples; ++s) {
      const EosModel eos(gammas[s % 3]);
      const auto U = random_state(rng, eos);
      r.max_residual = std::max(r.max_residual, check_advective_rotation(U, random_rotation(rng), eos));
    }
    out.push_back(r);
  }
  for (auto v : variants) {
    SweepResult r{std::string("viscous flux rotation, 1D gradient ") + variant_name(v), opt.samples, 0.0, tol};
    for (int s = 0; s < opt.samples; ++s) {
      const EosModel eos(gammas[s % 3]);
      const auto U = random_state(rng, eos);
      Conserved<double> g;
      for (auto &x : g) x = uniform(rng, -1, 1);
      r.max_residual = std::max(
          r.max_residual,
          check_viscous_rotation_i(U, g, v, random_nu(rng), random_rotation(rng), eos));
    }
    out.push_back(r);
  }
  for (auto v : variants) {
    SweepResult r{std::string("viscous flux rotation, mixed derivatives ") + variant_name(v), opt.samples, 0.0, tol};
    for (int s = 0; s < opt.samples; ++s) {
      const EosModel eos(gammas[s % 3]);
      const auto f = SmoothField::random(rng);
      r.max_residual =
          std::max(r.max_residual, check_viscous_rotation_ii(f, v, random_nu(rng),
                                                             random_rotation(rng), eos,
                                                             random_point(rng)));
    }
    out.push_back(r);
  }
  for (auto v : variants) {
    SweepResult r{std::string("viscous divergence rotation ") + variant_name(v), opt.samples,
                  0.0, tol};
    for (int s = 0; s < opt.samples; ++s) {
      const EosModel eos(gammas[s % 3]);
      const auto f = SmoothField::random(rng);
      r.max_residual = std::max(
          r.max_residual, check_viscous_divergence_rotation(f, v, random_nu(rng),
                                                            random_rotation(rng), eos,
                                                            random_point(rng)));
    }
    out.push_back(r);
  }
  {
    SweepResult r{"divergence source rotation", opt.samples, 0.0, tol};
    for (int s = 0; s < opt.samples; ++s) {
      const EosModel eos(gammas[s % 3]);
      const auto U = random_state(rng, eos);
      const Vec3<double> dB{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
      SourceConfig cfg;
      switch (s % 4) {
        case 0: cfg = SourceConfig::make(SourcePreset::Powell); break;
        case 1: cfg = SourceConfig::make(SourcePreset::Janhunen); break;
        case 2: cfg = SourceConfig::make(SourcePreset::BB); break;
        default:
          cfg = SourceConfig::custom(uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2));
      }
      r.max_residual = std::max(r.max_residual, check_psi_rotation(U, dB, cfg, random_rotation(rng)));
    }
    out.push_back(r);
  }
  return out;
}

std::vector<SweepResult> galilean_suite(const SweepOptions &opt) {
  struct Case {
    std::string name;
    FluxVariant flux;
    SourcePreset source;
    GlmVariant glm;
    bool expect_pass;
  };
  const std::vector<Case> cases{
      {"GP + Powell", FluxVariant::GP, SourcePreset::Powell, GlmVariant::None, true},
      {"GP + Janhunen", FluxVariant::GP, SourcePreset::Janhunen, GlmVariant::None, true},
      {"GP + BB", FluxVariant::GP, SourcePreset::BB, GlmVariant::None, false},
      {"GP + no source", FluxVariant::GP, SourcePreset::None, GlmVariant::None, false},
      {"GPs + Powell", FluxVariant::GPs, SourcePreset::Powell, GlmVariant::None, false},
      {"resistive + Powell", FluxVariant::Resistive, SourcePreset::Powell, GlmVariant::None, true},
      {"monolithic + Powell", FluxVariant::Monolithic, SourcePreset::Powell, GlmVariant::None, true},
      {"GP + Powell + Dedner GLM", FluxVariant::GP, SourcePreset::Powell,
       GlmVariant::DednerExtended, true},
      {"GP + Powell + nine-wave GLM", FluxVariant::GP, SourcePreset::Powell, GlmVariant::NineWave,
       true},
      {"GP + Powell + energy-conservative GLM", FluxVariant::GP, SourcePreset::Powell,
       GlmVariant::EnergyConservative, false},
  };
  std::vector<SweepResult> out;
  std::mt19937_64 rng(opt.seed + 7);
  for (const auto &cs : cases) {
    SweepResult r{"Galilean " + cs.name, opt.samples, 0.0, cs.expect_pass ? 1e-10 : 1e-3,
                  cs.expect_pass};
    for (int s = 0; s < opt.samples; ++s) {
      ResidualModel m;
      m.eos = EosModel(s % 2 ? 5.0 / 3.0 : 1.4);
      m.flux = cs.flux;
      m.nu = random_nu(rng);
      m.source = SourceConfig::make(cs.source);
      m.glm.variant = cs.glm;
      m.glm.c_h = uniform(rng, 0.5, 2.0);
      m.glm.c_r = 0.18;
      m.h = 0.5;
      const auto f = SmoothField::random(rng);
      r.max_residual = std::max(r.max_residual,
                                check_galilean(f, m, {opt.V}, random_point(rng)));
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace gpmhd
