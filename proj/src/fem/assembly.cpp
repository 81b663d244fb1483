#include "gpmhd/fem/assembly.hpp"

#include <cmath>

namespace gpmhd::fem {

namespace {

ViscosityCoefficients lerp_nu(const std::vector<ViscosityCoefficients> &nu, const int *dofs,
                              const double *phi, int nl) {
  ViscosityCoefficients r{0, 0, 0, 0, 0, 0};
  for (int a = 0; a < nl; ++a) {
    const auto &n = nu[dofs[a]];
    const double p = phi[a];
    r.kappa += p * n.kappa;
    r.mu += p * n.mu;
    r.eta += p * n.eta;
    r.lambda += p * n.lambda;
    r.kappa_T += p * n.kappa_T;
    r.epsilon += p * n.epsilon;
  }
  return r;
}

FluxBlock<double> dispatch_viscous(FluxVariant v, const State<double> &U,
                                   const StateGradient<double> &G,
                                   const ConservedGradient<double> &dU,
                                   const ViscosityCoefficients &nu, const EosModel &eos) {
  switch (v) {
    case FluxVariant::GP: return gp_flux(U, G, nu);
    case FluxVariant::GPs: return gps_flux(U, G, nu);
    case FluxVariant::Resistive: return resistive_flux(U, G, nu, eos);
    case FluxVariant::Monolithic: return monolithic_flux(dU, nu.epsilon);
    case FluxVariant::None: break;
  }
  return FluxBlock<double>{};
}

}  // namespace

void assemble_rhs(const FeSpace &V, const Physics &phys, const Field &U,
                  const std::vector<ViscosityCoefficients> &nu, const std::vector<double> &h,
                  Field &r, const AssemblyOptions &opt) {
  const int n = V.num_dofs();
  const int d = V.dim();
  const int nl = V.nloc();
  const int nq = V.nq();
  const bool star = phys.star();
  const bool viscous = opt.viscous && phys.flux != FluxVariant::None;
  const bool sources = opt.sources && (phys.source.active() || phys.glm.variant != GlmVariant::None);
  const bool gps = viscous && phys.flux == FluxVariant::GPs;

  r.assign(n, Conserved<double>{});
  std::vector<FluxBlock<double>> Fn(n);
  for (int i = 0; i < n; ++i) {
    const auto s = State<double>::from(U[i], star);
    if (!(s.rho > 0.0)) throw AssemblyError(-1, "non-positive nodal density at dof " + std::to_string(i));
    Fn[i] = advective_flux(s, phys.eos);
  }

  std::vector<Conserved<double>> loc(nl);
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    for (auto &x : loc) x.fill(0.0);
    for (int q = 0; q < nq; ++q) {
      const double w = V.wdet(c, q);
      const double *phi = V.phi_row(q);
      const double *g = V.dphi(c, q);

      Conserved<double> Uq{};
      ConservedGradient<double> dU{};
      Conserved<double> divF{};
      for (auto &v : dU) v = {0.0, 0.0, 0.0};
      for (int a = 0; a < nl; ++a) {
        const auto &Ua = U[dofs[a]];
        const auto &Fa = Fn[dofs[a]].F;
        for (int k = 0; k < kNumVars; ++k) {
          Uq[k] += phi[a] * Ua[k];
          for (int i = 0; i < d; ++i) {
            dU[k][i] += g[a * d + i] * Ua[k];
            divF[k] += g[a * d + i] * Fa[i][k];
          }
        }
      }
      if (!(Uq[kRho] > 0.0)) throw AssemblyError(c, "non-positive density at quadrature point");
      const auto s = State<double>::from(Uq, star);

      // volume terms multiplying phi_a
      Conserved<double> S{};
      if (opt.weak_advection) S.fill(0.0);
      else
        for (int k = 0; k < kNumVars; ++k) S[k] = -divF[k];

      if (sources) {
        const double divB = [&] {
          double v = 0.0;
          for (int i = 0; i < d; ++i) v += dU[kMag + i][i];
          return v;
        }();
        const auto psi = psi_source(s, divB, phys.source);
        double hq = 0.0;
        for (int a = 0; a < nl; ++a) hq += phi[a] * h[dofs[a]];
        const auto ups = glm_source(s, dU[kPhi], divB, phys.glm, hq);
        for (int k = 0; k < kNumVars; ++k) S[k] += psi[k] + ups[k];
      }

      // terms multiplying grad phi_a, row i
      std::array<Conserved<double>, 3> T{};
      for (auto &row : T) row.fill(0.0);
      if (opt.weak_advection) {
        for (int a = 0; a < nl; ++a) {
          const auto &Fa = Fn[dofs[a]].F;
          for (int i = 0; i < d; ++i)
            for (int k = 0; k < kNumVars; ++k) T[i][k] += phi[a] * Fa[i][k];
        }
      }
      if (viscous) {
        const auto nuq = lerp_nu(nu, dofs, phi, nl);
        const auto G = primitive_gradient(s, dU);
        const auto Fv = dispatch_viscous(phys.flux, s, G, dU, nuq, phys.eos);
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < kNumVars; ++k) T[i][k] -= Fv.F[i][k];
        if (gps) {
          // (div A . u / 2, v) = -1/2 [(A : grad u, v) + (A u, grad v)]
          const auto A = compensation_tensor(s, G, nuq.kappa);
          const auto u = s.velocity();
          double Agu = 0.0;
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < 3; ++j) Agu += A[i][j] * G.grad_u[i][j];
          S[kEnergy] -= 0.5 * Agu;
          for (int i = 0; i < d; ++i) T[i][kEnergy] -= 0.5 * dot(A[i], u);
        }
      }

      for (int a = 0; a < nl; ++a) {
        auto &ra = loc[a];
        const double wp = w * phi[a];
        for (int k = 0; k < kNumVars; ++k) {
          double v = wp * S[k];
          for (int i = 0; i < d; ++i) v += w * g[a * d + i] * T[i][k];
          ra[k] += v;
        }
      }
    }
    for (int a = 0; a < nl; ++a)
      for (int k = 0; k < kNumVars; ++k) r[dofs[a]][k] += loc[a][k];
  }
}

PinMask boundary_pins(const FeSpace &V) {
  PinMask pins(V.num_dofs(), 0);
  const auto &bc = V.mesh().bc;
  for (int i = 0; i < V.num_dofs(); ++i) {
    const unsigned m = V.boundary_mask(i);
    if (!m) continue;
    for (int d = 0; d < V.dim(); ++d) {
      const unsigned side = d == 0 ? (kXLo | kXHi) : (kYLo | kYHi);
      if (!(m & side)) continue;
      if (bc[d] == BoundaryKind::Dirichlet) pins[i] |= kAllComponents;
      if (bc[d] == BoundaryKind::SlipWall)
        pins[i] |= static_cast<std::uint16_t>((1u << (kMom + d)) | (1u << (kMag + d)));
    }
  }
  return pins;
}

void apply_bc(Field &r, const PinMask &pins) {
  for (size_t i = 0; i < r.size(); ++i) {
    if (!pins[i]) continue;
    for (int c = 0; c < kNumVars; ++c)
      if ((pins[i] >> c) & 1u) r[i][c] = 0.0;
  }
}

Field interpolate(const FeSpace &V,
                  const std::function<Conserved<double>(const std::array<double, 2> &)> &f) {
  Field U(V.num_dofs());
  for (int i = 0; i < V.num_dofs(); ++i) U[i] = f(V.node(i));
  return U;
}

Conserved<double> evaluate(const FeSpace &V, const Field &U, const std::array<double, 2> &x) {
  const auto loc = V.locate(x);
  std::vector<double> phi(V.nloc());
  V.basis().values(loc.xi, phi.data());
  const int *dofs = V.cell_dofs(loc.cell);
  Conserved<double> r{};
  for (int a = 0; a < V.nloc(); ++a)
    for (int k = 0; k < kNumVars; ++k) r[k] += phi[a] * U[dofs[a]][k];
  return r;
}

void gradient_at(const FeSpace &V, int c, int q, const std::vector<double> &f, double *out) {
  const int d = V.dim();
  const int *dofs = V.cell_dofs(c);
  const double *g = V.dphi(c, q);
  for (int i = 0; i < d; ++i) out[i] = 0.0;
  for (int a = 0; a < V.nloc(); ++a)
    for (int i = 0; i < d; ++i) out[i] += g[a * d + i] * f[dofs[a]];
}

std::vector<std::array<double, 2>> nodal_gradient(const FeSpace &V, const std::vector<double> &f) {
  const int d = V.dim();
  const int nl = V.nloc();
  // reference gradients at the reference nodes
  std::vector<double> gref(static_cast<size_t>(nl) * nl * d);
  for (int b = 0; b < nl; ++b) V.basis().gradients(V.basis().nodes()[b], &gref[static_cast<size_t>(b) * nl * d]);

  std::vector<std::array<double, 2>> grad(V.num_dofs(), {0.0, 0.0});
  std::vector<double> wsum(V.num_dofs(), 0.0);
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    const auto &J = V.jacobian(c);
    const double K = V.cell_volume(c);
    for (int b = 0; b < nl; ++b) {
      const double *gb = &gref[static_cast<size_t>(b) * nl * d];
      double gx = 0.0, gy = 0.0;
      for (int a = 0; a < nl; ++a) {
        gx += gb[a * d] * f[dofs[a]];
        if (d == 2) gy += gb[a * d + 1] * f[dofs[a]];
      }
      std::array<double, 2> gp{0.0, 0.0};
      if (d == 1) {
        gp[0] = gx / J[0];
      } else {
        const double det = J[0] * J[3] - J[2] * J[1];
        gp[0] = (J[3] * gx - J[1] * gy) / det;
        gp[1] = (-J[2] * gx + J[0] * gy) / det;
      }
      grad[dofs[b]][0] += K * gp[0];
      grad[dofs[b]][1] += K * gp[1];
      wsum[dofs[b]] += K;
    }
  }
  for (int i = 0; i < V.num_dofs(); ++i) {
    grad[i][0] /= wsum[i];
    grad[i][1] /= wsum[i];
  }
  return grad;
}

}  // namespace gpmhd::fem
