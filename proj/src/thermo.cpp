#include "gpmhd/thermo.hpp"

namespace gpmhd {

double cp(double gamma) {
  if (!(gamma > 1.0)) throw std::domain_error("cp: gamma must be > 1");
  return gamma / (gamma - 1.0);
}

Eigen::Matrix2d j1_matrix(const EosModel &eos, double rho, double e, double kappa) {
  const auto d = eos.derivative_bundle(rho, e);
  // rho^-1 d_rho(rho^2 s_rho) = 2 s_rho + rho s_rhorho
  const double a = 2.0 * d.s_rho + rho * d.s_rhorho;
  Eigen::Matrix2d m;
  m << a, rho * d.s_rhoe, rho * d.s_rhoe, rho * d.s_ee;
  return kappa * m;
}

Eigen::Matrix2d j3_matrix(const EosModel &eos, double rho, double e) {
  const auto d = eos.derivative_bundle(rho, e);
  const double inv_cp = 1.0 / eos.cp();
  Eigen::Matrix2d m = j1_matrix(eos, rho, e, 1.0);
  m(0, 0) += inv_cp * rho * d.s_rho * d.s_rho;
  m(0, 1) += inv_cp * rho * d.s_rho * d.s_e;
  m(1, 0) += inv_cp * rho * d.s_rho * d.s_e;
  m(1, 1) += inv_cp * rho * d.s_e * d.s_e;
  return m;
}

bool generalized_entropy_admissible(double /*phi*/, double phi1, double phi2, double /*s*/,
                                    double gamma) {
  return phi1 > 0.0 && phi1 / cp(gamma) - phi2 > 0.0;
}

double j1_direct(const EosModel &eos, double rho, double e, double kappa,
                 const std::array<double, 3> &grad_rho, const std::array<double, 3> &grad_e) {
  const auto d = eos.derivative_bundle(rho, e);
  double result = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double f = kappa * grad_rho[i];
    const double l = kappa * (e * grad_rho[i] + rho * grad_e[i]);
    // d(e s_e - rho s_rho) = (s_e + e s_ee) de + e s_rhoe drho - (s_rho + rho s_rhorho) drho
    //                        - rho s_rhoe de
    const double d_combo = (d.s_e + e * d.s_ee - rho * d.s_rhoe) * grad_e[i] +
                           (e * d.s_rhoe - d.s_rho - rho * d.s_rhorho) * grad_rho[i];
    const double d_se = d.s_ee * grad_e[i] + d.s_rhoe * grad_rho[i];
    const double d_s = d.s_rho * grad_rho[i] + d.s_e * grad_e[i];
    result += -f * d_combo + l * d_se + kappa * grad_rho[i] * d_s;
  }
  return result;
}

}  // namespace gpmhd
