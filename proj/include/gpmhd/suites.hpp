#pragma once

// Randomized property sweeps over the thermodynamic closure and the viscous
// flux kernels. Rows share the SweepResult shape of the invariance sweeps.

#include <vector>

#include "gpmhd/invariance.hpp"

namespace gpmhd {

struct PropertyOptions {
  int state_samples = 10000;    ///< per gamma
  int kernel_samples = 100000;
  std::uint64_t seed = 12345;
};

/// EOS residual, definiteness of the mass-diffusion matrix and of J3, and
/// the generalized-entropy production kernel.
std::vector<SweepResult> thermo_suite(const PropertyOptions &opt);

/// Sign of the viscous and magnetic production kernels, antisymmetry of the
/// magnetic block, GP^s = GP for one-dimensional gradients.
std::vector<SweepResult> flux_suite(const PropertyOptions &opt);

}  // namespace gpmhd
