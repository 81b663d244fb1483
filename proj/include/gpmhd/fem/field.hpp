#pragma once

#include <cstdint>
#include <vector>

#include "gpmhd/flux.hpp"

namespace gpmhd::fem {

/// Nodal coefficients, one conserved 9-vector per DOF.
using Field = std::vector<Conserved<double>>;

/// Per-DOF bit set of pinned components (bit c pins component c).
using PinMask = std::vector<std::uint16_t>;

inline constexpr std::uint16_t kAllComponents = (1u << kNumVars) - 1u;

}  // namespace gpmhd::fem
