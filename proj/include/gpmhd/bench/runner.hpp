#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "gpmhd/bench/config.hpp"
#include "gpmhd/bench/problems.hpp"
#include "gpmhd/diagnostics.hpp"
#include "gpmhd/solver.hpp"

namespace gpmhd::bench {

fem::Physics physics_for(const RunConfig &cfg);
DiagnosticsOptions diagnostics_for(const RunConfig &cfg, const ProblemSetup &p);

struct RunHooks {
  std::function<void(const Simulation &, const StepReport &)> after_step;
  std::ostream *log = nullptr;  ///< progress lines go here when set
};

struct RunResult {
  RunConfig config;
  std::unique_ptr<Discretization> disc;
  fem::Field U;
  double t = 0.0;
  long steps = 0;
  std::vector<LedgerRow> ledger;
  bool aborted = false;
  std::string message;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;
};

/// Runs a resolved config. Writes files when cfg.out_dir is set. A runtime
/// abort is reported through `aborted` (the last valid state is kept).
RunResult run(const RunConfig &cfg, const RunHooks &hooks = {});

/// Rebuilds ledger rows from the snapshots and manifest of a run directory.
std::vector<LedgerRow> ledger_from_snapshots(const std::string &run_dir);

}  // namespace gpmhd::bench
