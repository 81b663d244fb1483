// gpmhd_cli: run, verify, convergence, ledger.
//
// Exit codes: 0 success, 1 configuration or validation error, 2 runtime abort.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gpmhd/bench/config.hpp"
#include "gpmhd/bench/convergence.hpp"
#include "gpmhd/bench/runner.hpp"
#include "gpmhd/diagnostics.hpp"
#include "gpmhd/invariance.hpp"
#include "gpmhd/suites.hpp"

using namespace gpmhd;
using namespace gpmhd::bench;

namespace {

struct Overrides {
  std::string config, problem;
  std::optional<std::string> flux, source, glm, cells, mass, out;
  std::optional<int> degree;
  std::optional<double> tfinal, cfl, ce;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> set;

  void attach(CLI::App *app) {
    app->add_option("--config", config, "key = value config file");
    app->add_option("--problem", problem, "problem id when no config file is given")
        ->check(CLI::IsMember({"contact", "vortex", "briowu", "orszag_tang", "gem"}));
    app->add_option("--flux", flux)->check(CLI::IsMember({"gp", "gps", "resistive", "monolithic", "none"}));
    app->add_option("--source", source, "powell, janhunen, bb, none or custom:a,b,c");
    app->add_option("--glm", glm)->check(CLI::IsMember({"none", "dedner", "9wave", "cons"}));
    app->add_option("--degree", degree)->check(CLI::IsMember({1, 2, 3}));
    app->add_option("--cells", cells, "N or N,M");
    app->add_option("--tfinal", tfinal);
    app->add_option("--cfl", cfl);
    app->add_option("--ce", ce, "entropy-viscosity constant C_E");
    app->add_option("--mass", mass)->check(CLI::IsMember({"lumped", "consistent"}));
    app->add_option("--out", out, "output directory");
    app->add_option("--seed", seed);
    app->add_option("--set", set, "extra KEY=VALUE overrides");
  }

  RunConfig build() const {
    ConfigMap m;
    if (!config.empty()) m = ConfigMap::load(config);
    if (!problem.empty()) m.set("problem", problem);
    auto put = [&](const char *k, const auto &v) {
      if (!v) return;
      std::ostringstream os;
      os << std::setprecision(17) << *v;
      m.set(k, os.str());
    };
    put("flux", flux);
    put("source", source);
    put("glm", glm);
    put("mesh.degree", degree);
    put("mesh.cells", cells);
    put("time.t_final", tfinal);
    put("time.cfl", cfl);
    put("visc.C_E", ce);
    put("mass", mass);
    put("output.dir", out);
    put("seed", seed);
    for (const auto &kv : set) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
      m.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return resolve(m);
  }
};

std::vector<int> parse_ladder(const std::string &s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception &) {
      throw ConfigError("--ladder expects comma-separated integers");
    }
  }
  if (out.empty()) throw ConfigError("--ladder is empty");
  return out;
}

int cmd_run(const Overrides &o, bool quiet) {
  const auto cfg = o.build();
  RunHooks hooks;
  if (!quiet) {
    hooks.log = &std::cerr;
    if (cfg.log_every == 0) const_cast<RunConfig &>(cfg).log_every = 10;
  }
  const auto res = run(cfg, hooks);
  std::cout << cfg.problem << ": " << res.steps << " steps to t = " << res.t << " ("
            << res.disc->space().num_dofs() << " dofs, " << res.wall_seconds << " s)\n";
  for (const auto &f : res.outputs) std::cout << "  wrote " << f << '\n';
  if (res.aborted) {
    std::cerr << "aborted: " << res.message << '\n';
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string &suite, int samples, std::uint64_t seed) {
  std::vector<SweepResult> rows;
  SweepOptions so;
  so.samples = samples;
  so.seed = seed;
  PropertyOptions po;
  po.seed = seed;
  auto add = [&](std::vector<SweepResult> r) { rows.insert(rows.end(), r.begin(), r.end()); };
  if (suite == "rotation" || suite == "all") add(rotation_suite(so));
  if (suite == "galilean" || suite == "all") add(galilean_suite(so));
  if (suite == "thermo" || suite == "all") add(thermo_suite(po));
  if (suite == "flux" || suite == "all") add(flux_suite(po));
  int failed = 0;
  std::printf("%-58s %8s %12s %12s %7s %s\n", "identity", "samples", "max", "tol", "expect", "result");
  for (const auto &r : rows) {
    std::printf("%-58s %8d %12.3e %12.3e %7s %s\n", r.name.c_str(), r.samples, r.max_residual,
                r.tolerance, r.expect_pass ? "<=" : ">", r.passed() ? "PASS" : "FAIL");
    failed += !r.passed();
  }
  std::printf("%zu rows, %d failed\n", rows.size(), failed);
  return 0;
}

int cmd_convergence(const Overrides &o, const std::string &ladder, const std::string &reference,
                    const std::string &csv) {
  const auto cfg = o.build();
  const auto rows = convergence_table(cfg, parse_ladder(ladder), reference, &std::cerr);
  std::ostringstream table;
  write_convergence_csv(table, rows);
  std::cout << table.str();
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw std::runtime_error("cannot write '" + csv + "'");
    os << table.str();
  }
  for (const auto &r : rows)
    if (r.aborted) return 2;
  return 0;
}

int cmd_ledger(const std::string &dir, const std::string &out) {
  const auto rows = ledger_from_snapshots(dir);
  std::ofstream file;
  std::ostream *os = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write '" + out + "'");
    os = &file;
  }
  write_ledger_header(*os);
  for (const auto &r : rows) write_ledger_row(*os, r);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"CG finite-element solver for regularized ideal MHD"};
  app.require_subcommand(1);

  Overrides run_o;
  bool quiet = false;
  auto *run_cmd = app.add_subcommand("run", "run a benchmark");
  run_o.attach(run_cmd);
  run_cmd->add_flag("-q,--quiet", quiet, "no progress log");

  std::string suite = "all";
  int samples = 100;
  std::uint64_t vseed = 12345;
  auto *verify_cmd = app.add_subcommand("verify", "invariance and property sweeps");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"rotation", "galilean", "thermo", "flux", "all"}));
  verify_cmd->add_option("--samples", samples, "samples per invariance identity");
  verify_cmd->add_option("--seed", vseed);

  Overrides conv_o;
  std::string ladder, reference, csv;
  auto *conv_cmd = app.add_subcommand("convergence", "error and rate table over a mesh ladder");
  conv_o.attach(conv_cmd);
  conv_cmd->add_option("--ladder", ladder, "cells per direction, e.g. 32,64,128")->required();
  conv_cmd->add_option("--reference", reference, "profile CSV (1D problems)");
  conv_cmd->add_option("--csv", csv, "also write the table here");

  std::string run_dir, ledger_out;
  auto *ledger_cmd = app.add_subcommand("ledger", "diagnostics CSV from the snapshots of a run");
  ledger_cmd->add_option("--run", run_dir, "run directory")->required();
  ledger_cmd->add_option("--out", ledger_out, "output CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) return cmd_run(run_o, quiet);
    if (*verify_cmd) return cmd_verify(suite, samples, vseed);
    if (*conv_cmd) return cmd_convergence(conv_o, ladder, reference, csv);
    if (*ledger_cmd) return cmd_ledger(run_dir, ledger_out);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
