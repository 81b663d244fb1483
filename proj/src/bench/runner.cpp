#include "gpmhd/bench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "gpmhd/bench/output.hpp"

namespace gpmhd::bench {

namespace fs = std::filesystem;

fem::Physics physics_for(const RunConfig &cfg) {
  fem::Physics ph;
  ph.eos = EosModel(cfg.gamma);
  ph.flux = cfg.flux;
  ph.source = cfg.source;
  ph.glm = cfg.glm;
  return ph;
}

DiagnosticsOptions diagnostics_for(const RunConfig &cfg, const ProblemSetup &p) {
  DiagnosticsOptions o;
  o.star = cfg.glm.stores_energy_star();
  o.glm = cfg.glm.variant != GlmVariant::None;
  o.reconnection = p.reconnection;
  return o;
}

namespace {

void log_line(std::ostream &os, const Simulation &sim, const StepReport &r, const EosModel &eos,
              bool star) {
  double min_rho = INFINITY, min_e = INFINITY;
  for (const auto &c : sim.state()) {
    const auto s = State<double>::from(c, star);
    min_rho = std::min(min_rho, s.rho);
    min_e = std::min(min_e, s.specific_internal_energy());
  }
  const auto ms = min_entropy(sim.state(), eos, star);
  auto &disc = const_cast<Simulation &>(sim).discretization();
  os << std::setw(7) << r.step << ' ' << std::scientific << std::setprecision(6) << r.t << ' '
     << r.dt << ' ' << min_rho << ' ' << min_e << ' ';
  if (ms) os << *ms; else os << "nan";
  if (disc.space().dim() == 2) os << ' ' << divB_norm(disc.space(), sim.state());
  os << std::defaultfloat << '\n';
}

void write_file(const fs::path &p, const std::function<void(std::ostream &)> &f,
                std::vector<std::string> &outputs) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot write '" + p.string() + "'");
  f(os);
  outputs.push_back(p.filename().string());
}

}  // namespace

RunResult run(const RunConfig &cfg, const RunHooks &hooks) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  res.config = cfg;
  const auto problem = make_problem(cfg);
  const auto phys = physics_for(cfg);
  res.disc = std::make_unique<Discretization>(cfg.mesh, cfg.degree, phys, cfg.lumped);
  auto &disc = *res.disc;
  const auto &V = disc.space();
  const bool star = phys.star();
  const auto dopt = diagnostics_for(cfg, problem);

  const bool files = !cfg.out_dir.empty();
  fs::path dir;
  std::ofstream ledger_os;
  if (files) {
    dir = cfg.out_dir;
    fs::create_directories(dir);
    ledger_os.open(dir / "ledger.csv");
    if (!ledger_os) throw std::runtime_error("cannot write ledger in '" + dir.string() + "'");
    write_ledger_header(ledger_os);
    res.outputs.push_back("ledger.csv");
  }

  Simulation sim(disc, initial_field(V, problem, phys.eos, star), cfg.visc, cfg.cfl);
  auto record = [&](const Simulation &s) {
    auto row = ledger_row(V, s.state(), s.time(), phys.eos, dopt);
    res.ledger.push_back(row);
    if (files) write_ledger_row(ledger_os, row);
  };
  int snap_id = 0;
  auto snapshot = [&](const Simulation &s) {
    if (!files || cfg.snapshots <= 0) return;
    char name[32];
    std::snprintf(name, sizeof name, "snap_%04d.csv", snap_id++);
    write_file(dir / name, [&](std::ostream &os) { write_snapshot(os, s.state(), s.time()); }, res.outputs);
  };
  record(sim);
  snapshot(sim);

  const double tol = 1e-14 * std::max(1.0, std::abs(cfg.t_final));
  int next_snap = 1;
  try {
    while (cfg.t_final - sim.time() > tol && (cfg.max_steps < 0 || sim.steps() < cfg.max_steps)) {
      double target = cfg.t_final;
      if (files && cfg.snapshots > 0) target = std::min(target, cfg.t_final * next_snap / cfg.snapshots);
      const double dt = sim.step(target);
      const StepReport rep{sim.steps(), sim.time(), dt};
      if (sim.steps() % cfg.ledger_every == 0) record(sim);
      if (hooks.log && cfg.log_every > 0 && sim.steps() % cfg.log_every == 0)
        log_line(*hooks.log, sim, rep, phys.eos, star);
      if (hooks.after_step) hooks.after_step(sim, rep);
      if (files && cfg.snapshots > 0 && target - sim.time() <= tol && next_snap <= cfg.snapshots) {
        snapshot(sim);
        ++next_snap;
      }
    }
    if (res.ledger.back().t != sim.time()) record(sim);
  } catch (const RuntimeAbort &e) {
    res.aborted = true;
    res.message = e.what();
    if (files)
      write_file(dir / "abort_snapshot.csv",
                 [&](std::ostream &os) { write_snapshot(os, e.last_valid(), e.time()); }, res.outputs);
  }
  res.U = sim.state();
  res.t = sim.time();
  res.steps = sim.steps();

  if (files) {
    ledger_os.close();
    if (V.dim() == 1)
      write_file(dir / (cfg.problem + "_final.csv"),
                 [&](std::ostream &os) { write_profile_csv(os, V, res.U, phys.eos, star); }, res.outputs);
    else
      write_file(dir / (cfg.problem + "_final.vtk"),
                 [&](std::ostream &os) { write_vtk(os, V, res.U, phys.eos, star, cfg.problem); },
                 res.outputs);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (files) {
    nlohmann::json j;
    nlohmann::json c = nlohmann::json::object();
    const auto resolved = to_map(cfg);
    for (const auto &[k, v] : resolved.entries()) c[k] = v;
    j["config"] = c;
    j["status"] = res.aborted ? "aborted" : "ok";
    j["message"] = res.message;
    j["steps"] = res.steps;
    j["t"] = res.t;
    j["dofs"] = V.num_dofs();
    j["wall_seconds"] = res.wall_seconds;
    j["outputs"] = res.outputs;
    std::ofstream os(dir / "manifest.json");
    os << j.dump(2) << '\n';
  }
  return res;
}

std::vector<LedgerRow> ledger_from_snapshots(const std::string &run_dir) {
  const fs::path dir(run_dir);
  std::ifstream mf(dir / "manifest.json");
  if (!mf) throw std::runtime_error("ledger: no manifest.json in '" + run_dir + "'");
  nlohmann::json j;
  mf >> j;
  ConfigMap m;
  for (const auto &[k, v] : j.at("config").items()) m.set(k, v.get<std::string>());
  const auto cfg = resolve(m);
  const auto problem = make_problem(cfg);
  const fem::FeSpace V(cfg.mesh, cfg.degree);
  const EosModel eos(cfg.gamma);
  const auto dopt = diagnostics_for(cfg, problem);

  std::vector<fs::path> snaps;
  for (const auto &e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.rfind("snap_", 0) == 0 && e.path().extension() == ".csv") snaps.push_back(e.path());
  }
  std::sort(snaps.begin(), snaps.end());
  std::vector<LedgerRow> rows;
  for (const auto &p : snaps) {
    std::ifstream is(p);
    double t = 0.0;
    const auto U = read_snapshot(is, t);
    if (static_cast<int>(U.size()) != V.num_dofs())
      throw std::runtime_error("ledger: snapshot size does not match the config");
    rows.push_back(ledger_row(V, U, t, eos, dopt));
  }
  return rows;
}

}  // namespace gpmhd::bench
