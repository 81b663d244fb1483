#include "gpmhd/bench/config.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

#include "gpmhd/parse.hpp"

namespace gpmhd::bench {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string &key, const std::string &v) {
  try {
    return parse_double(v);
  } catch (const std::exception &) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

long to_long(const std::string &key, const std::string &v) {
  try {
    size_t pos = 0;
    const long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception &) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  }
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  // shortest representation that round-trips
  for (int p = 1; p <= 17; ++p) {
    std::ostringstream t;
    t << std::setprecision(p) << x;
    if (parse_double(t.str()) == x) return t.str();
  }
  return os.str();
}

template <class T>
std::string pair_str(const std::array<T, 2> &a, int dim) {
  if (dim == 1) return num(a[0]);
  return num(a[0]) + "," + num(a[1]);
}

const std::set<std::string> kKeys = {
    "problem", "mesh.cells", "mesh.degree", "mesh.lo", "mesh.hi", "mesh.bc", "flux", "source",
    "glm", "glm.c_r", "eos.gamma", "visc.mode", "visc.C_E", "visc.kappa_phys", "visc.mu_phys",
    "visc.eta_phys", "visc.startup", "time.t_final", "time.cfl", "time.max_steps", "mass",
    "output.dir", "output.snapshots", "output.ledger_every", "output.log_every", "seed",
    "vortex.u_inf", "vortex.rho_amp", "gem.profile"};

}  // namespace

ConfigMap ConfigMap::parse(std::istream &is) {
  ConfigMap m;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    m.kv_[key] = val;
  }
  return m;
}

ConfigMap ConfigMap::parse_string(const std::string &s) {
  std::istringstream is(s);
  return parse(is);
}

ConfigMap ConfigMap::load(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  return parse(f);
}

std::string ConfigMap::serialize() const {
  std::ostringstream os;
  for (const auto &[k, v] : kv_) os << k << " = " << v << '\n';
  return os.str();
}

const std::string &ConfigMap::get(const std::string &key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("config: missing key '" + key + "'");
  return it->second;
}

void ConfigMap::merge(const ConfigMap &other) {
  for (const auto &[k, v] : other.kv_) kv_[k] = v;
}

FluxVariant parse_flux(const std::string &s) {
  if (s == "gp") return FluxVariant::GP;
  if (s == "gps") return FluxVariant::GPs;
  if (s == "resistive") return FluxVariant::Resistive;
  if (s == "monolithic") return FluxVariant::Monolithic;
  if (s == "none") return FluxVariant::None;
  throw ConfigError("config: unknown flux '" + s + "'");
}

std::string to_string(FluxVariant f) {
  switch (f) {
    case FluxVariant::GP: return "gp";
    case FluxVariant::GPs: return "gps";
    case FluxVariant::Resistive: return "resistive";
    case FluxVariant::Monolithic: return "monolithic";
    case FluxVariant::None: return "none";
  }
  return "none";
}

SourceConfig parse_source(const std::string &s) {
  if (s == "none") return SourceConfig::make(SourcePreset::None);
  if (s == "powell") return SourceConfig::make(SourcePreset::Powell);
  if (s == "janhunen") return SourceConfig::make(SourcePreset::Janhunen);
  if (s == "bb") return SourceConfig::make(SourcePreset::BB);
  if (s.rfind("custom:", 0) == 0) {
    const auto parts = split(s.substr(7), ',');
    if (parts.size() != 3) throw ConfigError("config: custom source needs three coefficients");
    return SourceConfig::custom(to_double("source", parts[0]), to_double("source", parts[1]),
                                to_double("source", parts[2]));
  }
  throw ConfigError("config: unknown source '" + s + "'");
}

std::string source_to_string(const SourceConfig &s) {
  if (s.preset != SourcePreset::Custom) return to_string(s.preset);
  return "custom:" + num(s.alpha_m) + "," + num(s.alpha_E) + "," + num(s.alpha_B);
}

GlmVariant parse_glm(const std::string &s) {
  if (s == "none") return GlmVariant::None;
  if (s == "dedner") return GlmVariant::DednerExtended;
  if (s == "9wave") return GlmVariant::NineWave;
  if (s == "cons") return GlmVariant::EnergyConservative;
  throw ConfigError("config: unknown glm variant '" + s + "'");
}

ConfigMap problem_defaults(const std::string &problem) {
  ConfigMap m;
  auto common = [&] {
    m.set("problem", problem);
    m.set("mesh.degree", "1");
    m.set("flux", "gp");
    m.set("source", "none");
    m.set("glm", "none");
    m.set("glm.c_r", "0.18");
    m.set("visc.mode", "rv");
    m.set("visc.C_E", "1");
    m.set("visc.kappa_phys", "0");
    m.set("visc.mu_phys", "0");
    m.set("visc.eta_phys", "0");
    m.set("visc.startup", "rhs");
    m.set("time.cfl", "0.25");
    m.set("time.max_steps", "-1");
    m.set("mass", "lumped");
    m.set("output.dir", "");
    m.set("output.snapshots", "0");
    m.set("output.ledger_every", "1");
    m.set("output.log_every", "0");
    m.set("seed", "12345");
    m.set("vortex.u_inf", "1,1");
    m.set("vortex.rho_amp", "0");
    m.set("gem.profile", "literal");
  };
  common();
  if (problem == "contact") {
    m.set("mesh.cells", "60");
    m.set("mesh.lo", "0");
    m.set("mesh.hi", "1");
    m.set("mesh.bc", "dirichlet");
    m.set("eos.gamma", "2");
    m.set("visc.mode", "first_order");
    m.set("time.t_final", "0.1");
  } else if (problem == "briowu") {
    m.set("mesh.cells", "160");
    m.set("mesh.lo", "0");
    m.set("mesh.hi", "1");
    m.set("mesh.bc", "dirichlet");
    m.set("eos.gamma", "2");
    m.set("visc.C_E", "5");
    m.set("time.t_final", "0.1");
  } else if (problem == "vortex") {
    m.set("mesh.cells", "32,32");
    m.set("mesh.lo", "-10,-10");
    m.set("mesh.hi", "10,10");
    m.set("mesh.bc", "periodic,periodic");
    m.set("eos.gamma", "1.6666666666666667");
    m.set("time.t_final", "0.05");
  } else if (problem == "orszag_tang") {
    m.set("mesh.cells", "64,64");
    m.set("mesh.lo", "0,0");
    m.set("mesh.hi", "1,1");
    m.set("mesh.bc", "periodic,periodic");
    m.set("eos.gamma", "1.6666666666666667");
    m.set("time.t_final", "0.5");
  } else if (problem == "gem") {
    m.set("mesh.cells", "128,64");
    m.set("mesh.lo", "-12.8,-6.4");
    m.set("mesh.hi", "12.8,6.4");
    m.set("mesh.bc", "periodic,slip");
    m.set("eos.gamma", "1.6666666666666667");
    m.set("visc.eta_phys", "0.005");
    m.set("time.t_final", "40");
  } else {
    throw ConfigError("config: unknown problem '" + problem + "'");
  }
  return m;
}

void validate(const RunConfig &c) {
  if (c.degree < 1 || c.degree > 3) throw ConfigError("config: mesh.degree must be 1, 2 or 3");
  if (c.degree == 2 && c.lumped)
    throw ConfigError("config: P2 with a lumped mass matrix is rejected (zero or negative lumped entries)");
  if (!(c.gamma > 1.0)) throw ConfigError("config: eos.gamma must be > 1");
  if (!(c.cfl > 0.0)) throw ConfigError("config: time.cfl must be > 0");
  if (!(c.t_final >= 0.0)) throw ConfigError("config: time.t_final must be >= 0");
  if (c.visc.C_E < 0.0) throw ConfigError("config: visc.C_E must be >= 0");
  if (c.visc.kappa_phys < 0.0 || c.visc.mu_phys < 0.0 || c.visc.eta_phys < 0.0)
    throw ConfigError("config: physical viscosities must be >= 0");
  if (c.glm.c_r < 0.0) throw ConfigError("config: glm.c_r must be >= 0");
  for (int d = 0; d < c.mesh.dim; ++d) {
    if (c.mesh.cells[d] < 1) throw ConfigError("config: mesh.cells must be >= 1");
    if (!(c.mesh.hi[d] > c.mesh.lo[d])) throw ConfigError("config: mesh.hi must exceed mesh.lo");
  }
  if (c.mesh.dim == 1 && c.mesh.bc[0] == fem::BoundaryKind::SlipWall)
    throw ConfigError("config: slip walls need a 2D mesh");
  if (c.ledger_every < 1) throw ConfigError("config: output.ledger_every must be >= 1");
  if (c.snapshots < 0) throw ConfigError("config: output.snapshots must be >= 0");
  if (!(c.vortex_rho_amp > -1.0)) throw ConfigError("config: vortex.rho_amp must be > -1");
  if (c.gem_profile != "literal" && c.gem_profile != "harris")
    throw ConfigError("config: gem.profile must be literal or harris");
}

RunConfig resolve(const ConfigMap &given) {
  if (!given.has("problem")) throw ConfigError("config: missing key 'problem'");
  for (const auto &[k, v] : given.entries())
    if (!kKeys.count(k)) throw ConfigError("config: unknown key '" + k + "'");
  ConfigMap m = problem_defaults(given.get("problem"));
  m.merge(given);

  RunConfig c;
  c.problem = m.get("problem");
  const auto cells = split(m.get("mesh.cells"), ',');
  if (cells.empty() || cells.size() > 2) throw ConfigError("config: mesh.cells expects N or N,M");
  const auto lo = split(m.get("mesh.lo"), ',');
  const auto hi = split(m.get("mesh.hi"), ',');
  const auto bc = split(m.get("mesh.bc"), ',');
  const int dim = static_cast<int>(lo.size());
  if (dim < 1 || dim > 2 || hi.size() != lo.size())
    throw ConfigError("config: mesh.lo / mesh.hi must have one or two entries");
  if (cells.size() != static_cast<size_t>(dim))
    throw ConfigError("config: mesh.cells must have " + std::to_string(dim) + " entries for this problem");
  c.mesh.dim = dim;
  for (int d = 0; d < dim; ++d) {
    c.mesh.cells[d] = static_cast<int>(to_long("mesh.cells", cells[d]));
    c.mesh.lo[d] = to_double("mesh.lo", lo[d]);
    c.mesh.hi[d] = to_double("mesh.hi", hi[d]);
    const auto &b = bc.size() == 1 ? bc[0] : bc.at(d);
    try {
      c.mesh.bc[d] = fem::parse_boundary(b);
    } catch (const std::invalid_argument &e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  if (dim == 1) c.mesh.bc[1] = c.mesh.bc[0];
  c.degree = static_cast<int>(to_long("mesh.degree", m.get("mesh.degree")));
  c.flux = parse_flux(m.get("flux"));
  c.source = parse_source(m.get("source"));
  c.glm.variant = parse_glm(m.get("glm"));
  c.glm.c_r = to_double("glm.c_r", m.get("glm.c_r"));
  c.gamma = to_double("eos.gamma", m.get("eos.gamma"));
  try {
    c.visc.mode = parse_viscosity_mode(m.get("visc.mode"));
    c.visc.startup = parse_startup_mode(m.get("visc.startup"));
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.visc.C_E = to_double("visc.C_E", m.get("visc.C_E"));
  c.visc.kappa_phys = to_double("visc.kappa_phys", m.get("visc.kappa_phys"));
  c.visc.mu_phys = to_double("visc.mu_phys", m.get("visc.mu_phys"));
  c.visc.eta_phys = to_double("visc.eta_phys", m.get("visc.eta_phys"));
  c.t_final = to_double("time.t_final", m.get("time.t_final"));
  c.cfl = to_double("time.cfl", m.get("time.cfl"));
  c.max_steps = to_long("time.max_steps", m.get("time.max_steps"));
  const auto &mass = m.get("mass");
  if (mass != "lumped" && mass != "consistent")
    throw ConfigError("config: mass must be lumped or consistent");
  c.lumped = mass == "lumped";
  c.out_dir = m.get("output.dir");
  c.snapshots = static_cast<int>(to_long("output.snapshots", m.get("output.snapshots")));
  c.ledger_every = static_cast<int>(to_long("output.ledger_every", m.get("output.ledger_every")));
  c.log_every = static_cast<int>(to_long("output.log_every", m.get("output.log_every")));
  c.seed = static_cast<std::uint64_t>(to_long("seed", m.get("seed")));
  const auto uinf = split(m.get("vortex.u_inf"), ',');
  if (uinf.size() != 2) throw ConfigError("config: vortex.u_inf expects two numbers");
  c.vortex_u_inf = {to_double("vortex.u_inf", uinf[0]), to_double("vortex.u_inf", uinf[1])};
  c.vortex_rho_amp = to_double("vortex.rho_amp", m.get("vortex.rho_amp"));
  c.gem_profile = m.get("gem.profile");
  validate(c);
  return c;
}

ConfigMap to_map(const RunConfig &c) {
  ConfigMap m;
  const int d = c.mesh.dim;
  m.set("problem", c.problem);
  m.set("mesh.cells", d == 1 ? std::to_string(c.mesh.cells[0])
                             : std::to_string(c.mesh.cells[0]) + "," + std::to_string(c.mesh.cells[1]));
  m.set("mesh.degree", std::to_string(c.degree));
  m.set("mesh.lo", pair_str(c.mesh.lo, d));
  m.set("mesh.hi", pair_str(c.mesh.hi, d));
  m.set("mesh.bc", d == 1 ? fem::to_string(c.mesh.bc[0])
                          : fem::to_string(c.mesh.bc[0]) + "," + fem::to_string(c.mesh.bc[1]));
  m.set("flux", to_string(c.flux));
  m.set("source", source_to_string(c.source));
  m.set("glm", to_string(c.glm.variant));
  m.set("glm.c_r", num(c.glm.c_r));
  m.set("eos.gamma", num(c.gamma));
  m.set("visc.mode", to_string(c.visc.mode));
  m.set("visc.C_E", num(c.visc.C_E));
  m.set("visc.kappa_phys", num(c.visc.kappa_phys));
  m.set("visc.mu_phys", num(c.visc.mu_phys));
  m.set("visc.eta_phys", num(c.visc.eta_phys));
  m.set("visc.startup", to_string(c.visc.startup));
  m.set("time.t_final", num(c.t_final));
  m.set("time.cfl", num(c.cfl));
  m.set("time.max_steps", std::to_string(c.max_steps));
  m.set("mass", c.lumped ? "lumped" : "consistent");
  m.set("output.dir", c.out_dir);
  m.set("output.snapshots", std::to_string(c.snapshots));
  m.set("output.ledger_every", std::to_string(c.ledger_every));
  m.set("output.log_every", std::to_string(c.log_every));
  m.set("seed", std::to_string(c.seed));
  m.set("vortex.u_inf", num(c.vortex_u_inf[0]) + "," + num(c.vortex_u_inf[1]));
  m.set("vortex.rho_amp", num(c.vortex_rho_amp));
  m.set("gem.profile", c.gem_profile);
  return m;
}

}  // namespace gpmhd::bench
