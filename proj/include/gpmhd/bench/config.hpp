#pragma once

// Run configuration. Files are flat "key = value" lines, '#' starts a comment.
// Layering: problem defaults < file < command-line overrides.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "gpmhd/fem/space.hpp"
#include "gpmhd/flux.hpp"
#include "gpmhd/sources.hpp"
#include "gpmhd/stabilization.hpp"

namespace gpmhd::bench {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered key/value store.
class ConfigMap {
 public:
  static ConfigMap parse(std::istream &is);
  static ConfigMap parse_string(const std::string &s);
  static ConfigMap load(const std::string &path);

  /// One "key = value" line per key, sorted by key.
  std::string serialize() const;

  void set(const std::string &key, const std::string &value) { kv_[key] = value; }
  bool has(const std::string &key) const { return kv_.count(key) != 0; }
  const std::string &get(const std::string &key) const;
  /// Entries of `other` override ours.
  void merge(const ConfigMap &other);
  const std::map<std::string, std::string> &entries() const { return kv_; }
  bool operator==(const ConfigMap &o) const { return kv_ == o.kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

struct RunConfig {
  std::string problem = "contact";
  fem::MeshSpec mesh{};
  int degree = 1;
  FluxVariant flux = FluxVariant::GP;
  SourceConfig source{};
  GlmConfig glm{};
  ViscositySettings visc{};
  double gamma = 1.4;
  double t_final = 0.1;
  double cfl = 0.25;
  long max_steps = -1;
  bool lumped = true;
  std::string out_dir;
  int snapshots = 0;     ///< evenly spaced in time, plus the final state
  int ledger_every = 1;  ///< steps between ledger rows
  int log_every = 0;     ///< steps between progress lines (0: off)
  std::uint64_t seed = 12345;
  std::array<double, 2> vortex_u_inf{1.0, 1.0};
  double vortex_rho_amp = 0.0;
  std::string gem_profile = "literal";
};

/// Keys with problem defaults for `problem`.
ConfigMap problem_defaults(const std::string &problem);

/// Applies problem defaults under `m` and converts. Throws ConfigError on
/// unknown keys, malformed values or rejected combinations.
RunConfig resolve(const ConfigMap &m);

/// Inverse of resolve (fully populated map).
ConfigMap to_map(const RunConfig &c);

/// Rejected combinations: P2 with a lumped mass, slip walls in 1D, ...
void validate(const RunConfig &c);

FluxVariant parse_flux(const std::string &s);
std::string to_string(FluxVariant f);
SourceConfig parse_source(const std::string &s);
std::string source_to_string(const SourceConfig &s);
GlmVariant parse_glm(const std::string &s);

}  // namespace gpmhd::bench
