#include "gpmhd/sources.hpp"

namespace gpmhd {

SourceConfig SourceConfig::make(SourcePreset p) {
  SourceConfig c;
  c.preset = p;
  switch (p) {
    case SourcePreset::Powell:
      c.alpha_m = c.alpha_E = c.alpha_B = -1.0;
      break;
    case SourcePreset::Janhunen:
      c.alpha_B = -1.0;
      break;
    case SourcePreset::BB:
      c.alpha_m = -1.0;
      break;
    case SourcePreset::None:
    case SourcePreset::Custom:
      break;
  }
  return c;
}

SourceConfig SourceConfig::custom(double am, double aE, double aB) {
  SourceConfig c;
  c.preset = SourcePreset::Custom;
  c.alpha_m = am;
  c.alpha_E = aE;
  c.alpha_B = aB;
  return c;
}

bool entropy_compatibility(const SourceConfig &cfg) {
  return cfg.alpha_E - cfg.alpha_m - cfg.alpha_B == 1.0;
}

std::string to_string(SourcePreset p) {
  switch (p) {
    case SourcePreset::None: return "none";
    case SourcePreset::Powell: return "powell";
    case SourcePreset::Janhunen: return "janhunen";
    case SourcePreset::BB: return "bb";
    case SourcePreset::Custom: return "custom";
  }
  return "none";
}

std::string to_string(GlmVariant v) {
  switch (v) {
    case GlmVariant::None: return "none";
    case GlmVariant::DednerExtended: return "dedner";
    case GlmVariant::NineWave: return "9wave";
    case GlmVariant::EnergyConservative: return "cons";
  }
  return "none";
}

}  // namespace gpmhd
