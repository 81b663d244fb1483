#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gpmhd {

/// Whole-string number parse. Unlike std::stod, subnormal values are accepted.
inline double parse_double(const std::string &s) {
  const char *b = s.c_str();
  char *end = nullptr;
  const double v = std::strtod(b, &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == b || *end != '\0') throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

}  // namespace gpmhd
