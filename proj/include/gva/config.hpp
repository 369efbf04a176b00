#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gva/algebra.hpp"

namespace gva {

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ParsedConfig {
  AlgebraSpec spec;
  std::vector<std::string> warnings;
};

/// Parses the flat key=value algebra configuration:
///
///   # comment
///   f       = -(j*(1 + eps*j)) / (1 + eps*(i+j))
///   f_theta = (1/2)*(i^3 - i + (eps - 1/eps)*i^2)*delta(i+j)   # optional
///   a       = 1
///   b       = 1
///   eps     = 1/2
///   scalar  = rational            # or: dual
///
/// Keys are exactly {f, f_theta?, a, b, eps, scalar}; unknown or duplicate
/// keys, missing keys, and unparsable values are rejected with a line number.
/// b < 0 is accepted with a warning.
ParsedConfig parse_config(const std::string& src);

}  // namespace gva
