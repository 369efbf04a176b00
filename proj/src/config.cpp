#include "gva/config.hpp"

#include <map>
#include <sstream>

namespace gva {

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error("config line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParsedConfig parse_config(const std::string& src) {
  static const char* kKeys[] = {"f", "f_theta", "a", "b", "eps", "scalar"};

  std::map<std::string, std::pair<std::size_t, std::string>> seen;  // key -> (line, value)
  std::istringstream in(src);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError(lineno, "unknown key '" + key + "'");
    if (seen.count(key)) throw ConfigError(lineno, "duplicate key '" + key + "'");
    if (value.empty()) throw ConfigError(lineno, "empty value for '" + key + "'");
    seen.emplace(key, std::make_pair(lineno, value));
  }

  for (const char* k : kKeys) {
    if (std::string(k) == "f_theta") continue;
    if (!seen.count(k)) throw ConfigError(lineno, std::string("missing key '") + k + "'");
  }

  ParsedConfig out;
  AlgebraSpec& spec = out.spec;

  const auto& [scalar_line, scalar_text] = seen.at("scalar");
  if (scalar_text == "rational") {
    spec.scalar_mode = ScalarMode::rational;
  } else if (scalar_text == "dual") {
    spec.scalar_mode = ScalarMode::dual;
  } else {
    throw ConfigError(scalar_line, "scalar must be 'rational' or 'dual'");
  }

  auto rational_at = [&](const char* key) {
    const auto& [line, text] = seen.at(key);
    auto r = rational_from_string(text);
    if (!r) throw ConfigError(line, std::string("'") + key + "' is not a rational: " + text);
    return *r;
  };
  spec.a = rational_at("a");
  spec.b = rational_at("b");
  if (spec.b < 0)
    out.warnings.push_back("warning: b = " + rational_to_string(spec.b) +
                           " is negative; the bracket convention assumes b >= 0");
  spec.eps = Scalar::from_rational(rational_at("eps"), spec.scalar_mode);

  auto expr_at = [&](const char* key) {
    const auto& [line, text] = seen.at(key);
    try {
      return parse_expr(text);
    } catch (const ParseError& pe) {
      throw ConfigError(line, std::string("in '") + key + "': " + pe.what());
    }
  };
  spec.f = expr_at("f");
  if (seen.count("f_theta")) spec.f_theta = expr_at("f_theta");

  return out;
}

}  // namespace gva
