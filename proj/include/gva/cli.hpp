#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gva/report.hpp"

#include "json.hpp"

namespace gva {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct PlanItem {
  std::string selector;  // user-facing check name the reports came from
  std::function<std::vector<CheckReport>()> run;
};

struct RunPlan {
  nlohmann::ordered_json spec_echo = nlohmann::ordered_json::object();
  std::vector<PlanItem> items;
  // selector or exact report name -> expected verdict
  std::map<std::string, Verdict> expectations;
  std::optional<Verdict> expect_all;
  enum class Format { text, json } format = Format::text;
};

/// Executes the plan in order, writes the report stream, and returns 0 when
/// every verdict matches the declared expectations (or none are declared),
/// 1 otherwise. Input errors never reach here; they exit 2 in cli_main.
int run_plan(const RunPlan& plan, std::ostream& out);

std::optional<Window> parse_window_arg(const std::string& text);
std::optional<Verdict> parse_verdict(const std::string& text);

/// Full command-line entry point (subcommands: check, cohomology, extensions,
/// lk, burgers, parse). Returns the process exit code (0, 1, or 2).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gva
