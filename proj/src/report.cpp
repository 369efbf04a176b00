#include "gva/report.hpp"

#include <sstream>

#include "gva/algebra.hpp"

namespace gva {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

CheckReport run_tuple_check(std::string name, Window reported_window,
                            const std::vector<std::pair<Index, Index>>& ranges, std::size_t cap,
                            const ResidualFn& fn) {
  CheckReport report;
  report.check = std::move(name);
  report.window = reported_window;

  std::vector<Index> tuple;
  tuple.reserve(ranges.size());
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) return report;  // empty sweep: vacuous
    tuple.push_back(lo);
  }

  while (true) {
    bool undefined = false;
    std::optional<Residual> res;
    try {
      res = fn(tuple);
      if (!res) undefined = true;
    } catch (const PoleError&) {
      undefined = true;
    }
    if (undefined) {
      report.undefined_points.push_back(tuple);
    } else {
      ++report.tuples_checked;
      if (!res->is_zero()) {
        if (report.counterexamples.size() < cap) {
          Counterexample ce;
          ce.indices = tuple;
          ce.residual = res->primal.canonical();
          ce.residual_dual = res->dual.canonical();
          ce.extra_terms = std::move(res->extra);
          report.counterexamples.push_back(std::move(ce));
        }
        report.verdict = Verdict::fails;
      }
    }
    // odometer, last position fastest: lexicographic tuple order
    std::size_t p = tuple.size();
    while (p > 0) {
      --p;
      if (tuple[p] < ranges[p].second) {
        ++tuple[p];
        break;
      }
      tuple[p] = ranges[p].first;
      if (p == 0) {
        if (report.verdict != Verdict::fails)
          report.verdict = report.tuples_checked > 0 ? Verdict::holds : Verdict::vacuous;
        return report;
      }
    }
    if (tuple.size() == 0) break;
  }
  if (report.verdict != Verdict::fails)
    report.verdict = report.tuples_checked > 0 ? Verdict::holds : Verdict::vacuous;
  return report;
}

CheckReport run_tuple_check(std::string name, Window w, int arity, std::size_t cap,
                            const ResidualFn& fn) {
  std::vector<std::pair<Index, Index>> ranges(static_cast<std::size_t>(arity), {w.lo, w.hi});
  return run_tuple_check(std::move(name), w, ranges, cap, fn);
}

namespace {

void append_indices(std::ostream& os, const std::vector<Index>& idx) {
  os << "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) os << ",";
    os << idx[k];
  }
  os << ")";
}

std::string residual_text(const Counterexample& ce) {
  std::string out;
  if (!ce.residual.is_zero()) out += ce.residual.str();
  if (!ce.residual_dual.is_zero()) {
    if (!out.empty()) out += " | ";
    out += "second slot: " + ce.residual_dual.str();
  }
  for (const auto& [k, v] : ce.extra_terms) {
    if (!out.empty()) out += " + ";
    out += "(" + v + ")*" + k;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.check << " [" << r.window.lo << ".." << r.window.hi << "]: ";
  switch (r.verdict) {
    case Verdict::holds:
      os << "HOLDS (" << r.tuples_checked << " tuples, " << r.undefined_points.size()
         << " poles)";
      break;
    case Verdict::vacuous:
      os << "VACUOUS (all " << r.undefined_points.size() << " tuples undefined)";
      break;
    case Verdict::fails: {
      os << "FAILS (" << r.tuples_checked << " tuples, " << r.undefined_points.size()
         << " poles, " << r.counterexamples.size() << " counterexample"
         << (r.counterexamples.size() == 1 ? "" : "s") << " recorded)";
      const Counterexample& ce = r.counterexamples.front();
      os << "\n  first counterexample at ";
      append_indices(os, ce.indices);
      os << ": residual " << residual_text(ce);
      break;
    }
  }
  for (const auto& n : r.notes) os << "\n  note: " << n;
  return os.str();
}

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["window"] = {{"lo", r.window.lo}, {"hi", r.window.hi}};
  j["verdict"] = verdict_name(r.verdict);
  j["tuples_checked"] = r.tuples_checked;
  auto ces = nlohmann::ordered_json::array();
  for (const auto& ce : r.counterexamples) {
    nlohmann::ordered_json c;
    c["indices"] = ce.indices;
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [x, v] : ce.residual.terms()) terms[std::to_string(x)] = v.str();
    for (const auto& [x, v] : ce.residual_dual.terms()) terms[std::to_string(x) + "'"] = v.str();
    if (!ce.residual_dual.theta().is_zero()) terms["theta'"] = ce.residual_dual.theta().str();
    for (const auto& [k, v] : ce.extra_terms) terms[k] = v;
    c["residual"] = {{"terms", terms}, {"theta", ce.residual.theta().str()}};
    ces.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(ces);
  j["undefined_points"] = r.undefined_points;
  return j;
}

}  // namespace gva
