#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gva/element.hpp"

#include "json.hpp"

namespace gva {

/// Inclusive index range swept by each free index of a check.
struct Window {
  Index lo{0};
  Index hi{0};
  Index count() const { return hi - lo + 1; }
};

enum class Verdict { holds, fails, vacuous };

const char* verdict_name(Verdict v);

struct Counterexample {
  std::vector<Index> indices;
  Element residual;       // graded part (e_x coefficients + theta)
  Element residual_dual;  // second-slot part for paired checks; empty otherwise
  // extra residual entries with non-graded keys (e.g. Weyl monomials "x^2 d")
  std::vector<std::pair<std::string, std::string>> extra_terms;

  bool trivial() const {
    return residual.is_zero() && residual_dual.is_zero() && extra_terms.empty();
  }
};

struct CheckReport {
  std::string check;
  Window window{};
  Verdict verdict{Verdict::vacuous};
  std::uint64_t tuples_checked{0};
  std::vector<Counterexample> counterexamples;
  std::vector<std::vector<Index>> undefined_points;
  std::vector<std::string> notes;  // shown in text output only
};

/// Residual of one tuple; all parts zero means the identity held there.
struct Residual {
  Element primal;
  Element dual;
  std::vector<std::pair<std::string, std::string>> extra;

  Residual() = default;
  Residual(Element p) : primal(std::move(p)) {}
  Residual(Element p, Element d) : primal(std::move(p)), dual(std::move(d)) {}

  bool is_zero() const { return primal.is_zero() && dual.is_zero() && extra.empty(); }
};

/// Evaluates one index tuple; std::nullopt (or a thrown PoleError) marks the
/// tuple undefined.
using ResidualFn = std::function<std::optional<Residual>(const std::vector<Index>&)>;

/// Sweeps all tuples with position p ranging over ranges[p] (inclusive), in
/// lexicographic order. Pole tuples are recorded and excluded from the
/// verdict; nonzero residuals become counterexamples (stored up to cap).
CheckReport run_tuple_check(std::string name, Window reported_window,
                            const std::vector<std::pair<Index, Index>>& ranges, std::size_t cap,
                            const ResidualFn& fn);

/// Uniform-arity convenience: every position ranges over the window.
CheckReport run_tuple_check(std::string name, Window w, int arity, std::size_t cap,
                            const ResidualFn& fn);

/// One-line summary plus the first counterexample, e.g.
///   skew [-6..6]: HOLDS (169 tuples, 0 poles)
std::string render_text(const CheckReport& r);

/// JSON object with keys exactly {check, window, verdict, tuples_checked,
/// counterexamples, undefined_points}.
nlohmann::ordered_json report_json(const CheckReport& r);

}  // namespace gva
