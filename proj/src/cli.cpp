#include "gva/cli.hpp"

#include <fstream>
#include <sstream>

#include "gva/burgers.hpp"
#include "gva/checks.hpp"
#include "gva/cohomology.hpp"
#include "gva/config.hpp"
#include "gva/diffop.hpp"
#include "gva/extensions.hpp"

#include "CLI11.hpp"

namespace gva {

std::optional<Window> parse_window_arg(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
    Index lo = std::stoll(lo_s, &used);
    if (used != lo_s.size()) return std::nullopt;
    Index hi = std::stoll(hi_s, &used);
    if (used != hi_s.size()) return std::nullopt;
    if (lo > hi) return std::nullopt;
    return Window{lo, hi};
  } catch (...) {
    return std::nullopt;
  }
}

std::optional<Verdict> parse_verdict(const std::string& text) {
  if (text == "holds") return Verdict::holds;
  if (text == "fails") return Verdict::fails;
  if (text == "vacuous") return Verdict::vacuous;
  return std::nullopt;
}

int run_plan(const RunPlan& plan, std::ostream& out) {
  bool unexpected = false;
  std::vector<std::pair<std::string, CheckReport>> all;  // (selector, report)
  for (const auto& item : plan.items) {
    for (auto& rep : item.run()) all.emplace_back(item.selector, std::move(rep));
  }
  auto expected_for = [&](const std::string& selector,
                          const std::string& name) -> std::optional<Verdict> {
    if (auto it = plan.expectations.find(name); it != plan.expectations.end()) return it->second;
    if (auto it = plan.expectations.find(selector); it != plan.expectations.end())
      return it->second;
    return plan.expect_all;
  };

  if (plan.format == RunPlan::Format::json) {
    nlohmann::ordered_json doc;
    doc["artifact_version"] = kArtifactVersion;
    doc["spec_echo"] = plan.spec_echo;
    auto reports = nlohmann::ordered_json::array();
    for (const auto& [selector, rep] : all) {
      reports.push_back(report_json(rep));
      auto want = expected_for(selector, rep.check);
      if (want && *want != rep.verdict) unexpected = true;
    }
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [selector, rep] : all) {
      out << render_text(rep);
      auto want = expected_for(selector, rep.check);
      if (want) {
        if (*want != rep.verdict) {
          unexpected = true;
          out << "\n  UNEXPECTED: wanted " << verdict_name(*want) << ", got "
              << verdict_name(rep.verdict);
        } else {
          out << "\n  expected verdict confirmed (" << verdict_name(*want) << ")";
        }
      }
      out << "\n";
    }
  }
  return unexpected ? 1 : 0;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SpecFlags {
  std::string config_path;
  std::string f_text, f_theta_text;
  std::string a_text = "1", b_text = "1", eps_text = "0";
  std::string scalar_text = "rational";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "algebra configuration file");
    cmd->add_option("--f", f_text, "plain structure function expression");
    cmd->add_option("--f-theta", f_theta_text, "theta structure function expression");
    cmd->add_option("--a", a_text, "left bracket weight (rational)");
    cmd->add_option("--b", b_text, "right bracket weight (rational)");
    cmd->add_option("--eps", eps_text, "value substituted for eps (rational)");
    cmd->add_option("--scalar", scalar_text, "scalar mode: rational or dual");
  }

  ParsedConfig resolve() const {
    if (!config_path.empty()) {
      if (!f_text.empty())
        throw std::runtime_error("give either --config or --f, not both");
      return parse_config(read_file(config_path));
    }
    if (f_text.empty()) throw std::runtime_error("a spec is required: --config FILE or --f EXPR");
    std::ostringstream cfg;
    cfg << "f = " << f_text << "\n";
    if (!f_theta_text.empty()) cfg << "f_theta = " << f_theta_text << "\n";
    cfg << "a = " << a_text << "\nb = " << b_text << "\neps = " << eps_text
        << "\nscalar = " << scalar_text << "\n";
    return parse_config(cfg.str());
  }
};

nlohmann::ordered_json spec_echo_json(const AlgebraSpec& spec) {
  nlohmann::ordered_json echo;
  echo["f"] = print_canonical(spec.f);
  if (spec.f_theta)
    echo["f_theta"] = print_canonical(spec.f_theta);
  else
    echo["f_theta"] = nullptr;
  echo["a"] = rational_to_string(spec.a);
  echo["b"] = rational_to_string(spec.b);
  echo["eps"] = spec.eps.str();
  echo["scalar"] = spec.scalar_mode == ScalarMode::dual ? "dual" : "rational";
  return echo;
}

std::map<Index, std::map<Index, Rational>> parse_endo_table_text(const std::string& src) {
  std::map<Index, std::map<Index, Rational>> table;
  std::istringstream in(src);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> cells;
    std::string cell;
    while (ls >> cell) cells.push_back(cell);
    if (cells.empty()) continue;
    if (cells.size() != 3)
      throw std::runtime_error("endomorphism table line " + std::to_string(lineno) +
                               ": expected 'i k value'");
    Index i, k;
    try {
      i = std::stoll(cells[0]);
      k = std::stoll(cells[1]);
    } catch (...) {
      throw std::runtime_error("endomorphism table line " + std::to_string(lineno) +
                               ": bad index");
    }
    auto v = rational_from_string(cells[2]);
    if (!v)
      throw std::runtime_error("endomorphism table line " + std::to_string(lineno) +
                               ": bad rational '" + cells[2] + "'");
    table[i][k] = *v;
  }
  return table;
}

struct SelectorInfo {
  Window def_window;
  Index max_span;  // maximum allowed hi - lo + 1
};

const std::map<std::string, SelectorInfo>& selector_info() {
  static const std::map<std::string, SelectorInfo> info = {
      {"skew", {{-4, 4}, 41}},      {"jacobi", {{-4, 4}, 41}},
      {"lsa", {{-4, 4}, 41}},       {"alternative", {{-4, 4}, 41}},
      {"derivation", {{-4, 4}, 41}}, {"cocycle", {{-4, 4}, 41}},
      {"hereditary", {{-4, 4}, 41}}, {"bianchi", {{-4, 4}, 41}},
      {"rho", {{-4, 4}, 41}},       {"universal", {{-3, 3}, 41}},
      {"filippov", {{-2, 2}, 9}},   {"bremner", {{-1, 1}, 3}},
      {"bmod", {{-2, 2}, 9}},       {"crosscheck", {{-4, 4}, 41}},
  };
  return info;
}

struct CheckCmdArgs {
  SpecFlags spec_flags;
  std::vector<std::string> checks{};
  std::vector<std::string> windows{};
  std::vector<std::string> expects{};
  std::size_t cap = kDefaultCounterexampleCap;
  std::string format = "text";
  std::string mode = "element";
  std::string jacobi_form = "J";
  std::string variant = "shift";
  std::string rho_mode = "difference";
  Index x0 = 1;
  std::string phi_table_path;
  std::string rho_table_path;
  std::string psi_path;
  std::string psi_const;
  std::string psi_phi_path;
};

int run_check_command(const CheckCmdArgs& args, std::ostream& out, std::ostream& err) {
  ParsedConfig parsed = args.spec_flags.resolve();
  for (const auto& wmsg : parsed.warnings) err << wmsg << "\n";
  const AlgebraSpec spec = parsed.spec;

  if (args.checks.empty()) throw std::runtime_error("--checks requires at least one check name");

  // windows: bare LO..HI sets the default, NAME=LO..HI overrides per selector
  std::optional<Window> global_window;
  std::map<std::string, Window> per_check;
  for (const auto& wtext : args.windows) {
    auto eq = wtext.find('=');
    if (eq == std::string::npos) {
      auto w = parse_window_arg(wtext);
      if (!w) throw std::runtime_error("bad window '" + wtext + "' (want LO..HI)");
      global_window = *w;
    } else {
      auto w = parse_window_arg(wtext.substr(eq + 1));
      if (!w) throw std::runtime_error("bad window '" + wtext + "' (want NAME=LO..HI)");
      per_check[wtext.substr(0, eq)] = *w;
    }
  }

  RunPlan plan;
  plan.spec_echo = spec_echo_json(spec);
  plan.format = args.format == "json" ? RunPlan::Format::json : RunPlan::Format::text;

  for (const auto& etext : args.expects) {
    auto eq = etext.find('=');
    if (eq == std::string::npos) {
      auto v = parse_verdict(etext);
      if (!v) throw std::runtime_error("bad verdict '" + etext + "'");
      plan.expect_all = *v;
    } else {
      auto v = parse_verdict(etext.substr(eq + 1));
      if (!v) throw std::runtime_error("bad verdict in '" + etext + "'");
      plan.expectations[etext.substr(0, eq)] = *v;
    }
  }

  const std::size_t cap = args.cap;
  for (const std::string& name : args.checks) {
    auto info_it = selector_info().find(name);
    if (info_it == selector_info().end()) throw std::runtime_error("unknown check '" + name + "'");
    Window w = info_it->second.def_window;
    if (global_window) w = *global_window;
    if (auto it = per_check.find(name); it != per_check.end()) w = it->second;
    if (w.count() > info_it->second.max_span)
      throw std::runtime_error("window for '" + name + "' exceeds the hard limit of " +
                               std::to_string(info_it->second.max_span) + " values");

    PlanItem item;
    item.selector = name;
    if (name == "skew") {
      item.run = [=] { return std::vector<CheckReport>{check_skew(spec, w, cap)}; };
    } else if (name == "jacobi") {
      std::string form = args.jacobi_form;
      item.run = [=]() -> std::vector<CheckReport> {
        if (form == "both")
          return {check_jacobi(spec, w, JacobiForm::J, cap),
                  check_jacobi(spec, w, JacobiForm::TG, cap)};
        if (form == "TG") return {check_jacobi(spec, w, JacobiForm::TG, cap)};
        return {check_jacobi(spec, w, JacobiForm::J, cap)};
      };
    } else if (name == "lsa") {
      ResidualMode m = args.mode == "scalar" ? ResidualMode::scalar : ResidualMode::element;
      item.run = [=] { return std::vector<CheckReport>{check_quasi_assoc(spec, w, m, cap)}; };
    } else if (name == "alternative") {
      item.run = [=] { return check_alternative(spec, w, cap); };
    } else if (name == "derivation") {
      ResidualMode m = args.mode == "scalar" ? ResidualMode::scalar : ResidualMode::element;
      item.run = [=] { return std::vector<CheckReport>{check_derivation(spec, w, m, cap)}; };
    } else if (name == "cocycle") {
      PsiFn psi;
      if (!args.psi_path.empty()) {
        auto table = std::make_shared<Cochain2>(parse_psi_text(read_file(args.psi_path)));
        psi = [table](Index i, Index j) { return table->at(i, j); };
      } else if (!args.psi_const.empty()) {
        auto c = rational_from_string(args.psi_const);
        if (!c) throw std::runtime_error("bad --psi-const rational");
        Rational cv = *c;
        psi = [cv](Index, Index) { return cv; };
      } else if (!args.psi_phi_path.empty()) {
        auto phi = std::make_shared<Cochain1>(parse_phi_text(read_file(args.psi_phi_path)));
        AlgebraSpec s = spec;
        psi = [phi, s](Index i, Index j) {
          auto g = g_from_f(s, i, j);
          if (!g) throw PoleError(i, j);
          return g->plain.real_part() * (phi->at(i + j) - phi->at(i) - phi->at(j));
        };
      } else {
        throw std::runtime_error("cocycle requires --psi FILE, --psi-const R or --psi-phi FILE");
      }
      item.run = [=] { return std::vector<CheckReport>{check_cocycle(spec, w, psi, cap)}; };
    } else if (name == "hereditary") {
      EndoSpec phi;
      HereditaryVariant variant;
      if (args.variant == "shift") {
        variant = HereditaryVariant::scalar_shift;
        phi = EndoSpec::shift(args.x0);
      } else if (args.variant == "table") {
        variant = HereditaryVariant::general_table;
        if (args.phi_table_path.empty())
          throw std::runtime_error("hereditary table variant requires --phi-table FILE");
        phi = EndoSpec::from_table(parse_endo_table_text(read_file(args.phi_table_path)));
      } else if (args.variant == "shift1") {
        variant = HereditaryVariant::shift1_table;
      } else if (args.variant == "element") {
        variant = HereditaryVariant::element_def;
        if (!args.phi_table_path.empty())
          phi = EndoSpec::from_table(parse_endo_table_text(read_file(args.phi_table_path)));
        else
          phi = EndoSpec::shift(args.x0);
      } else {
        throw std::runtime_error("bad --variant (shift|table|shift1|element)");
      }
      item.run = [=] {
        return std::vector<CheckReport>{check_hereditary(spec, w, phi, variant, cap)};
      };
    } else if (name == "bianchi") {
      Index x0 = args.x0;
      item.run = [=] { return std::vector<CheckReport>{check_bianchi_p(spec, w, x0, cap)}; };
    } else if (name == "rho") {
      EndoSpec rho = args.rho_table_path.empty()
                         ? EndoSpec::shift(args.x0)
                         : EndoSpec::from_table(parse_endo_table_text(read_file(args.rho_table_path)));
      ResidualMode m =
          args.rho_mode == "element" ? ResidualMode::element : ResidualMode::scalar;
      if (rho.kind == EndoSpec::Kind::table) m = ResidualMode::element;
      item.run = [=] { return std::vector<CheckReport>{check_rho_compat(spec, w, rho, m, cap)}; };
    } else if (name == "universal") {
      item.run = [=] { return std::vector<CheckReport>{check_universal(spec, w, cap)}; };
    } else if (name == "filippov") {
      item.run = [=] { return std::vector<CheckReport>{check_filippov(spec, w, cap)}; };
    } else if (name == "bremner") {
      item.run = [=] { return std::vector<CheckReport>{check_bremner(spec, w, cap)}; };
    } else if (name == "bmod") {
      item.run = [=] { return check_bmod(spec, w, cap); };
    } else if (name == "crosscheck") {
      item.run = [=] { return crosscheck_virasoro_closed_forms(spec, w, cap); };
    }
    plan.items.push_back(std::move(item));
  }
  return run_plan(plan, out);
}

void print_cochain2(const Cochain2& psi, std::ostream& out) {
  for (const auto& [key, v] : psi.upper()) {
    if (key.first == key.second) continue;
    out << key.first << " " << key.second << " " << rational_to_string(v) << "\n";
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification workbench for generalized Virasoro-type graded algebras"};
  app.require_subcommand(1);

  // ---- check ----
  auto check_args = std::make_shared<CheckCmdArgs>();
  CLI::App* check = app.add_subcommand("check", "run identity checks against a spec");
  check_args->spec_flags.add_to(check);
  check->add_option("--checks", check_args->checks,
                    "comma-separated: skew,jacobi,lsa,alternative,derivation,cocycle,"
                    "hereditary,bianchi,rho,universal,filippov,bremner,bmod,crosscheck")
      ->required()
      ->delimiter(',');
  check->add_option("--window", check_args->windows,
                    "window LO..HI (default per check) or NAME=LO..HI, repeatable");
  check->add_option("--expect", check_args->expects,
                    "expected verdict (holds|fails|vacuous), optionally NAME=VERDICT");
  check->add_option("--cap", check_args->cap, "counterexamples stored per report (default 20)");
  check->add_option("--format", check_args->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--mode", check_args->mode, "residual mode for lsa/derivation")
      ->check(CLI::IsMember({"scalar", "element"}));
  check->add_option("--jacobi-form", check_args->jacobi_form, "J, TG or both")
      ->check(CLI::IsMember({"J", "TG", "both"}));
  check->add_option("--variant", check_args->variant,
                    "hereditary variant: shift|table|shift1|element");
  check->add_option("--rho-mode", check_args->rho_mode, "difference or element")
      ->check(CLI::IsMember({"difference", "element"}));
  check->add_option("--x0", check_args->x0, "shift amount for hereditary/bianchi/rho");
  check->add_option("--phi-table", check_args->phi_table_path, "endomorphism table (i k value)");
  check->add_option("--rho-table", check_args->rho_table_path, "endomorphism table (i k value)");
  check->add_option("--psi", check_args->psi_path, "2-cochain table (i j value)");
  check->add_option("--psi-const", check_args->psi_const, "constant psi value");
  check->add_option("--psi-phi", check_args->psi_phi_path,
                    "derive psi as the coboundary of this phi table (x value)");

  // ---- cohomology ----
  struct CohoArgs {
    SpecFlags spec_flags;
    std::string op;
    std::string window_text = "-4..4";
    std::string phi_path, psi_path;
  };
  auto coho_args = std::make_shared<CohoArgs>();
  CLI::App* coho = app.add_subcommand("cohomology", "coboundary operators and the solver");
  coho->add_option("op", coho_args->op, "delta1 | delta2 | solve | kernel")->required();
  coho_args->spec_flags.add_to(coho);
  coho->add_option("--window", coho_args->window_text, "window LO..HI");
  coho->add_option("--phi", coho_args->phi_path, "phi table file (x value)");
  coho->add_option("--psi", coho_args->psi_path, "psi table file (i j value)");

  // ---- extensions ----
  struct ExtArgs {
    SpecFlags spec_flags;
    std::string op;
    std::string window_text = "-3..3";
    std::size_t cap = kDefaultCounterexampleCap;
    Index x0 = 1;
    std::string rho_table_path;
    std::string table_path;
    std::string format = "text";
  };
  auto ext_args = std::make_shared<ExtArgs>();
  CLI::App* ext = app.add_subcommand("extensions", "phase-space extension, double, deformation");
  ext->add_option("op", ext_args->op, "tstar | double | deform | rho1 | hydro")->required();
  ext_args->spec_flags.add_to(ext);
  ext->add_option("--window", ext_args->window_text, "window LO..HI");
  ext->add_option("--cap", ext_args->cap, "counterexample cap");
  ext->add_option("--x0", ext_args->x0, "shift amount for deform/rho1");
  ext->add_option("--rho-table", ext_args->rho_table_path, "rho table (i k value)");
  ext->add_option("--table", ext_args->table_path, "structure table file (for hydro)");
  ext->add_option("--format", ext_args->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- lk ----
  struct LkArgs {
    Index pmax = 6;
    Index bremner_pmax = -1;
    std::vector<std::string> checks;
    std::size_t cap = kDefaultCounterexampleCap;
    std::string format = "text";
    std::vector<std::string> expects;
  };
  auto lk_args = std::make_shared<LkArgs>();
  CLI::App* lk = app.add_subcommand("lk", "polynomial vector-field operator algebra suite");
  lk->add_option("--pmax", lk_args->pmax, "basis indices 0..pmax (default 6)");
  lk->add_option("--bremner-pmax", lk_args->bremner_pmax,
                 "separate bound for the septuple sweep (default min(pmax,2))");
  lk->add_option("--checks", lk_args->checks,
                 "comma-separated: assoc,triple,commutator,ternary,filippov,bremner,"
                 "derivation,ops,final (default all)")
      ->delimiter(',');
  lk->add_option("--cap", lk_args->cap, "counterexample cap");
  lk->add_option("--format", lk_args->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  lk->add_option("--expect", lk_args->expects, "expected verdict, optionally NAME=VERDICT");

  // ---- burgers ----
  struct BurgersArgs {
    SpecFlags spec_flags;
    std::string op;
    std::string table_path;
    std::string window_text = "0..2";
    bool latex = false;
    std::size_t cap = kDefaultCounterexampleCap;
    std::string format = "text";
    std::vector<std::string> expects;
  };
  auto bur_args = std::make_shared<BurgersArgs>();
  CLI::App* bur = app.add_subcommand("burgers", "structure tables and Burgers systems");
  bur->add_option("op", bur_args->op, "check | emit | a | truncate")->required();
  bur->add_option("--table", bur_args->table_path, "structure table file");
  bur_args->spec_flags.add_to(bur);
  bur->add_option("--window", bur_args->window_text, "window LO..HI (truncate)");
  bur->add_flag("--latex", bur_args->latex, "LaTeX output for emit");
  bur->add_option("--cap", bur_args->cap, "counterexample cap");
  bur->add_option("--format", bur_args->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bur->add_option("--expect", bur_args->expects, "expected verdict, optionally NAME=VERDICT");

  // ---- parse ----
  struct ParseArgs {
    std::string expr;
    bool eval = false;
    Index i = 0, j = 0;
    std::string eps_text = "0";
  };
  auto parse_args = std::make_shared<ParseArgs>();
  CLI::App* parse_cmd = app.add_subcommand("parse", "echo the canonical form of an expression");
  parse_cmd->add_option("--expr", parse_args->expr, "expression text")->required();
  parse_cmd->add_flag("--eval", parse_args->eval, "also evaluate at --i/--j/--eps");
  parse_cmd->add_option("--i", parse_args->i, "value of i");
  parse_cmd->add_option("--j", parse_args->j, "value of j");
  parse_cmd->add_option("--eps", parse_args->eps_text, "value of eps (rational)");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("gva");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return run_check_command(*check_args, out, err);

    if (coho->parsed()) {
      ParsedConfig parsed = coho_args->spec_flags.resolve();
      for (const auto& wmsg : parsed.warnings) err << wmsg << "\n";
      const AlgebraSpec& spec = parsed.spec;
      auto w = parse_window_arg(coho_args->window_text);
      if (!w) throw std::runtime_error("bad --window");
      if (coho_args->op == "delta1") {
        if (coho_args->phi_path.empty()) throw std::runtime_error("delta1 requires --phi FILE");
        Cochain2 psi = delta1(spec, parse_phi_text(read_file(coho_args->phi_path)), *w);
        print_cochain2(psi, out);
        return 0;
      }
      if (coho_args->op == "delta2") {
        if (coho_args->psi_path.empty()) throw std::runtime_error("delta2 requires --psi FILE");
        auto res = delta2(spec, parse_psi_text(read_file(coho_args->psi_path)), *w);
        bool all_zero = true;
        for (const auto& [t, v] : res) {
          if (v == 0) continue;
          all_zero = false;
          out << t[0] << " " << t[1] << " " << t[2] << " " << rational_to_string(v) << "\n";
        }
        if (all_zero) out << "# all residuals zero: psi is a 2-cocycle on this window\n";
        return 0;
      }
      if (coho_args->op == "solve") {
        if (coho_args->psi_path.empty()) throw std::runtime_error("solve requires --psi FILE");
        SolveResult res = solve_coboundary(spec, parse_psi_text(read_file(coho_args->psi_path)), *w);
        if (res.solvable) {
          out << "# coboundary on this window (window-relative verdict); one solution phi:\n";
          for (const auto& [x, v] : res.solution.phi)
            out << x << " " << rational_to_string(v) << "\n";
        } else {
          out << "# not a coboundary on this window (window-relative verdict)\n";
          out << "# inconsistent combination (pair i,j : multiplier), summing to 0 = "
              << rational_to_string(res.witness.rhs_value) << ":\n";
          for (const auto& [tag, mult] : res.witness.combination)
            out << tag.first << "," << tag.second << " : " << rational_to_string(mult) << "\n";
        }
        return 0;
      }
      if (coho_args->op == "kernel") {
        auto basis = kernel_basis(spec, *w);
        out << "# kernel dimension " << basis.size() << "\n";
        for (std::size_t k = 0; k < basis.size(); ++k) {
          out << "# basis vector " << (k + 1) << "\n";
          for (const auto& [x, v] : basis[k].phi)
            if (v != 0) out << x << " " << rational_to_string(v) << "\n";
        }
        return 0;
      }
      throw std::runtime_error("unknown cohomology op '" + coho_args->op + "'");
    }

    if (ext->parsed()) {
      auto w = parse_window_arg(ext_args->window_text);
      if (!w) throw std::runtime_error("bad --window");
      if (w->count() > 41)
        throw std::runtime_error("extensions window exceeds the hard limit of 41 values");
      if (ext_args->op == "hydro") {
        if (ext_args->table_path.empty()) throw std::runtime_error("hydro requires --table FILE");
        StructureTable T = StructureTable::from_text(read_file(ext_args->table_path));
        std::vector<std::vector<Rational>> rho(
            T.dim(), std::vector<Rational>(T.dim(), Rational(0)));
        if (!ext_args->rho_table_path.empty()) {
          auto rt = parse_endo_table_text(read_file(ext_args->rho_table_path));
          for (const auto& [i, row] : rt)
            for (const auto& [k, v] : row) {
              if (i < 1 || i > T.dim() || k < 1 || k > T.dim())
                throw std::runtime_error("rho table index outside 1..N");
              rho[i - 1][k - 1] = v;
            }
        }
        out << emit_extended_hydro(T, rho);
        return 0;
      }
      ParsedConfig parsed = ext_args->spec_flags.resolve();
      for (const auto& wmsg : parsed.warnings) err << wmsg << "\n";
      const AlgebraSpec& spec = parsed.spec;
      RunPlan plan;
      plan.spec_echo = spec_echo_json(spec);
      plan.format =
          ext_args->format == "json" ? RunPlan::Format::json : RunPlan::Format::text;
      const std::size_t cap = ext_args->cap;
      if (ext_args->op == "tstar") {
        plan.items.push_back(
            {"tstar", [spec, w, cap] {
               return std::vector<CheckReport>{check_tstar_lsa(spec, *w, cap)};
             }});
      } else if (ext_args->op == "double") {
        plan.items.push_back(
            {"double", [spec, w, cap] {
               return std::vector<CheckReport>{check_double_lsa(spec, *w, cap)};
             }});
      } else if (ext_args->op == "deform") {
        EndoSpec rho = ext_args->rho_table_path.empty()
                           ? EndoSpec::shift(ext_args->x0)
                           : EndoSpec::from_table(
                                 parse_endo_table_text(read_file(ext_args->rho_table_path)));
        ProductFn prod = deform_product(spec, rho);
        plan.items.push_back(
            {"deform", [prod, w, cap] {
               return std::vector<CheckReport>{
                   check_lsym_product("deform-lsa", prod, *w, cap)};
             }});
      } else if (ext_args->op == "rho1") {
        Index x0 = ext_args->x0;
        plan.items.push_back(
            {"rho1", [spec, w, x0, cap] {
               return std::vector<CheckReport>{check_rho1_lift(spec, *w, x0, cap)};
             }});
      } else {
        throw std::runtime_error("unknown extensions op '" + ext_args->op + "'");
      }
      return run_plan(plan, out);
    }

    if (lk->parsed()) {
      LkChecks sel;
      if (!lk_args->checks.empty()) {
        sel = LkChecks{false, false, false, false, false, false, false, false, false};
        for (const auto& c : lk_args->checks) {
          if (c == "assoc") sel.assoc = true;
          else if (c == "triple") sel.triple = true;
          else if (c == "commutator") sel.commutator = true;
          else if (c == "ternary") sel.ternary = true;
          else if (c == "filippov") sel.filippov = true;
          else if (c == "bremner") sel.bremner = true;
          else if (c == "derivation") sel.derivation = true;
          else if (c == "ops") sel.ops = true;
          else if (c == "final") sel.final_identity = true;
          else throw std::runtime_error("unknown lk check '" + c + "'");
        }
      }
      Index bp = lk_args->bremner_pmax >= 0 ? lk_args->bremner_pmax
                                            : std::min<Index>(lk_args->pmax, 2);
      RunPlan plan;
      plan.spec_echo["algebra"] = "polynomial vector fields, e_i = x^{i+1} d/dx";
      plan.spec_echo["pmax"] = lk_args->pmax;
      plan.format = lk_args->format == "json" ? RunPlan::Format::json : RunPlan::Format::text;
      for (const auto& etext : lk_args->expects) {
        auto eq = etext.find('=');
        if (eq == std::string::npos) {
          auto v = parse_verdict(etext);
          if (!v) throw std::runtime_error("bad verdict '" + etext + "'");
          plan.expect_all = *v;
        } else {
          auto v = parse_verdict(etext.substr(eq + 1));
          if (!v) throw std::runtime_error("bad verdict in '" + etext + "'");
          plan.expectations[etext.substr(0, eq)] = *v;
        }
      }
      Index pmax = lk_args->pmax;
      std::size_t cap = lk_args->cap;
      plan.items.push_back({"lk", [pmax, bp, sel, cap] { return lk_suite(pmax, bp, sel, cap); }});
      return run_plan(plan, out);
    }

    if (bur->parsed()) {
      if (bur_args->op == "truncate") {
        ParsedConfig parsed = bur_args->spec_flags.resolve();
        for (const auto& wmsg : parsed.warnings) err << wmsg << "\n";
        auto w = parse_window_arg(bur_args->window_text);
        if (!w) throw std::runtime_error("bad --window");
        TruncatedTable t = graded_truncate(parsed.spec, *w);
        out << "# basis e_x for x in [" << t.window.lo << ".." << t.window.hi
            << "], table index x - (" << t.window.lo << ") + 1\n";
        out << t.table.to_text();
        out << "# dropped (result outside window): " << t.report.dropped_out_of_window.size()
            << "\n";
        for (const auto& [a, b] : t.report.dropped_out_of_window)
          out << "#   " << a << " * " << b << "\n";
        out << "# dropped (undefined): " << t.report.dropped_undefined.size() << "\n";
        for (const auto& [a, b] : t.report.dropped_undefined) out << "#   " << a << " * " << b << "\n";
        if (t.report.dropped_theta_terms)
          out << "# dropped theta terms: " << t.report.dropped_theta_terms << "\n";
        return 0;
      }
      if (bur_args->table_path.empty()) throw std::runtime_error("this op requires --table FILE");
      StructureTable T = StructureTable::from_text(read_file(bur_args->table_path));
      if (bur_args->op == "emit") {
        out << emit_burgers(T, bur_args->latex ? EmitFormat::latex : EmitFormat::plain);
        return 0;
      }
      if (bur_args->op == "a") {
        CubicCoefficients A = compute_A(T);
        bool any = false;
        for (int j = 1; j <= T.dim(); ++j)
          for (int k = 1; k <= T.dim(); ++k)
            for (int m = 1; m <= T.dim(); ++m)
              for (int i = 1; i <= T.dim(); ++i)
                if (A.at(j, k, m, i) != 0) {
                  any = true;
                  out << j << " " << k << " " << m << " " << i << " "
                      << rational_to_string(A.at(j, k, m, i)) << "\n";
                }
        if (!any) out << "# all cubic coefficients vanish\n";
        return 0;
      }
      if (bur_args->op == "check") {
        RunPlan plan;
        plan.spec_echo["table_dim"] = T.dim();
        plan.format =
            bur_args->format == "json" ? RunPlan::Format::json : RunPlan::Format::text;
        for (const auto& etext : bur_args->expects) {
          auto eq = etext.find('=');
          if (eq == std::string::npos) {
            auto v = parse_verdict(etext);
            if (!v) throw std::runtime_error("bad verdict '" + etext + "'");
            plan.expect_all = *v;
          } else {
            auto v = parse_verdict(etext.substr(eq + 1));
            if (!v) throw std::runtime_error("bad verdict in '" + etext + "'");
            plan.expectations[etext.substr(0, eq)] = *v;
          }
        }
        std::size_t cap = bur_args->cap;
        plan.items.push_back({"lsa-table", [T, cap] { return lsa_table_check(T, cap); }});
        return run_plan(plan, out);
      }
      throw std::runtime_error("unknown burgers op '" + bur_args->op + "'");
    }

    if (parse_cmd->parsed()) {
      ExprPtr ast = parse_expr(parse_args->expr);
      out << print_canonical(ast) << "\n";
      if (parse_args->eval) {
        auto epsr = rational_from_string(parse_args->eps_text);
        if (!epsr) throw std::runtime_error("bad --eps rational");
        auto v = eval_ast(ast, parse_args->i, parse_args->j, Scalar::from_rational(*epsr));
        out << (v ? v->str() : std::string("undefined")) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace gva
