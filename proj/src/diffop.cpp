#include "gva/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace gva {

DiffOp DiffOp::monomial(const Rational& c, unsigned xpow, unsigned dorder) {
  DiffOp o;
  o.add(c, xpow, dorder);
  return o;
}

void DiffOp::add(const Rational& c, unsigned xpow, unsigned dorder) {
  if (c == 0) return;
  Key k{xpow, dorder};
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add(c, k.first, k.second);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add(-c, k.first, k.second);
  return *this;
}

DiffOp operator*(const Rational& c, const DiffOp& o) {
  DiffOp r;
  if (c == 0) return r;
  for (const auto& [k, v] : o.terms_) r.terms_.emplace(k, c * v);
  return r;
}

namespace {

std::string monomial_str(unsigned xpow, unsigned dorder) {
  std::string s;
  if (xpow > 0) s = xpow == 1 ? "x" : "x^" + std::to_string(xpow);
  if (dorder > 0) {
    if (!s.empty()) s += "*";
    s += dorder == 1 ? "d" : "d^" + std::to_string(dorder);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c == 1 && (k.first > 0 || k.second > 0)) {
      out += monomial_str(k.first, k.second);
    } else {
      out += rational_to_string(c);
      if (k.first > 0 || k.second > 0) out += "*" + monomial_str(k.first, k.second);
    }
  }
  return out;
}

DiffOp dop_compose(const DiffOp& A, const DiffOp& B) {
  DiffOp out;
  for (const auto& [ka, ca] : A.terms()) {
    const auto [a1, b1] = ka;
    for (const auto& [kb, cb] : B.terms()) {
      const auto [a2, b2] = kb;
      // d^b1 x^a2 = sum_m C(b1,m) a2!/(a2-m)! x^{a2-m} d^{b1-m}
      const unsigned mmax = std::min(b1, a2);
      BigInt binom = 1;   // C(b1, m)
      BigInt falling = 1; // a2!/(a2-m)!
      for (unsigned m = 0; m <= mmax; ++m) {
        if (m > 0) {
          binom = binom * (b1 - m + 1) / m;
          falling *= (a2 - m + 1);
        }
        out.add(ca * cb * Rational(binom * falling), a1 + a2 - m, b1 + b2 - m);
      }
    }
  }
  return out;
}

DiffOp lk_basis(Index i) {
  if (i < 0)
    throw std::invalid_argument("basis index must be nonnegative, got " + std::to_string(i));
  return DiffOp::monomial(1, static_cast<unsigned>(i) + 1, 1);
}

DiffOp lk_star_closed(Index p, Index q) {
  if (p < 0 || q < 0) throw std::invalid_argument("basis indices must be nonnegative");
  DiffOp out;
  const unsigned n = static_cast<unsigned>(p + q);
  out.add(Rational(q + 1), n + 1, 1);  // (q+1) e_{p+q}
  out.add(1, n + 2, 2);                // e_{p+q+1} d/dx
  return out;
}

namespace {

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  return dop_compose(a, b) - dop_compose(b, a);
}

DiffOp ternary(const DiffOp& a, const DiffOp& b, const DiffOp& c) {
  return dop_compose(a, commutator(b, c)) + dop_compose(b, commutator(c, a)) +
         dop_compose(c, commutator(a, b));
}

Residual dop_residual(const DiffOp& d) {
  Residual r;
  for (const auto& [k, c] : d.terms())
    r.extra.emplace_back(monomial_str(k.first, k.second), rational_to_string(c));
  return r;
}

}  // namespace

std::vector<CheckReport> lk_suite(Index pmax, Index bremner_pmax, const LkChecks& checks,
                                  std::size_t cap) {
  if (pmax < 0 || bremner_pmax < 0)
    throw std::invalid_argument("suite bound must be nonnegative");
  std::vector<CheckReport> reports;
  const Window w{0, pmax};

  auto e = [](const std::vector<Index>& t, std::size_t k) { return lk_basis(t[k]); };

  if (checks.assoc) {
    reports.push_back(run_tuple_check(
        "lk-assoc", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), er = e(t, 2);
          return dop_residual(dop_compose(dop_compose(ep, eq), er) -
                              dop_compose(ep, dop_compose(eq, er)));
        }));
  }
  if (checks.triple) {
    reports.push_back(run_tuple_check(
        "lk-triple-closed", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          const Index p = t[0], q = t[1], r = t[2];
          // (r+1)(q+r+1) e_{p+q+r} + (q+2r+3) e_{p+q+r+1} d + e_{p+q+r+2} d^2
          DiffOp closed;
          const unsigned n = static_cast<unsigned>(p + q + r);
          closed.add(Rational(r + 1) * Rational(q + r + 1), n + 1, 1);
          closed.add(Rational(q + 2 * r + 3), n + 2, 2);
          closed.add(1, n + 3, 3);
          return dop_residual(dop_compose(e(t, 0), dop_compose(e(t, 1), e(t, 2))) - closed);
        }));
  }
  if (checks.commutator) {
    reports.push_back(run_tuple_check(
        "lk-commutator", w, 2, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          const Index p = t[0], q = t[1];
          DiffOp expected = Rational(q - p) * lk_basis(p + q);
          return dop_residual(commutator(e(t, 0), e(t, 1)) - expected);
        }));
  }
  if (checks.ternary) {
    reports.push_back(run_tuple_check(
        "lk-ternary", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          return dop_residual(ternary(e(t, 0), e(t, 1), e(t, 2)));
        }));
  }
  if (checks.filippov) {
    reports.push_back(run_tuple_check(
        "lk-filippov", w, 5, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp A = e(t, 0), B = e(t, 1), C = e(t, 2), D = e(t, 3), E = e(t, 4);
          return dop_residual(ternary(A, B, ternary(C, D, E)) - ternary(ternary(A, B, C), D, E) -
                              ternary(C, ternary(A, B, D), E) - ternary(C, D, ternary(A, B, E)));
        }));
  }
  if (checks.bremner) {
    reports.push_back(run_tuple_check(
        "lk-bremner", Window{0, bremner_pmax}, 7, cap,
        [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp A = e(t, 0), B = e(t, 1), C = e(t, 2), D = e(t, 3), E = e(t, 4), F = e(t, 5),
                 G = e(t, 6);
          return dop_residual(ternary(ternary(A, ternary(B, C, D), E), F, G) -
                              ternary(ternary(A, B, C), ternary(D, E, F), G));
        }));
  }
  if (checks.derivation) {
    reports.push_back(run_tuple_check(
        "lk-derivation", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), er = e(t, 2);
          return dop_residual(commutator(ep, dop_compose(eq, er)) -
                              dop_compose(eq, commutator(ep, er)) -
                              dop_compose(commutator(ep, eq), er));
        }));
  }
  if (checks.ops) {
    // left/right multiplication operator identities, each evaluated on e_m
    reports.push_back(run_tuple_check(
        "lk-ops-L-rep", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          return dop_residual(dop_compose(ep, dop_compose(eq, x)) -
                              dop_compose(eq, dop_compose(ep, x)) -
                              dop_compose(commutator(ep, eq), x));
        }));
    reports.push_back(run_tuple_check(
        "lk-ops-R-antirep", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          DiffOp lhs = dop_compose(x, commutator(ep, eq));
          DiffOp rq_rp = dop_compose(dop_compose(x, eq), ep);
          DiffOp rp_rq = dop_compose(dop_compose(x, ep), eq);
          return dop_residual(lhs + (rq_rp - rp_rq));
        }));
    reports.push_back(run_tuple_check(
        "lk-ops-LR-commute", w, 3, cap,
        [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          return dop_residual(dop_compose(ep, dop_compose(x, eq)) -
                              dop_compose(dop_compose(ep, x), eq));
        }));
    // Variant readings that put the commutator inside the product.
    reports.push_back(run_tuple_check(
        "lk-ops-LR-variant", w, 3, cap,
        [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          DiffOp lr = dop_compose(ep, dop_compose(x, eq)) - dop_compose(dop_compose(ep, x), eq);
          return dop_residual(lr - dop_compose(ep, commutator(x, eq)));
        }));
    reports.push_back(run_tuple_check(
        "lk-ops-RL-variant", w, 3, cap,
        [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          // [R_p, L_q](x) = (e_q*x)*e_p - e_q*(x*e_p), vs e_q*[e_p, x]
          DiffOp lhs = dop_compose(dop_compose(eq, x), ep) - dop_compose(eq, dop_compose(x, ep));
          return dop_residual(lhs - dop_compose(eq, commutator(ep, x)));
        }));
    reports.push_back(run_tuple_check(
        "lk-ops-5-sum", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), x = e(t, 2);
          DiffOp lhs = dop_compose(dop_compose(x, eq), ep) + dop_compose(x, dop_compose(ep, eq));
          DiffOp rhs = dop_compose(x, dop_compose(eq, ep) + dop_compose(ep, eq));
          return dop_residual(lhs - rhs);
        }));
  }
  if (checks.final_identity) {
    reports.push_back(run_tuple_check(
        "lk-final", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
          DiffOp ep = e(t, 0), eq = e(t, 1), er = e(t, 2);
          DiffOp lhs = commutator(ep, commutator(eq, er)) + commutator(er, commutator(ep, eq));
          DiffOp rhs = dop_compose(eq, commutator(ep, er)) - dop_compose(commutator(ep, er), eq);
          return dop_residual(lhs - rhs);
        }));
  }
  return reports;
}

std::vector<CheckReport> lk_suite(Index pmax, std::size_t cap) {
  return lk_suite(pmax, std::min<Index>(pmax, 2), LkChecks{}, cap);
}

}  // namespace gva
