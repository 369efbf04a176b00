#include "gva/extensions.hpp"

#include <sstream>

namespace gva {

namespace {

void require_theta_free(const AlgebraSpec& spec, const char* what) {
  if (spec.f_theta)
    throw std::invalid_argument(std::string(what) +
                                " is defined for theta-free products only");
}

// e_i . e'_j = -f(i, j-i) e'_{j-i}, extended bilinearly.
Element dual_action(const AlgebraSpec& spec, const Element& A, const Element& D) {
  Element out = Element::zero(A.keeps_zeros() || D.keeps_zeros());
  for (const auto& [i, ci] : A.terms()) {
    for (const auto& [j, dj] : D.terms()) {
      auto f = eval_struct(spec, StructPart::plain, i, j - i);
      if (!f) throw PoleError(i, j - i);
      out.add_term(j - i, -(ci * dj * *f));
    }
  }
  return out;
}

}  // namespace

// The second slot carries only the left action of the first factor's primal
// part; the bracket X*Y - Y*X of this product is the pair
// ([x,y], x.eta - y.xi). A nonzero right action on the dual slot would break
// left-symmetry (the pre-Lie module axiom fails already for f = -j).
PairedElement tstar_product(const AlgebraSpec& spec, const PairedElement& P,
                            const PairedElement& Q) {
  require_theta_free(spec, "the phase-space product");
  return {star(spec, P.primal, Q.primal), dual_action(spec, P.primal, Q.dual)};
}

PairedElement double_product(const AlgebraSpec& spec, const PairedElement& P,
                             const PairedElement& Q) {
  return {star(spec, P.primal, Q.primal),
          star(spec, P.primal, Q.dual) - star(spec, Q.primal, P.dual)};
}

namespace {

using PairProductFn = PairedElement (*)(const AlgebraSpec&, const PairedElement&,
                                        const PairedElement&);

CheckReport paired_lsym_check(std::string name, const AlgebraSpec& spec, Window w,
                              PairProductFn prod, std::size_t cap) {
  std::vector<std::pair<Index, Index>> ranges{{0, 1}, {w.lo, w.hi}, {0, 1}, {w.lo, w.hi},
                                              {0, 1}, {w.lo, w.hi}};
  return run_tuple_check(
      std::move(name), w, ranges, cap,
      [&spec, prod](const std::vector<Index>& t) -> std::optional<Residual> {
        auto mk = [&](Index slot, Index x) {
          PairedElement p;
          (slot == 0 ? p.primal : p.dual) = Element::fat_basis(x, spec.scalar_mode);
          return p;
        };
        PairedElement X = mk(t[0], t[1]), Y = mk(t[2], t[3]), Z = mk(t[4], t[5]);
        auto assoc = [&](const PairedElement& a, const PairedElement& b, const PairedElement& c) {
          return prod(spec, prod(spec, a, b), c) - prod(spec, a, prod(spec, b, c));
        };
        PairedElement res = assoc(X, Y, Z) - assoc(Y, X, Z);
        return Residual(std::move(res.primal), std::move(res.dual));
      });
}

}  // namespace

CheckReport check_tstar_lsa(const AlgebraSpec& spec, Window w, std::size_t cap) {
  return paired_lsym_check("tstar-lsa", spec, w, &tstar_product, cap);
}

CheckReport check_double_lsa(const AlgebraSpec& spec, Window w, std::size_t cap) {
  return paired_lsym_check("double-lsa", spec, w, &double_product, cap);
}

ProductFn deform_product(const AlgebraSpec& spec, const EndoSpec& rho) {
  if (spec.scalar_mode != ScalarMode::dual)
    throw std::invalid_argument("the deformed product requires dual scalar mode");
  const Scalar nil = Scalar::dual(0, 1);
  return [spec, rho, nil](const Element& x, const Element& y) {
    return star(spec, x, y) + nil * star(spec, rho.apply(x), y);
  };
}

CheckReport check_rho1_lift(const AlgebraSpec& spec, Window w, Index x0, std::size_t cap) {
  require_theta_free(spec, "the rho_1 lift check");
  const EndoSpec rho = EndoSpec::shift(x0);
  return run_tuple_check(
      "rho1-lift", w, 2, cap, [&, x0](const std::vector<Index>& t) -> std::optional<Residual> {
        PairedElement X{Element::fat_basis(t[0], spec.scalar_mode), Element()};
        PairedElement Y{Element::fat_basis(t[1], spec.scalar_mode), Element()};
        auto rho1 = [&](const PairedElement& p) { return PairedElement{rho.apply(p.primal), Element()}; };
        PairedElement lhs = rho1(tstar_product(spec, X, Y) - tstar_product(spec, Y, X));
        PairedElement rhs =
            tstar_product(spec, X, rho1(Y)) - tstar_product(spec, Y, rho1(X));
        PairedElement res = rhs - lhs;
        return Residual(std::move(res.primal), std::move(res.dual));
      });
}

std::string emit_extended_hydro(const StructureTable& T,
                                const std::vector<std::vector<Rational>>& rho) {
  const int N = T.dim();
  if (rho.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("rho matrix must be N x N");
  for (const auto& row : rho)
    if (row.size() != static_cast<std::size_t>(N))
      throw std::invalid_argument("rho matrix must be N x N");

  std::ostringstream out;
  auto term = [](std::ostringstream& line, bool& first, const Rational& coef,
                 const std::string& factors) {
    if (coef == 0) return;
    const bool neg = coef < 0;
    Rational mag = neg ? Rational(-coef) : coef;
    if (first && !neg)
      ;  // no leading +
    else
      line << (neg ? (first ? "-" : " - ") : " + ");
    if (mag != 1) line << rational_to_string(mag) << "*";
    line << factors;
    first = false;
  };

  for (int i = 1; i <= N; ++i) {
    std::ostringstream line;
    line << "u" << i << "_t = ";
    bool first = true;
    // rho(u_x)^i = rho^i_j u^j_x : rho[j-1][i-1] is the e_i coefficient of rho(e_j)
    for (int j = 1; j <= N; ++j)
      term(line, first, rho[j - 1][i - 1], "u" + std::to_string(j) + "_x");
    // (u_x * u)^i = C_{jk}^i u^j_x u^k
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        term(line, first, T.at(j, k, i),
             "u" + std::to_string(j) + "_x * u" + std::to_string(k));
    if (first) line << "0";
    out << line.str() << "\n";
  }
  for (int i = 1; i <= N; ++i) {
    std::ostringstream line;
    line << "u" << i << "'_t = ";
    bool first = true;
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        term(line, first, T.at(j, k, i),
             "u" + std::to_string(j) + "_x * u" + std::to_string(k) + "'");
    if (first) line << "0";
    out << line.str() << "\n";
  }
  return out.str();
}

}  // namespace gva
