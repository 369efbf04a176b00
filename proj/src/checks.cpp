#include "gva/checks.hpp"

#include <array>

namespace gva {

namespace {

Scalar sc_int(const AlgebraSpec& spec, long long v) { return Scalar::from_int(v, spec.scalar_mode); }

Scalar sc_rat(const AlgebraSpec& spec, const Rational& v) {
  return Scalar::from_rational(v, spec.scalar_mode);
}

Element graded(Index x, const Scalar& plain, const Scalar& theta) {
  Element e;
  e.add_term(x, plain);
  e.add_theta(theta);
  return e;
}

// f(a,b) f(a+b,c): plain column and theta column (first factor plain only;
// the theta part of an inner product is annihilated by further products).
std::optional<StructValue> tensor_T(const AlgebraSpec& spec, Index a, Index b, Index c) {
  auto f1 = eval_struct_full(spec, a, b);
  if (!f1) return std::nullopt;
  auto f2 = eval_struct_full(spec, a + b, c);
  if (!f2) return std::nullopt;
  return StructValue{f1->plain * f2->plain, f1->plain * f2->theta};
}

// f(a,b) f(c, a+b).
std::optional<StructValue> tensor_G(const AlgebraSpec& spec, Index a, Index b, Index c) {
  auto f1 = eval_struct_full(spec, a, b);
  if (!f1) return std::nullopt;
  auto f2 = eval_struct_full(spec, c, a + b);
  if (!f2) return std::nullopt;
  return StructValue{f1->plain * f2->plain, f1->plain * f2->theta};
}

}  // namespace

CheckReport check_skew(const AlgebraSpec& spec, Window w, std::size_t cap) {
  CheckReport r = run_tuple_check(
      "skew", w, 2, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        auto gij = g_from_f(spec, t[0], t[1]);
        if (!gij) return std::nullopt;
        auto gji = g_from_f(spec, t[1], t[0]);
        if (!gji) return std::nullopt;
        return Residual(graded(t[0] + t[1], gij->plain + gji->plain, gij->theta + gji->theta));
      });
  if (spec.a == spec.b)
    r.notes.push_back("a = b: the bracket is antisymmetric by construction");
  return r;
}

std::optional<Element> jacobi_residual(const AlgebraSpec& spec, JacobiForm form, Index i, Index j,
                                       Index k) {
  {
    Scalar plain = sc_int(spec, 0), theta = sc_int(spec, 0);
    if (form == JacobiForm::J) {
          const std::array<std::array<Index, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
          for (const auto& [a, b, c] : cyc) {
            auto g1 = g_from_f(spec, a, b);
            if (!g1) return std::nullopt;
            auto g2 = g_from_f(spec, a + b, c);
            if (!g2) return std::nullopt;
            plain += g1->plain * g2->plain;
            theta += g1->plain * g2->theta;
          }
        } else {
          const Scalar a2 = sc_rat(spec, spec.a * spec.a);
          const Scalar b2 = sc_rat(spec, spec.b * spec.b);
          const Scalar ab = sc_rat(spec, spec.a * spec.b);
          auto add = [&](const Scalar& coef, std::optional<StructValue> v,
                         bool minus) -> bool {
            if (!v) return false;
            if (minus) {
              plain -= coef * v->plain;
              theta -= coef * v->theta;
            } else {
              plain += coef * v->plain;
              theta += coef * v->theta;
            }
            return true;
          };
          // a^2 (T_ij^k + T_jk^i + T_ki^j) + b^2 (G_ji^k + G_ik^j + G_kj^i)
          // - ab (G_ij^k + G_jk^i + G_ki^j + T_kj^i + T_ji^k + T_ik^j)
          if (!add(a2, tensor_T(spec, i, j, k), false)) return std::nullopt;
          if (!add(a2, tensor_T(spec, j, k, i), false)) return std::nullopt;
          if (!add(a2, tensor_T(spec, k, i, j), false)) return std::nullopt;
          if (!add(b2, tensor_G(spec, j, i, k), false)) return std::nullopt;
          if (!add(b2, tensor_G(spec, i, k, j), false)) return std::nullopt;
          if (!add(b2, tensor_G(spec, k, j, i), false)) return std::nullopt;
          if (!add(ab, tensor_G(spec, i, j, k), true)) return std::nullopt;
          if (!add(ab, tensor_G(spec, j, k, i), true)) return std::nullopt;
          if (!add(ab, tensor_G(spec, k, i, j), true)) return std::nullopt;
          if (!add(ab, tensor_T(spec, k, j, i), true)) return std::nullopt;
          if (!add(ab, tensor_T(spec, j, i, k), true)) return std::nullopt;
          if (!add(ab, tensor_T(spec, i, k, j), true)) return std::nullopt;
        }
        return graded(i + j + k, plain, theta);
  }
}

CheckReport check_jacobi(const AlgebraSpec& spec, Window w, JacobiForm form, std::size_t cap) {
  const std::string name = form == JacobiForm::J ? "jacobi-J" : "jacobi-TG";
  return run_tuple_check(
      name, w, 3, cap, [&, form](const std::vector<Index>& t) -> std::optional<Residual> {
        auto r = jacobi_residual(spec, form, t[0], t[1], t[2]);
        if (!r) return std::nullopt;
        return Residual(std::move(*r));
      });
}

CheckReport check_quasi_assoc(const AlgebraSpec& spec, Window w, ResidualMode mode,
                              std::size_t cap) {
  return run_tuple_check(
      "quasi-assoc", w, 3, cap, [&, mode](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        if (mode == ResidualMode::element)
          return Residual(lsym_defect(spec, Element::fat_basis(i, spec.scalar_mode),
                                      Element::fat_basis(j, spec.scalar_mode),
                                      Element::fat_basis(k, spec.scalar_mode)));
        auto fij = eval_struct_full(spec, i, j);
        auto fji = eval_struct_full(spec, j, i);
        auto fsk = eval_struct_full(spec, i + j, k);
        auto fjk = eval_struct_full(spec, j, k);
        auto fijk = eval_struct_full(spec, i, j + k);
        auto fik = eval_struct_full(spec, i, k);
        auto fjik = eval_struct_full(spec, j, i + k);
        if (!fij || !fji || !fsk || !fjk || !fijk || !fik || !fjik) return std::nullopt;
        const Scalar d = fij->plain - fji->plain;
        Scalar plain = d * fsk->plain - fjk->plain * fijk->plain + fik->plain * fjik->plain;
        Scalar theta = d * fsk->theta - fjk->plain * fijk->theta + fik->plain * fjik->theta;
        return Residual(graded(i + j + k, plain, theta));
      });
}

std::vector<CheckReport> check_alternative(const AlgebraSpec& spec, Window w, std::size_t cap) {
  auto lsym = run_tuple_check(
      "alternative-lsym", w, 2, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ei = Element::fat_basis(t[0], spec.scalar_mode);
        Element ek = Element::fat_basis(t[1], spec.scalar_mode);
        return Residual(lsym_defect(spec, ei, ei, ek));
      });
  auto strict = run_tuple_check(
      "alternative-strict", w, 2, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ei = Element::fat_basis(t[0], spec.scalar_mode);
        Element ek = Element::fat_basis(t[1], spec.scalar_mode);
        return Residual(associator(spec, ei, ei, ek));
      });
  return {std::move(lsym), std::move(strict)};
}

CheckReport check_derivation(const AlgebraSpec& spec, Window w, ResidualMode mode,
                             std::size_t cap) {
  return run_tuple_check(
      "derivation", w, 3, cap, [&, mode](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        if (mode == ResidualMode::element) {
          Element ei = Element::fat_basis(i, spec.scalar_mode);
          Element ej = Element::fat_basis(j, spec.scalar_mode);
          Element ek = Element::fat_basis(k, spec.scalar_mode);
          Element res = bracket(spec, ei, star(spec, ej, ek)) -
                        star(spec, ej, bracket(spec, ei, ek)) -
                        star(spec, bracket(spec, ei, ej), ek);
          return Residual(std::move(res));
        }
        // a (G_jk^i - G_ik^j - T_ij^k) + b (G_ki^j + T_ji^k - T_jk^i)
        auto gjki = tensor_G(spec, j, k, i);
        auto gikj = tensor_G(spec, i, k, j);
        auto tijk = tensor_T(spec, i, j, k);
        auto gkij = tensor_G(spec, k, i, j);
        auto tjik = tensor_T(spec, j, i, k);
        auto tjki = tensor_T(spec, j, k, i);
        if (!gjki || !gikj || !tijk || !gkij || !tjik || !tjki) return std::nullopt;
        const Scalar a = sc_rat(spec, spec.a), b = sc_rat(spec, spec.b);
        Scalar plain = a * (gjki->plain - gikj->plain - tijk->plain) +
                       b * (gkij->plain + tjik->plain - tjki->plain);
        Scalar theta = a * (gjki->theta - gikj->theta - tijk->theta) +
                       b * (gkij->theta + tjik->theta - tjki->theta);
        return Residual(graded(i + j + k, plain, theta));
      });
}

CheckReport check_cocycle(const AlgebraSpec& spec, Window w, const PsiFn& psi, std::size_t cap) {
  return run_tuple_check(
      "cocycle", w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        auto gp = [&](Index a, Index b) -> std::optional<Scalar> {
          auto g = g_from_f(spec, a, b);
          if (!g) return std::nullopt;
          return g->plain;
        };
        auto g1 = gp(i, j), g2 = gp(j, k), g3 = gp(k, i);
        auto g4 = gp(i, j + k), g5 = gp(j, i + k), g6 = gp(k, i + j);
        if (!g1 || !g2 || !g3 || !g4 || !g5 || !g6) return std::nullopt;
        auto p = [&](Index a, Index b) { return sc_rat(spec, psi(a, b)); };
        Scalar plain = *g1 * p(i + j, k) + *g2 * p(j + k, i) + *g3 * p(i + k, j) -
                       *g4 * p(j, k) + *g5 * p(i, k) - *g6 * p(i, j);
        return Residual(graded(i + j + k, plain, sc_int(spec, 0)));
      });
}

namespace {

std::optional<StructValue> hereditary_shift_residual(const AlgebraSpec& spec, Index i, Index j,
                                                     Index x0) {
  auto g1 = g_from_f(spec, i + x0, j);
  auto g2 = g_from_f(spec, i, j + x0);
  auto g3 = g_from_f(spec, i, j);
  auto g4 = g_from_f(spec, i + x0, j + x0);
  if (!g1 || !g2 || !g3 || !g4) return std::nullopt;
  return StructValue{g1->plain + g2->plain - g3->plain - g4->plain,
                     g1->theta + g2->theta - g3->theta - g4->theta};
}

}  // namespace

CheckReport check_hereditary(const AlgebraSpec& spec, Window w, const EndoSpec& phi,
                             HereditaryVariant variant, std::size_t cap) {
  switch (variant) {
    case HereditaryVariant::scalar_shift: {
      if (phi.kind != EndoSpec::Kind::shift)
        throw std::invalid_argument("hereditary scalar_shift variant requires a shift map");
      const Index x0 = phi.x0;
      return run_tuple_check(
          "hereditary-shift", w, 2, cap,
          [&, x0](const std::vector<Index>& t) -> std::optional<Residual> {
            auto hc = hereditary_shift_residual(spec, t[0], t[1], x0);
            if (!hc) return std::nullopt;
            return Residual(graded(t[0] + t[1] + x0, hc->plain, hc->theta));
          });
    }
    case HereditaryVariant::general_table: {
      if (phi.kind != EndoSpec::Kind::table)
        throw std::invalid_argument("hereditary general_table variant requires a table map");
      return run_tuple_check(
          "hereditary-table", w, 2, cap,
          [&](const std::vector<Index>& t) -> std::optional<Residual> {
            const Index i = t[0], j = t[1];
            Element res;
            auto row = [&](Index x) -> const std::map<Index, Rational>* {
              auto it = phi.table.find(x);
              return it == phi.table.end() ? nullptr : &it->second;
            };
            // Phi((Phi e_i) o e_j) with o the bracket
            if (const auto* ri = row(i)) {
              for (const auto& [m, Rim] : *ri) {
                auto g = g_from_f(spec, m, j);
                if (!g) return std::nullopt;
                const Scalar c = sc_rat(spec, Rim);
                res.add_theta(c * g->theta);
                if (const auto* rm = row(m + j))
                  for (const auto& [s, Rms] : *rm)
                    res.add_term(s, c * g->plain * sc_rat(spec, Rms));
              }
            }
            // Phi(e_i o (Phi e_j))
            if (const auto* rj = row(j)) {
              for (const auto& [n, Rjn] : *rj) {
                auto g = g_from_f(spec, i, n);
                if (!g) return std::nullopt;
                const Scalar c = sc_rat(spec, Rjn);
                res.add_theta(c * g->theta);
                if (const auto* rn = row(n + i))
                  for (const auto& [s, Rns] : *rn)
                    res.add_term(s, c * g->plain * sc_rat(spec, Rns));
              }
            }
            // - Phi^2(e_i o e_j)
            {
              auto g = g_from_f(spec, i, j);
              if (!g) return std::nullopt;
              res.add_theta(-g->theta);
              if (const auto* rij = row(i + j))
                for (const auto& [tt, Rijt] : *rij)
                  if (const auto* rt = row(tt))
                    for (const auto& [s, Rts] : *rt)
                      res.add_term(s, -(g->plain * sc_rat(spec, Rijt) * sc_rat(spec, Rts)));
            }
            // - (Phi e_i) o (Phi e_j)
            if (const auto* ri = row(i)) {
              if (const auto* rj = row(j)) {
                for (const auto& [m, Rim] : *ri) {
                  for (const auto& [n, Rjn] : *rj) {
                    auto g = g_from_f(spec, m, n);
                    if (!g) return std::nullopt;
                    const Scalar c = sc_rat(spec, Rim) * sc_rat(spec, Rjn);
                    res.add_term(m + n, -(c * g->plain));
                    res.add_theta(-(c * g->theta));
                  }
                }
              }
            }
            return Residual(std::move(res));
          });
    }
    case HereditaryVariant::shift1_table:
      // Index-shifted relation R_{(i+1)j} + R_{(j+1)i} - R_{ij} - R_{(i+1)(j+1)} on
      // the bracket structure constants; its terms sit at three different grades.
      return run_tuple_check(
          "hereditary-shift1", w, 2, cap,
          [&](const std::vector<Index>& t) -> std::optional<Residual> {
            const Index i = t[0], j = t[1];
            auto B = [&](Index p, Index q) -> std::optional<Element> {
              auto g = g_from_f(spec, p, q);
              if (!g) return std::nullopt;
              return graded(p + q, g->plain, g->theta);
            };
            auto b1 = B(i + 1, j), b2 = B(j + 1, i), b3 = B(i, j), b4 = B(i + 1, j + 1);
            if (!b1 || !b2 || !b3 || !b4) return std::nullopt;
            return Residual(*b1 + *b2 - *b3 - *b4);
          });
    case HereditaryVariant::element_def:
      // Phi^2(a*b) + (Phi a)*(Phi b) - Phi[(Phi a)*b + a*(Phi b)], * the product.
      return run_tuple_check(
          "hereditary-element", w, 2, cap,
          [&](const std::vector<Index>& t) -> std::optional<Residual> {
            Element ei = Element::fat_basis(t[0], spec.scalar_mode);
            Element ej = Element::fat_basis(t[1], spec.scalar_mode);
            Element res = phi.apply(phi.apply(star(spec, ei, ej))) +
                          star(spec, phi.apply(ei), phi.apply(ej)) -
                          phi.apply(star(spec, phi.apply(ei), ej) + star(spec, ei, phi.apply(ej)));
            return Residual(std::move(res));
          });
  }
  throw std::logic_error("unknown hereditary variant");
}

CheckReport check_bianchi_p(const AlgebraSpec& spec, Window w, Index x0, std::size_t cap) {
  return run_tuple_check(
      "bianchi-p", w, 3, cap, [&, x0](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        Scalar plain = sc_int(spec, 0), theta = sc_int(spec, 0);
        const std::array<std::array<Index, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
        for (const auto& [a, b, c] : cyc) {
          auto hc = hereditary_shift_residual(spec, a, b, x0);
          if (!hc) return std::nullopt;
          auto f = eval_struct_full(spec, c + x0, a + b + 2 * x0);
          if (!f) return std::nullopt;
          plain += hc->plain * f->plain;
          theta += hc->plain * f->theta + hc->theta * f->plain;
        }
        return Residual(graded(i + j + k + 3 * x0, plain, theta));
      });
}

CheckReport check_rho_compat(const AlgebraSpec& spec, Window w, const EndoSpec& rho,
                             ResidualMode mode, std::size_t cap) {
  if (mode == ResidualMode::scalar && rho.kind != EndoSpec::Kind::shift)
    throw std::invalid_argument("rho-compat difference mode requires a shift map");
  return run_tuple_check(
      "rho-compat", w, 2, cap, [&, mode](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1];
        if (mode == ResidualMode::scalar) {
          const Index x0 = rho.x0;
          auto f1 = eval_struct_full(spec, i, j + x0);
          auto f2 = eval_struct_full(spec, i, j);
          auto f3 = eval_struct_full(spec, j, i + x0);
          auto f4 = eval_struct_full(spec, j, i);
          if (!f1 || !f2 || !f3 || !f4) return std::nullopt;
          return Residual(graded(i + j + x0, (f1->plain - f2->plain) - (f3->plain - f4->plain),
                                 (f1->theta - f2->theta) - (f3->theta - f4->theta)));
        }
        Element ei = Element::fat_basis(i, spec.scalar_mode);
        Element ej = Element::fat_basis(j, spec.scalar_mode);
        Element res = star(spec, ei, rho.apply(ej)) - star(spec, ej, rho.apply(ei)) -
                      rho.apply(star(spec, ei, ej) - star(spec, ej, ei));
        return Residual(std::move(res));
      });
}

CheckReport check_universal(const AlgebraSpec& spec, Window w, std::size_t cap) {
  return run_tuple_check(
      "universal", w, 4, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ei = Element::fat_basis(t[0], spec.scalar_mode);
        Element ej = Element::fat_basis(t[1], spec.scalar_mode);
        Element ek = Element::fat_basis(t[2], spec.scalar_mode);
        Element es = Element::fat_basis(t[3], spec.scalar_mode);
        Element res = lsym_defect(spec, ei, ej, star(spec, ek, es)) -
                      star(spec, lsym_defect(spec, ei, ej, ek), es) -
                      star(spec, ek, lsym_defect(spec, ei, ej, es));
        return Residual(std::move(res));
      });
}

CheckReport check_filippov(const AlgebraSpec& spec, Window w, std::size_t cap) {
  return run_tuple_check(
      "filippov", w, 5, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const ScalarMode m = spec.scalar_mode;
        Element A = Element::fat_basis(t[0], m), B = Element::fat_basis(t[1], m),
                C = Element::fat_basis(t[2], m), D = Element::fat_basis(t[3], m),
                E = Element::fat_basis(t[4], m);
        auto T3 = [&](const Element& x, const Element& y, const Element& z) {
          return ternary_bracket(spec, x, y, z);
        };
        Element res = T3(A, B, T3(C, D, E)) - T3(T3(A, B, C), D, E) - T3(C, T3(A, B, D), E) -
                      T3(C, D, T3(A, B, E));
        return Residual(std::move(res));
      });
}

CheckReport check_bremner(const AlgebraSpec& spec, Window w, std::size_t cap) {
  return run_tuple_check(
      "bremner", w, 7, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const ScalarMode m = spec.scalar_mode;
        Element A = Element::fat_basis(t[0], m), B = Element::fat_basis(t[1], m),
                C = Element::fat_basis(t[2], m), D = Element::fat_basis(t[3], m),
                E = Element::fat_basis(t[4], m), F = Element::fat_basis(t[5], m),
                G = Element::fat_basis(t[6], m);
        auto T3 = [&](const Element& x, const Element& y, const Element& z) {
          return ternary_bracket(spec, x, y, z);
        };
        Element res = T3(T3(A, T3(B, C, D), E), F, G) - T3(T3(A, B, C), T3(D, E, F), G);
        return Residual(std::move(res));
      });
}

namespace {

struct BPair {
  Element first, second;
};

BPair bmod_bracket(const AlgebraSpec& spec, const BPair& X, const BPair& Y) {
  return BPair{bracket(spec, X.first, Y.first),
               star(spec, X.first, Y.second) - star(spec, Y.first, X.second)};
}

}  // namespace

std::vector<CheckReport> check_bmod(const AlgebraSpec& spec, Window w, std::size_t cap) {
  const ScalarMode m = spec.scalar_mode;
  auto skew = run_tuple_check(
      "bmod-skew", w, 4, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        BPair X{Element::fat_basis(t[0], m), Element::fat_basis(t[1], m)};
        BPair Y{Element::fat_basis(t[2], m), Element::fat_basis(t[3], m)};
        BPair xy = bmod_bracket(spec, X, Y);
        BPair yx = bmod_bracket(spec, Y, X);
        return Residual(xy.first + yx.first, xy.second + yx.second);
      });
  auto factored = run_tuple_check(
      "bmod-skew-factored", w, 4, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index p = t[0], r = t[1], q = t[2], s = t[3];
        auto gpq = g_from_f(spec, p, q);
        auto gqp = g_from_f(spec, q, p);
        auto fps = eval_struct_full(spec, p, s);
        auto fqr = eval_struct_full(spec, q, r);
        if (!gpq || !gqp || !fps || !fqr) return std::nullopt;
        const Scalar factor = gpq->plain - gqp->plain;
        Element res;
        res.add_term(p + s, factor * fps->plain);
        res.add_term(q + r, -(factor * fqr->plain));
        return Residual(std::move(res));
      });
  factored.notes.push_back(
      "residual coefficients are keyed by the second tensor slot; the first slot is e_{p+q}");
  auto jac = run_tuple_check(
      "bmod-jacobi", w, 6, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        BPair X{Element::fat_basis(t[0], m), Element::fat_basis(t[1], m)};
        BPair Y{Element::fat_basis(t[2], m), Element::fat_basis(t[3], m)};
        BPair Z{Element::fat_basis(t[4], m), Element::fat_basis(t[5], m)};
        BPair j1 = bmod_bracket(spec, bmod_bracket(spec, X, Y), Z);
        BPair j2 = bmod_bracket(spec, bmod_bracket(spec, Y, Z), X);
        BPair j3 = bmod_bracket(spec, bmod_bracket(spec, Z, X), Y);
        return Residual(j1.first + j2.first + j3.first, j1.second + j2.second + j3.second);
      });
  return {std::move(skew), std::move(factored), std::move(jac)};
}

std::vector<CheckReport> crosscheck_virasoro_closed_forms(const AlgebraSpec& spec, Window w,
                                                          std::size_t cap) {
  const Scalar one = sc_int(spec, 1);
  const Scalar half = sc_rat(spec, Rational(1, 2));
  auto si = [&](Index v) { return sc_int(spec, v); };

  auto ternary = run_tuple_check(
      "crosscheck-ternary", w, 3, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        const ScalarMode m = spec.scalar_mode;
        Element generic = ternary_bracket(spec, Element::fat_basis(i, m), Element::fat_basis(j, m),
                                          Element::fat_basis(k, m));
        // closed form: -eps [ (j^2-i^2)k + (i^2-k^2)j + (k^2-j^2)i ] / (1+eps(i+j+k))
        Rational poly = Rational(j) * j * k - Rational(i) * i * k + Rational(i) * i * j -
                        Rational(k) * k * j + Rational(k) * k * i - Rational(j) * j * i;
        Scalar denom = one + spec.eps * si(i + j + k);
        auto plain = (-(spec.eps * sc_rat(spec, poly))).divided_by(denom);
        if (!plain) return std::nullopt;
        Element closed;
        closed.add_term(i + j + k, *plain);
        if (i + j + k == 0) {
          auto inv = one.divided_by(spec.eps);
          if (!inv) return std::nullopt;
          Rational cubes = Rational(i) * i * i + Rational(j) * j * j + Rational(k) * k * k;
          closed.add_theta(half *
                           (sc_rat(spec, cubes) * (one + spec.eps - *inv) - si(i + j + k)));
        }
        return Residual(generic - closed);
      });
  ternary.notes.push_back("residual = generic ternary bracket minus the closed form");

  auto der_lhs = run_tuple_check(
      "crosscheck-derivation-lhs", w, 3, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        const ScalarMode m = spec.scalar_mode;
        Element generic = bracket(spec, Element::fat_basis(i, m),
                                  star(spec, Element::fat_basis(j, m), Element::fat_basis(k, m)));
        // closed form: -k(1+eps k)/(1+eps(j+k)) (i-(j+k)) e + theta (i^3-i) delta
        Scalar denom = one + spec.eps * si(j + k);
        auto coef = (-(si(k) * (one + spec.eps * si(k)))).divided_by(denom);
        if (!coef) return std::nullopt;
        Element closed_form;
        closed_form.add_term(i + j + k, *coef * si(i - j - k));
        if (i + j + k == 0) closed_form.add_theta(sc_rat(spec, Rational(i) * i * i - i));
        return Residual(generic - closed_form);
      });
  der_lhs.notes.push_back("residual = generic [e_i, e_j*e_k] minus the closed-form expansion");

  auto der_rhs = run_tuple_check(
      "crosscheck-derivation-rhs", w, 3, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1], k = t[2];
        const ScalarMode m = spec.scalar_mode;
        Element ei = Element::fat_basis(i, m), ej = Element::fat_basis(j, m), ek = Element::fat_basis(k, m);
        Element generic =
            star(spec, ej, bracket(spec, ei, ek)) + star(spec, bracket(spec, ei, ej), ek);
        // closed-form plain column: [-(i^2-k^2) - k(i-j) - eps((i^2-k^2)(i+k) + k^2(i-j))]/(1+eps S)
        Rational ii_kk = Rational(i) * i - Rational(k) * k;
        Rational num_r = -ii_kk - Rational(k) * (i - j);
        Rational eps_r = ii_kk * (Rational(i) + k) + Rational(k) * k * (i - j);
        Scalar denom = one + spec.eps * si(i + j + k);
        auto coef = (sc_rat(spec, num_r) - spec.eps * sc_rat(spec, eps_r)).divided_by(denom);
        if (!coef) return std::nullopt;
        Element closed_form;
        closed_form.add_term(i + j + k, *coef);
        if (i + j + k == 0) {
          auto inv = one.divided_by(spec.eps);
          if (!inv) return std::nullopt;
          Rational jj = Rational(j) * j * j - j;
          Rational ss = Rational(i + j) * (i + j) * (i + j) - (i + j);
          Rational t1 = jj * (i - k) + Rational(i - j) * ss;
          Rational t2 = Rational(j) * j * (i - k) + Rational(i - j) * (i + j) * (i + j);
          closed_form.add_theta(half * (sc_rat(spec, t1) + (spec.eps - *inv) * sc_rat(spec, t2)));
        }
        return Residual(generic - closed_form);
      });
  der_rhs.notes.push_back(
      "residual = generic e_j*[e_i,e_k] + [e_i,e_j]*e_k minus the closed-form expansion");

  auto skew_system = run_tuple_check(
      "virasoro-skew-system", w, 2, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const Index i = t[0], j = t[1];
        auto inv = one.divided_by(spec.eps);
        if (!inv) return std::nullopt;
        Rational sq = Rational(i) * i + Rational(j) * j;
        Scalar eq1 = si(i + j) + spec.eps * sc_rat(spec, sq);
        Scalar eq2 = sc_rat(spec, Rational(i) * i * i + Rational(j) * j * j - (i + j)) +
                     (spec.eps - *inv) * sc_rat(spec, sq);
        return Residual(graded(i + j, eq1, eq2));
      });
  skew_system.notes.push_back(
      "evaluates the two-equation skew system per (i,j); eq1 on e_{i+j}, eq2 on theta");

  return {std::move(ternary), std::move(der_lhs), std::move(der_rhs), std::move(skew_system)};
}

CheckReport check_lsym_product(std::string name, const ProductFn& prod, Window w,
                               std::size_t cap) {
  return run_tuple_check(
      std::move(name), w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ei = Element::fat_basis(t[0]), ej = Element::fat_basis(t[1]), ek = Element::fat_basis(t[2]);
        auto assoc = [&](const Element& x, const Element& y, const Element& z) {
          return prod(prod(x, y), z) - prod(x, prod(y, z));
        };
        return Residual(assoc(ei, ej, ek) - assoc(ej, ei, ek));
      });
}

CheckReport check_derivation_product(std::string name, const ProductFn& prod, Window w,
                                     std::size_t cap) {
  return run_tuple_check(
      std::move(name), w, 3, cap, [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ei = Element::fat_basis(t[0]), ej = Element::fat_basis(t[1]), ek = Element::fat_basis(t[2]);
        auto comm = [&](const Element& x, const Element& y) { return prod(x, y) - prod(y, x); };
        Element res =
            comm(ei, prod(ej, ek)) - prod(ej, comm(ei, ek)) - prod(comm(ei, ej), ek);
        return Residual(std::move(res));
      });
}

}  // namespace gva
