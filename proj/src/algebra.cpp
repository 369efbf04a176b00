#include "gva/algebra.hpp"

namespace gva {

PoleError::PoleError(Index i_, Index j_)
    : std::runtime_error("undefined structure value at (" + std::to_string(i_) + ", " +
                         std::to_string(j_) + ")"),
      i(i_),
      j(j_) {}

std::optional<Scalar> eval_struct(const AlgebraSpec& spec, StructPart which, Index i, Index j) {
  if (which == StructPart::theta && !spec.f_theta)
    return Scalar::from_rational(0, spec.scalar_mode);
  const ExprPtr& ast = which == StructPart::plain ? spec.f : spec.f_theta;
  return eval_ast(ast, i, j, spec.eps);
}

std::optional<StructValue> eval_struct_full(const AlgebraSpec& spec, Index i, Index j) {
  auto p = eval_struct(spec, StructPart::plain, i, j);
  if (!p) return std::nullopt;
  auto t = eval_struct(spec, StructPart::theta, i, j);
  if (!t) return std::nullopt;
  return StructValue{*p, *t};
}

std::optional<StructValue> g_from_f(const AlgebraSpec& spec, Index i, Index j) {
  auto fij = eval_struct_full(spec, i, j);
  if (!fij) return std::nullopt;
  auto fji = eval_struct_full(spec, j, i);
  if (!fji) return std::nullopt;
  const Scalar a = Scalar::from_rational(spec.a, spec.scalar_mode);
  const Scalar b = Scalar::from_rational(spec.b, spec.scalar_mode);
  return StructValue{a * fij->plain - b * fji->plain, a * fij->theta - b * fji->theta};
}

Element star(const AlgebraSpec& spec, const Element& A, const Element& B) {
  Element r = Element::zero(A.keeps_zeros() || B.keeps_zeros());
  for (const auto& [x, cx] : A.terms()) {
    for (const auto& [y, cy] : B.terms()) {
      auto v = eval_struct_full(spec, x, y);
      if (!v) throw PoleError(x, y);
      const Scalar c = cx * cy;
      r.add_term(x + y, c * v->plain);
      r.add_theta(c * v->theta);
    }
  }
  // theta * anything = anything * theta = 0
  return r;
}

Element bracket(const AlgebraSpec& spec, const Element& A, const Element& B) {
  const Scalar a = Scalar::from_rational(spec.a, spec.scalar_mode);
  const Scalar b = Scalar::from_rational(spec.b, spec.scalar_mode);
  return a * star(spec, A, B) - b * star(spec, B, A);
}

Element associator(const AlgebraSpec& spec, const Element& A, const Element& B, const Element& C) {
  return star(spec, star(spec, A, B), C) - star(spec, A, star(spec, B, C));
}

Element lsym_defect(const AlgebraSpec& spec, const Element& A, const Element& B,
                    const Element& C) {
  return associator(spec, A, B, C) - associator(spec, B, A, C);
}

Element ternary_bracket(const AlgebraSpec& spec, const Element& A, const Element& B,
                        const Element& C) {
  return star(spec, A, bracket(spec, B, C)) + star(spec, B, bracket(spec, C, A)) +
         star(spec, C, bracket(spec, A, B));
}

EndoSpec EndoSpec::shift(Index x0) {
  EndoSpec e;
  e.kind = Kind::shift;
  e.x0 = x0;
  return e;
}

EndoSpec EndoSpec::from_table(std::map<Index, std::map<Index, Rational>> t) {
  EndoSpec e;
  e.kind = Kind::table;
  e.table = std::move(t);
  return e;
}

Element EndoSpec::apply(const Element& e) const {
  Element r = Element::zero(e.keeps_zeros());
  if (kind == Kind::shift) {
    for (const auto& [x, c] : e.terms()) r.add_term(x + x0, c);
  } else {
    for (const auto& [x, c] : e.terms()) {
      auto row = table.find(x);
      if (row == table.end()) continue;
      for (const auto& [k, v] : row->second)
        r.add_term(k, c * Scalar::from_rational(v, c.mode()));
    }
  }
  r.add_theta(e.theta());
  return r;
}

}  // namespace gva
