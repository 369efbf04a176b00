#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "gva/element.hpp"
#include "gva/expr.hpp"

namespace gva {

/// A graded algebra e_i * e_j = f(i,j) e_{i+j} + f_theta(i,j) theta, with the
/// bracket [A,B] = a A*B - b B*A. eps has already been substituted.
struct AlgebraSpec {
  ExprPtr f;
  ExprPtr f_theta;  // null when absent
  Rational a{1};
  Rational b{1};
  Scalar eps;
  ScalarMode scalar_mode{ScalarMode::rational};
};

/// A structure-function evaluation hit a zero divisor at the pair (i, j).
class PoleError : public std::runtime_error {
public:
  PoleError(Index i, Index j);
  Index i, j;
};

enum class StructPart { plain, theta };

/// Exact value of f(i,j) (or f_theta(i,j)); empty = undefined (pole).
/// An absent f_theta evaluates to zero.
std::optional<Scalar> eval_struct(const AlgebraSpec& spec, StructPart which, Index i, Index j);

/// Both parts at once; empty when either is undefined.
struct StructValue {
  Scalar plain;
  Scalar theta;
};
std::optional<StructValue> eval_struct_full(const AlgebraSpec& spec, Index i, Index j);

/// g(i,j) = a f(i,j) - b f(j,i), both parts.
std::optional<StructValue> g_from_f(const AlgebraSpec& spec, Index i, Index j);

/// Bilinear product; theta annihilates on both sides. Throws PoleError.
Element star(const AlgebraSpec& spec, const Element& A, const Element& B);

/// a (A*B) - b (B*A).
Element bracket(const AlgebraSpec& spec, const Element& A, const Element& B);

/// (A,B,C) = (A*B)*C - A*(B*C).
Element associator(const AlgebraSpec& spec, const Element& A, const Element& B, const Element& C);

/// (A,B,C) - (B,A,C); zero iff the product is left-symmetric on these arguments.
Element lsym_defect(const AlgebraSpec& spec, const Element& A, const Element& B, const Element& C);

/// A*[B,C] + B*[C,A] + C*[A,B].
Element ternary_bracket(const AlgebraSpec& spec, const Element& A, const Element& B,
                        const Element& C);

/// Endomorphism of the graded algebra: either a shift e_x -> e_{x+x0} or a
/// finite table e_i -> sum_k R[i][k] e_k. Acts as the identity on theta.
struct EndoSpec {
  enum class Kind { shift, table };
  Kind kind{Kind::shift};
  Index x0{0};
  std::map<Index, std::map<Index, Rational>> table;

  static EndoSpec shift(Index x0);
  static EndoSpec from_table(std::map<Index, std::map<Index, Rational>> t);

  Element apply(const Element& e) const;
};

}  // namespace gva
