#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gva/scalar.hpp"

namespace gva {

/// AST for the structure-function expression language.
///
/// Grammar (left-associative, standard precedence):
///   expr     := term   (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := '-'? atom ('^' nat)?
///   atom     := 'i' | 'j' | 'eps' | rational | '(' expr ')' | 'delta' '(' expr ')'
///   rational := int ('/' int)?        (fused only without whitespace)
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind {
    kConst,
    kVarI,
    kVarJ,
    kParamEps,
    kNeg,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kDelta,
  };

  Kind kind{};
  Rational value{};     // kConst
  unsigned exponent{};  // kPow
  ExprPtr a, b;         // children (a only for unary kinds)
};

ExprPtr make_const(Rational v);
ExprPtr make_var_i();
ExprPtr make_var_j();
ExprPtr make_eps();
ExprPtr make_neg(ExprPtr x);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr x, unsigned e);
ExprPtr make_delta(ExprPtr x);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, std::string found, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// Parses the expression language; throws ParseError with byte offset and
/// the expected-token set on malformed input.
ExprPtr parse_expr(std::string_view src);

/// Exact evaluation at integer (i, j) with the given eps. Division by a
/// non-invertible scalar yields std::nullopt (an undefined value, not an error).
/// delta(e) is 1 when e evaluates exactly to zero (both parts, for duals).
std::optional<Scalar> eval_ast(const ExprPtr& ast, std::int64_t i, std::int64_t j,
                               const Scalar& eps);

/// Fully parenthesized form; parse_expr(print_canonical(t)) is structurally
/// identical to t.
std::string print_canonical(const ExprPtr& ast);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace gva
