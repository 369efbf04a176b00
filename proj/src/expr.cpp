#include "gva/expr.hpp"

#include <cctype>
#include <sstream>

namespace gva {

ExprPtr make_const(Rational v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::kConst;
  n->value = std::move(v);
  return n;
}

static ExprPtr leaf(ExprNode::Kind k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  return n;
}

ExprPtr make_var_i() { return leaf(ExprNode::Kind::kVarI); }
ExprPtr make_var_j() { return leaf(ExprNode::Kind::kVarJ); }
ExprPtr make_eps() { return leaf(ExprNode::Kind::kParamEps); }

static ExprPtr unary(ExprNode::Kind k, ExprPtr x) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(x);
  return n;
}

static ExprPtr binary(ExprNode::Kind k, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

ExprPtr make_neg(ExprPtr x) { return unary(ExprNode::Kind::kNeg, std::move(x)); }
ExprPtr make_add(ExprPtr a, ExprPtr b) { return binary(ExprNode::Kind::kAdd, std::move(a), std::move(b)); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return binary(ExprNode::Kind::kSub, std::move(a), std::move(b)); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return binary(ExprNode::Kind::kMul, std::move(a), std::move(b)); }
ExprPtr make_div(ExprPtr a, ExprPtr b) { return binary(ExprNode::Kind::kDiv, std::move(a), std::move(b)); }

ExprPtr make_pow(ExprPtr x, unsigned e) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::kPow;
  n->a = std::move(x);
  n->exponent = e;
  return n;
}

ExprPtr make_delta(ExprPtr x) { return unary(ExprNode::Kind::kDelta, std::move(x)); }

static std::string format_parse_error(std::size_t offset, const std::string& found,
                                      const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": found " << found << ", expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k) os << (k + 1 == expected.size() ? " or " : ", ");
    os << expected[k];
  }
  return os.str();
}

ParseError::ParseError(std::size_t offset, std::string found, std::vector<std::string> expected)
    : std::runtime_error(format_parse_error(offset, found, expected)),
      offset_(offset),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum class Kind { kEnd, kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen };
  Kind kind{};
  std::size_t offset{};
  Rational number{};      // kNumber
  bool is_fraction{};     // kNumber: literal contained '/'
  std::string text;       // kIdent and error reporting
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::kEnd;
      tok_.text = "end of input";
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        digits += src_[pos_++];
      // "p/q" is one literal only when '/' is immediately followed by a digit.
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        ++pos_;
        std::string den;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          den += src_[pos_++];
        tok_.kind = Token::Kind::kNumber;
        tok_.is_fraction = true;
        tok_.text = digits + "/" + den;
        auto value = rational_from_string(tok_.text);
        if (!value)
          throw ParseError(tok_.offset, "'" + tok_.text + "'", {"nonzero denominator"});
        tok_.number = *value;
        return;
      }
      tok_.kind = Token::Kind::kNumber;
      tok_.text = digits;
      tok_.number = *rational_from_string(digits);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
        ident += src_[pos_++];
      tok_.kind = Token::Kind::kIdent;
      tok_.text = ident;
      return;
    }
    ++pos_;
    tok_.text = std::string("'") + c + "'";
    switch (c) {
      case '+': tok_.kind = Token::Kind::kPlus; return;
      case '-': tok_.kind = Token::Kind::kMinus; return;
      case '*': tok_.kind = Token::Kind::kStar; return;
      case '/': tok_.kind = Token::Kind::kSlash; return;
      case '^': tok_.kind = Token::Kind::kCaret; return;
      case '(': tok_.kind = Token::Kind::kLParen; return;
      case ')': tok_.kind = Token::Kind::kRParen; return;
      default:
        throw ParseError(tok_.offset, tok_.text,
                         {"'i'", "'j'", "'eps'", "'delta'", "number", "'('", "operator"});
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().kind != Token::Kind::kEnd)
      throw ParseError(lex_.peek().offset, describe(lex_.peek()),
                       {"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

private:
  // bounds the recursion so pathologically nested input cannot exhaust the
  // stack
  static constexpr int kMaxDepth = 4096;

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw ParseError(parser.lex_.peek().offset, "expression nested deeper than 4096 levels",
                         {"a shallower expression"});
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::kEnd) return "end of input";
    if (t.kind == Token::Kind::kNumber) return "number '" + t.text + "'";
    if (t.kind == Token::Kind::kIdent) return "identifier '" + t.text + "'";
    return t.text;
  }

  ExprPtr expr() {
    DepthGuard guard(*this);
    ExprPtr e = term();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Kind::kPlus) {
        lex_.take();
        e = make_add(e, term());
      } else if (k == Token::Kind::kMinus) {
        lex_.take();
        e = make_sub(e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Kind::kStar) {
        lex_.take();
        e = make_mul(e, factor());
      } else if (k == Token::Kind::kSlash) {
        lex_.take();
        e = make_div(e, factor());
      } else {
        return e;
      }
    }
  }

  unsigned pow_exponent() {
    lex_.take();  // '^'
    Token t = lex_.peek();
    if (t.kind != Token::Kind::kNumber || t.is_fraction || denominator(t.number) != 1 ||
        t.number < 0 || t.number > 65535)
      throw ParseError(t.offset, describe(t), {"integer exponent in [0, 65535]"});
    lex_.take();
    return static_cast<unsigned>(numerator(t.number).convert_to<unsigned long long>());
  }

  ExprPtr factor() {
    if (lex_.peek().kind == Token::Kind::kMinus) {
      lex_.take();
      // '-' directly in front of a numeric literal folds into the constant, so
      // negative constants round-trip without introducing a Neg node. '-2^2'
      // still reads as -(2^2).
      if (lex_.peek().kind == Token::Kind::kNumber) {
        Token t = lex_.take();
        if (lex_.peek().kind == Token::Kind::kCaret)
          return make_neg(make_pow(make_const(t.number), pow_exponent()));
        return make_const(-t.number);
      }
      ExprPtr e = atom();
      if (lex_.peek().kind == Token::Kind::kCaret) e = make_pow(e, pow_exponent());
      return make_neg(e);
    }
    ExprPtr e = atom();
    if (lex_.peek().kind == Token::Kind::kCaret) e = make_pow(e, pow_exponent());
    return e;
  }

  ExprPtr atom() {
    DepthGuard guard(*this);
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::kNumber:
        lex_.take();
        return make_const(t.number);
      case Token::Kind::kIdent:
        lex_.take();
        if (t.text == "i") return make_var_i();
        if (t.text == "j") return make_var_j();
        if (t.text == "eps") return make_eps();
        if (t.text == "delta") {
          expect(Token::Kind::kLParen, "'('");
          ExprPtr inner = expr();
          expect(Token::Kind::kRParen, "')'");
          return make_delta(inner);
        }
        throw ParseError(t.offset, "identifier '" + t.text + "'",
                         {"'i'", "'j'", "'eps'", "'delta'"});
      case Token::Kind::kLParen: {
        lex_.take();
        ExprPtr inner = expr();
        expect(Token::Kind::kRParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.offset, describe(t),
                         {"number", "'i'", "'j'", "'eps'", "'delta'", "'('", "'-'"});
    }
  }

  void expect(Token::Kind k, const std::string& what) {
    if (lex_.peek().kind != k) throw ParseError(lex_.peek().offset, describe(lex_.peek()), {what});
    lex_.take();
  }

  Lexer lex_;
  int depth_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::optional<Scalar> eval_ast(const ExprPtr& ast, std::int64_t i, std::int64_t j,
                               const Scalar& eps) {
  const ScalarMode mode = eps.mode();
  switch (ast->kind) {
    case ExprNode::Kind::kConst:
      return Scalar::from_rational(ast->value, mode);
    case ExprNode::Kind::kVarI:
      return Scalar::from_rational(Rational(i), mode);
    case ExprNode::Kind::kVarJ:
      return Scalar::from_rational(Rational(j), mode);
    case ExprNode::Kind::kParamEps:
      return eps;
    case ExprNode::Kind::kNeg: {
      auto v = eval_ast(ast->a, i, j, eps);
      if (!v) return std::nullopt;
      return -*v;
    }
    case ExprNode::Kind::kAdd: {
      auto l = eval_ast(ast->a, i, j, eps);
      auto r = eval_ast(ast->b, i, j, eps);
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case ExprNode::Kind::kSub: {
      auto l = eval_ast(ast->a, i, j, eps);
      auto r = eval_ast(ast->b, i, j, eps);
      if (!l || !r) return std::nullopt;
      return *l - *r;
    }
    case ExprNode::Kind::kMul: {
      auto l = eval_ast(ast->a, i, j, eps);
      auto r = eval_ast(ast->b, i, j, eps);
      if (!l || !r) return std::nullopt;
      return *l * *r;
    }
    case ExprNode::Kind::kDiv: {
      auto l = eval_ast(ast->a, i, j, eps);
      auto r = eval_ast(ast->b, i, j, eps);
      if (!l || !r) return std::nullopt;
      return l->divided_by(*r);
    }
    case ExprNode::Kind::kPow: {
      auto v = eval_ast(ast->a, i, j, eps);
      if (!v) return std::nullopt;
      return v->pow(ast->exponent);
    }
    case ExprNode::Kind::kDelta: {
      auto v = eval_ast(ast->a, i, j, eps);
      if (!v) return std::nullopt;
      return Scalar::from_int(v->is_zero() ? 1 : 0, mode);
    }
  }
  return std::nullopt;  // unreachable
}

std::string print_canonical(const ExprPtr& ast) {
  switch (ast->kind) {
    case ExprNode::Kind::kConst: {
      const Rational& v = ast->value;
      if (denominator(v) == 1 && v >= 0) return numerator(v).str();
      return "(" + rational_to_string(v) + ")";
    }
    case ExprNode::Kind::kVarI: return "i";
    case ExprNode::Kind::kVarJ: return "j";
    case ExprNode::Kind::kParamEps: return "eps";
    case ExprNode::Kind::kNeg: return "(-(" + print_canonical(ast->a) + "))";
    case ExprNode::Kind::kAdd:
      return "(" + print_canonical(ast->a) + " + " + print_canonical(ast->b) + ")";
    case ExprNode::Kind::kSub:
      return "(" + print_canonical(ast->a) + " - " + print_canonical(ast->b) + ")";
    case ExprNode::Kind::kMul:
      return "(" + print_canonical(ast->a) + "*" + print_canonical(ast->b) + ")";
    case ExprNode::Kind::kDiv:
      return "(" + print_canonical(ast->a) + " / " + print_canonical(ast->b) + ")";
    case ExprNode::Kind::kPow:
      return "(" + print_canonical(ast->a) + "^" + std::to_string(ast->exponent) + ")";
    case ExprNode::Kind::kDelta: return "delta(" + print_canonical(ast->a) + ")";
  }
  return {};
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::kConst: return a->value == b->value;
    case ExprNode::Kind::kVarI:
    case ExprNode::Kind::kVarJ:
    case ExprNode::Kind::kParamEps: return true;
    case ExprNode::Kind::kPow:
      return a->exponent == b->exponent && structurally_equal(a->a, b->a);
    case ExprNode::Kind::kNeg:
    case ExprNode::Kind::kDelta: return structurally_equal(a->a, b->a);
    default:
      return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
  }
}

}  // namespace gva
