#include "gva/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace gva {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// strips leading zeros so the big-integer constructor cannot read "08" as a
// (malformed) octal literal
std::string normalize_digits(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  return std::string(digits.substr(first));
}

std::optional<Rational> rational_from_string(std::string_view s) {
  std::size_t pos = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
    return pos > start;
  };
  std::string num, den;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
  if (!digits(num)) return std::nullopt;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    if (!digits(den)) return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  BigInt n(normalize_digits(num));
  if (negative) n = -n;
  if (den.empty()) return Rational(n);
  BigInt d(normalize_digits(den));
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

Scalar Scalar::from_rational(Rational re, ScalarMode mode) {
  Scalar s;
  s.re_ = std::move(re);
  s.mode_ = mode;
  return s;
}

Scalar Scalar::dual(Rational re, Rational nil) {
  Scalar s;
  s.re_ = std::move(re);
  s.nil_ = std::move(nil);
  s.mode_ = ScalarMode::dual;
  return s;
}

Scalar Scalar::from_int(long long v, ScalarMode mode) {
  return from_rational(Rational(v), mode);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.re_ = -s.re_;
  s.nil_ = -s.nil_;
  return s;
}

static ScalarMode join(ScalarMode a, ScalarMode b) {
  return (a == ScalarMode::dual || b == ScalarMode::dual) ? ScalarMode::dual
                                                          : ScalarMode::rational;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  nil_ += o.nil_;
  mode_ = join(mode_, o.mode_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  nil_ -= o.nil_;
  mode_ = join(mode_, o.mode_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a + b nil)(c + d nil) = ac + (ad + bc) nil
  Rational nil = re_ * o.nil_ + nil_ * o.re_;
  re_ *= o.re_;
  nil_ = std::move(nil);
  mode_ = join(mode_, o.mode_);
  return *this;
}

std::optional<Scalar> Scalar::divided_by(const Scalar& d) const {
  if (!d.invertible()) return std::nullopt;
  Scalar q;
  q.mode_ = join(mode_, d.mode_);
  // (a + b nil)/(c + d nil) = a/c + (bc - ad)/c^2 nil
  q.re_ = re_ / d.re_;
  q.nil_ = (nil_ * d.re_ - re_ * d.nil_) / (d.re_ * d.re_);
  return q;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar acc = from_int(1, mode_);
  for (unsigned k = 0; k < e; ++k) acc *= *this;
  return acc;
}

std::string Scalar::str() const {
  if (nil_ == 0) return rational_to_string(re_);
  std::string nilpart = rational_to_string(nil_ < 0 ? Rational(-nil_) : nil_) + "*nil";
  if (re_ == 0) return (nil_ < 0 ? "-" : "") + nilpart;
  return rational_to_string(re_) + (nil_ < 0 ? " - " : " + ") + nilpart;
}

}  // namespace gva
