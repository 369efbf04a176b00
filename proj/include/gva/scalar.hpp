#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gva {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

/// Strict parse of "p" or "p/q" with optional leading '-'. Rejects anything else.
std::optional<Rational> rational_from_string(std::string_view s);

enum class ScalarMode { rational, dual };

/// Exact scalar: a rational real part plus a nilpotent part (nil^2 = 0).
/// In rational mode the nil part is identically zero.
class Scalar {
public:
  Scalar() = default;

  static Scalar from_rational(Rational re, ScalarMode mode = ScalarMode::rational);
  static Scalar dual(Rational re, Rational nil);
  static Scalar from_int(long long v, ScalarMode mode = ScalarMode::rational);

  ScalarMode mode() const { return mode_; }
  const Rational& real_part() const { return re_; }
  const Rational& nil_part() const { return nil_; }

  bool is_zero() const { return re_ == 0 && nil_ == 0; }
  /// A scalar is invertible iff its real part is nonzero (nil is nilpotent).
  bool invertible() const { return re_ != 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Exact division; empty when the divisor is not invertible.
  std::optional<Scalar> divided_by(const Scalar& d) const;

  /// Nonnegative integer power; x^0 = 1 for every x.
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.nil_ == b.nil_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q", or "p/q + r/s*nil" / "p/q - r/s*nil" / "r/s*nil" in dual mode.
  std::string str() const;

private:
  Rational re_{0};
  Rational nil_{0};
  ScalarMode mode_{ScalarMode::rational};
};

}  // namespace gva
