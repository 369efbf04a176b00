#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gva/scalar.hpp"

namespace gva {

using Index = std::int64_t;

/// Finite linear combination of graded basis vectors e_x plus a central
/// theta coefficient. Canonical: no stored coefficient is zero.
///
/// Windowed checks work with zero-keeping elements instead (fat_basis):
/// structure functions with poles also have exact zeros, and a zero produced
/// at one level must not hide an undefined evaluation at the next, so the
/// support of a product is retained even where its coefficients vanish.
/// Zero-keeping is contagious through all operations; equality and is_zero
/// ignore stored zeros either way.
class Element {
public:
  Element() = default;

  static Element basis(Index x, ScalarMode mode = ScalarMode::rational);
  static Element fat_basis(Index x, ScalarMode mode = ScalarMode::rational);
  static Element theta_unit(ScalarMode mode = ScalarMode::rational);
  static Element zero(bool keep_zeros);

  const std::map<Index, Scalar>& terms() const { return terms_; }
  const Scalar& theta() const { return theta_; }
  bool keeps_zeros() const { return keep_zeros_; }

  Scalar coeff(Index x) const;
  void add_term(Index x, const Scalar& c);
  void add_theta(const Scalar& c);

  bool is_zero() const;

  /// Zero-stripped copy.
  Element canonical() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;

  friend Element operator*(const Scalar& c, const Element& e);

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// e.g. "(-8/5)*e_3 + (1/2)*theta"; "0" for the zero element.
  std::string str() const;

private:
  std::map<Index, Scalar> terms_;
  Scalar theta_;
  bool keep_zeros_ = false;
};

}  // namespace gva
