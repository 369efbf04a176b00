#include "gva/element.hpp"

namespace gva {

Element Element::basis(Index x, ScalarMode mode) {
  Element e;
  e.add_term(x, Scalar::from_int(1, mode));
  return e;
}

Element Element::fat_basis(Index x, ScalarMode mode) {
  Element e;
  e.keep_zeros_ = true;
  e.add_term(x, Scalar::from_int(1, mode));
  return e;
}

Element Element::theta_unit(ScalarMode mode) {
  Element e;
  e.add_theta(Scalar::from_int(1, mode));
  return e;
}

Element Element::zero(bool keep_zeros) {
  Element e;
  e.keep_zeros_ = keep_zeros;
  return e;
}

Scalar Element::coeff(Index x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(Index x, const Scalar& c) {
  if (!keep_zeros_ && c.is_zero() && !terms_.count(x)) return;
  auto [it, inserted] = terms_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (!keep_zeros_ && it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_theta(const Scalar& c) { theta_ += c; }

bool Element::is_zero() const {
  if (!theta_.is_zero()) return false;
  for (const auto& [x, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

Element Element::canonical() const {
  Element r;
  for (const auto& [x, c] : terms_) r.add_term(x, c);
  r.theta_ = theta_;
  return r;
}

Element& Element::operator+=(const Element& o) {
  keep_zeros_ = keep_zeros_ || o.keep_zeros_;
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  theta_ += o.theta_;
  return *this;
}

Element& Element::operator-=(const Element& o) {
  keep_zeros_ = keep_zeros_ || o.keep_zeros_;
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  theta_ -= o.theta_;
  return *this;
}

Element Element::operator-() const {
  Element r;
  r.keep_zeros_ = keep_zeros_;
  for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
  r.theta_ = -theta_;
  return r;
}

Element operator*(const Scalar& c, const Element& e) {
  Element r;
  r.keep_zeros_ = e.keep_zeros_;
  if (c.is_zero() && !r.keep_zeros_) return r;
  for (const auto& [x, v] : e.terms_) r.add_term(x, c * v);
  r.theta_ = c * e.theta_;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.theta_ == b.theta_)) return false;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  auto skip = [](auto& it, const auto& end) {
    while (it != end && it->second.is_zero()) ++it;
  };
  while (true) {
    skip(ia, a.terms_.end());
    skip(ib, b.terms_.end());
    if (ia == a.terms_.end() || ib == b.terms_.end()) break;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
  return ia == a.terms_.end() && ib == b.terms_.end();
}

std::string Element::str() const {
  std::string out;
  auto sep = [&] { if (!out.empty()) out += " + "; };
  for (const auto& [x, c] : terms_) {
    if (c.is_zero()) continue;
    sep();
    out += "(" + c.str() + ")*e_" + std::to_string(x);
  }
  if (!theta_.is_zero()) {
    sep();
    out += "(" + theta_.str() + ")*theta";
  }
  return out.empty() ? "0" : out;
}

}  // namespace gva
