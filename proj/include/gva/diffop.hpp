#pragma once

#include <map>
#include <string>
#include <vector>

#include "gva/report.hpp"
#include "gva/scalar.hpp"

namespace gva {

/// Polynomial differential operator sum c x^a (d/dx)^b in normal order
/// (all x powers left of all derivatives). Canonical: no zero coefficients.
class DiffOp {
public:
  using Key = std::pair<unsigned, unsigned>;  // (xpow, dorder)

  DiffOp() = default;
  static DiffOp monomial(const Rational& c, unsigned xpow, unsigned dorder);

  const std::map<Key, Rational>& terms() const { return terms_; }
  void add(const Rational& c, unsigned xpow, unsigned dorder);

  bool is_zero() const { return terms_.empty(); }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Rational& c, const DiffOp& o);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// e.g. "3*x^4*d + x^5*d^2"; "0" when empty.
  std::string str() const;

private:
  std::map<Key, Rational> terms_;
};

/// Operator composition, re-normal-ordered through
/// d^b x^c = sum_m C(b,m) c!/(c-m)! x^{c-m} d^{b-m}.
DiffOp dop_compose(const DiffOp& A, const DiffOp& B);

/// e_i = x^{i+1} d/dx; i must be nonnegative.
DiffOp lk_basis(Index i);

/// Closed form (q+1) e_{p+q} + e_{p+q+1} d/dx of the basis product.
DiffOp lk_star_closed(Index p, Index q);

/// Which parts of the operator-algebra suite to run.
struct LkChecks {
  bool assoc = true;        // associator of compositions vanishes
  bool triple = true;       // closed triple-product formula matches
  bool commutator = true;   // [e_p, e_q] = (q-p) e_{p+q}
  bool ternary = true;      // ternary bracket vanishes
  bool filippov = true;
  bool bremner = true;
  bool derivation = true;   // [e_p, e_q*e_r] = e_q*[e_p,e_r] + [e_p,e_q]*e_r
  bool ops = true;          // multiplication-operator identities
  bool final_identity = true;
};

/// Runs the suite over basis indices 0..pmax (Bremner over 0..bremner_pmax).
/// Residuals are reported as Weyl monomials.
std::vector<CheckReport> lk_suite(Index pmax, Index bremner_pmax, const LkChecks& checks,
                                  std::size_t cap = 20);

std::vector<CheckReport> lk_suite(Index pmax, std::size_t cap = 20);

}  // namespace gva
