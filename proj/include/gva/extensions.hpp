#pragma once

#include "gva/algebra.hpp"
#include "gva/burgers.hpp"
#include "gva/checks.hpp"
#include "gva/report.hpp"

namespace gva {

/// Element of A (+) A' (phase-space extension) or A (+) A (the double):
/// primal coefficients of e_x, second-slot coefficients of e'_x resp. e_x.
struct PairedElement {
  Element primal;
  Element dual;

  bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
  PairedElement operator-(const PairedElement& o) const {
    return {primal - o.primal, dual - o.dual};
  }
  PairedElement operator+(const PairedElement& o) const {
    return {primal + o.primal, dual + o.dual};
  }
  bool operator==(const PairedElement& o) const {
    return primal == o.primal && dual == o.dual;
  }
};

/// Phase-space product (P1, P2) * (Q1, Q2) = (P1*Q1, P1.Q2) where the dual
/// action derived from the pairing <e'_a, e_b> = delta_{a,b} is
/// e_i . e'_j = -f(i, j-i) e'_{j-i}. Its commutator has second slot
/// P1.Q2 - Q1.P2. Requires a theta-free spec.
PairedElement tstar_product(const AlgebraSpec& spec, const PairedElement& P,
                            const PairedElement& Q);

/// Left-symmetric double: (P1, P2) *2 (Q1, Q2) = (P1*Q1, P1*Q2 - Q1*P2) with
/// the plain product in both slots.
PairedElement double_product(const AlgebraSpec& spec, const PairedElement& P,
                             const PairedElement& Q);

/// Left-symmetry of tstar_product over mixed basis triples. Tuple encoding:
/// (slot1, x1, slot2, x2, slot3, x3) with slot 0 = primal e_x, 1 = dual e'_x.
CheckReport check_tstar_lsa(const AlgebraSpec& spec, Window w,
                            std::size_t cap = kDefaultCounterexampleCap);

/// Same sweep for the double's product.
CheckReport check_double_lsa(const AlgebraSpec& spec, Window w,
                             std::size_t cap = kDefaultCounterexampleCap);

/// x *' y = x*y + nil (rho(x)*y), nil^2 = 0. Requires dual scalar mode.
ProductFn deform_product(const AlgebraSpec& spec, const EndoSpec& rho);

/// Compares rho_1([X,Y]) with X *1 rho_1(Y) - Y *1 rho_1(X) on primal basis
/// pairs of the phase-space extension, rho_1 = (rho, 0); equivalent to the
/// shift compatibility condition on f.
CheckReport check_rho1_lift(const AlgebraSpec& spec, Window w, Index x0,
                            std::size_t cap = kDefaultCounterexampleCap);

/// Text of the extended hydrodynamic system for a finite table:
/// u^i_t = rho(u_x)^i + (u_x * u)^i plus the second-slot line (u_x * u')^i.
std::string emit_extended_hydro(const StructureTable& T,
                                const std::vector<std::vector<Rational>>& rho);

}  // namespace gva
