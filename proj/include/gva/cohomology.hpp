#pragma once

#include <array>
#include <map>
#include <vector>

#include "gva/algebra.hpp"
#include "gva/report.hpp"

namespace gva {

/// A degree-0 linear form phi(e_x) = phi_x e_x with finite support.
struct Cochain1 {
  std::map<Index, Rational> phi;

  bool defined_at(Index x) const { return phi.count(x) != 0; }
  const Rational& at(Index x) const;  // throws MissingSupport
};

class MissingSupport : public std::runtime_error {
public:
  explicit MissingSupport(Index x);
  Index index;
};

/// A 2-cochain psi(e_i, e_j) = psi_{i,j} e_{i+j} with antisymmetric storage:
/// setting (i,j) fixes (j,i) = -value; inconsistent entries are rejected.
class Cochain2 {
public:
  void set(Index i, Index j, const Rational& v);
  bool defined_at(Index i, Index j) const;
  Rational at(Index i, Index j) const;  // throws MissingSupport on unset pairs

  /// Stored upper pairs (i < j) with their values, plus set diagonal entries.
  const std::map<std::pair<Index, Index>, Rational>& upper() const { return upper_; }

private:
  std::map<std::pair<Index, Index>, Rational> upper_;
};

/// psi_{i,j} = g(i,j) (phi_{i+j} - phi_i - phi_j) on all pairs in w.
/// Uses the plain part of g. Throws PoleError / MissingSupport; rejects
/// windows where the image fails to be antisymmetric (non-skew bracket).
Cochain2 delta1(const AlgebraSpec& spec, const Cochain1& phi, Window w);

/// The six-term adjoint 2-cocycle residual per triple in w.
std::map<std::array<Index, 3>, Rational> delta2(const AlgebraSpec& spec, const Cochain2& psi,
                                                Window w);

struct InfeasibilityWitness {
  /// Multipliers over the originating equations (tagged by their pair): the
  /// combination has zero left-hand side and the stated nonzero right side.
  std::vector<std::pair<std::pair<Index, Index>, Rational>> combination;
  Rational rhs_value;
};

struct SolveResult {
  bool solvable{false};
  Cochain1 solution;             // valid when solvable
  InfeasibilityWitness witness;  // valid when not
};

/// Decides whether psi = delta1(phi) has a solution phi on the unknowns
/// covering w and w+w, by fraction-free elimination with first-nonzero
/// pivoting. Pairs with g(i,j) = 0 become constraints psi_{i,j} = 0; pole
/// pairs are excluded. Free unknowns are set to zero in the returned phi.
SolveResult solve_coboundary(const AlgebraSpec& spec, const Cochain2& psi, Window w);

/// Basis of {phi : g(i,j)(phi_{i+j} - phi_i - phi_j) = 0 for all pairs in w},
/// over the same unknown set as solve_coboundary.
std::vector<Cochain1> kernel_basis(const AlgebraSpec& spec, Window w);

/// Exact span membership over the rationals (support = union of supports).
bool cochain_in_span(const std::vector<Cochain1>& basis, const Cochain1& target);

/// "x value" lines, '#' comments.
Cochain1 parse_phi_text(const std::string& src);
/// "i j value" lines, '#' comments; antisymmetry enforced.
Cochain2 parse_psi_text(const std::string& src);

}  // namespace gva
