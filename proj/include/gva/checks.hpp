#pragma once

#include <functional>

#include "gva/algebra.hpp"
#include "gva/report.hpp"

namespace gva {

inline constexpr std::size_t kDefaultCounterexampleCap = 20;

enum class ResidualMode { scalar, element };
enum class JacobiForm { J, TG };
enum class HereditaryVariant { scalar_shift, general_table, shift1_table, element_def };

/// g(i,j) + g(j,i), both parts.
CheckReport check_skew(const AlgebraSpec& spec, Window w,
                       std::size_t cap = kDefaultCounterexampleCap);

/// Jacobi residual: form J is the cyclic sum of g(i,j)g(i+j,k), form TG its
/// a/b expansion in the T and G tensors. The two forms agree tuple-by-tuple.
CheckReport check_jacobi(const AlgebraSpec& spec, Window w, JacobiForm form,
                         std::size_t cap = kDefaultCounterexampleCap);

/// Per-tuple Jacobi residual; empty on a pole.
std::optional<Element> jacobi_residual(const AlgebraSpec& spec, JacobiForm form, Index i, Index j,
                                       Index k);

/// Left-symmetry. scalar evaluates
///   [f(i,j)-f(j,i)] f(i+j,k) - f(j,k) f(i,j+k) + f(i,k) f(j,i+k)
/// (with the analogous theta column); element computes lsym_defect on basis
/// vectors through the product itself.
CheckReport check_quasi_assoc(const AlgebraSpec& spec, Window w, ResidualMode mode,
                              std::size_t cap = kDefaultCounterexampleCap);

/// Two independent readings over pairs (i,k):
///   alternative-lsym    lsym_defect(e_i, e_i, e_k)  (identically zero)
///   alternative-strict  associator(e_i, e_i, e_k)   (the left-alternative law)
std::vector<CheckReport> check_alternative(const AlgebraSpec& spec, Window w,
                                           std::size_t cap = kDefaultCounterexampleCap);

/// [e_i, e_j*e_k] - e_j*[e_i,e_k] - [e_i,e_j]*e_k.
CheckReport check_derivation(const AlgebraSpec& spec, Window w, ResidualMode mode,
                             std::size_t cap = kDefaultCounterexampleCap);

using PsiFn = std::function<Rational(Index, Index)>;

/// Six-term 2-cocycle relation for psi against the plain bracket function.
CheckReport check_cocycle(const AlgebraSpec& spec, Window w, const PsiFn& psi,
                          std::size_t cap = kDefaultCounterexampleCap);

/// Hereditary condition for Phi, in the requested variant.
CheckReport check_hereditary(const AlgebraSpec& spec, Window w, const EndoSpec& phi,
                             HereditaryVariant variant,
                             std::size_t cap = kDefaultCounterexampleCap);

/// Cyclic sum of P_ij^k = hc(i,j) f(k+x0, i+j+2x0), hc being the shift
/// hereditary residual.
CheckReport check_bianchi_p(const AlgebraSpec& spec, Window w, Index x0,
                            std::size_t cap = kDefaultCounterexampleCap);

/// rho-compatibility (strong deformation). difference mode requires a shift
/// rho and evaluates [f(i,j+x0)-f(i,j)] - [f(j,i+x0)-f(j,i)]; element mode
/// evaluates e_i*rho(e_j) - e_j*rho(e_i) - rho(e_i*e_j - e_j*e_i).
CheckReport check_rho_compat(const AlgebraSpec& spec, Window w, const EndoSpec& rho,
                             ResidualMode mode, std::size_t cap = kDefaultCounterexampleCap);

/// [[A,B,C*D]] - [[A,B,C]]*D - C*[[A,B,D]] over quadruples, with
/// [[x,y,z]] the left-symmetry defect.
CheckReport check_universal(const AlgebraSpec& spec, Window w,
                            std::size_t cap = kDefaultCounterexampleCap);

/// Fundamental (Filippov) identity of the ternary bracket over quintuples.
CheckReport check_filippov(const AlgebraSpec& spec, Window w,
                           std::size_t cap = kDefaultCounterexampleCap);

/// Bremner identity [[A,[B,C,D],E],F,G] = [[A,B,C],[D,E,F],G] over septuples.
CheckReport check_bremner(const AlgebraSpec& spec, Window w,
                          std::size_t cap = kDefaultCounterexampleCap);

/// The bracket [(A1,A2),(B1,B2)] = ([A1,B1], A1*B2 - B1*A2) on pairs:
///   bmod-skew            [X,Y] + [Y,X] computed directly on pairs
///   bmod-skew-factored   the factored criterion
///                        [g(p,q)-g(q,p)] [f(p,s) e_{p+s} - f(q,r) e_{q+r}]
///   bmod-jacobi          cyclic Jacobi sum computed directly on pairs
/// Tuples are (p,r,q,s) resp. (p,r,q,s,t,u).
std::vector<CheckReport> check_bmod(const AlgebraSpec& spec, Window w,
                                    std::size_t cap = kDefaultCounterexampleCap);

/// Compares generic computations against hard-coded closed-form expressions
/// for the centrally extended family (meaningful for f = -j(1+eps j)/(1+eps(i+j))
/// with the cubic theta column):
///   crosscheck-ternary          generic ternary bracket vs closed form
///   crosscheck-derivation-lhs   [e_i, e_j*e_k] vs its closed-form expansion
///   crosscheck-derivation-rhs   e_j*[e_i,e_k] + [e_i,e_j]*e_k vs closed form
///   virasoro-skew-system        the two-equation skew system per (i,j)
/// Discrepancies are recorded per tuple; they indicate a wrong closed form,
/// not a broken algebra.
std::vector<CheckReport> crosscheck_virasoro_closed_forms(
    const AlgebraSpec& spec, Window w, std::size_t cap = kDefaultCounterexampleCap);

/// Any bilinear product on graded elements, for checks that run against
/// table-backed or deformed products.
using ProductFn = std::function<Element(const Element&, const Element&)>;

/// Left-symmetry of an arbitrary product over basis triples.
CheckReport check_lsym_product(std::string name, const ProductFn& prod, Window w,
                               std::size_t cap = kDefaultCounterexampleCap);

/// Derivation property of the commutator of an arbitrary product.
CheckReport check_derivation_product(std::string name, const ProductFn& prod, Window w,
                                     std::size_t cap = kDefaultCounterexampleCap);

}  // namespace gva
