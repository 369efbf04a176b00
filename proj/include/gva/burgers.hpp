#pragma once

#include <string>
#include <vector>

#include "gva/algebra.hpp"
#include "gva/report.hpp"

namespace gva {

/// Dense structure-constant table for a finite-dimensional algebra:
/// C(j,k,i) is the coefficient of e_i in e_j * e_k (1-based indices).
class StructureTable {
public:
  StructureTable() = default;
  explicit StructureTable(int dim);

  int dim() const { return dim_; }
  const Rational& at(int j, int k, int i) const;
  void set(int j, int k, int i, Rational v);

  Element product_basis(int j, int k) const;            // e_j * e_k
  Element product(const Element& A, const Element& B) const;  // bilinear extension

  /// "dim N" then "j k i value" lines for nonzero entries.
  std::string to_text() const;
  static StructureTable from_text(const std::string& src);

private:
  std::size_t idx(int j, int k, int i) const;
  int dim_{0};
  std::vector<Rational> c_;
};

/// Left-symmetry of a table, decided two independent ways:
///   lsa-table-relation    C_{jr}^i C_{km}^r - C_{kr}^i C_{jm}^r
///                           = C_{jk}^r C_{rm}^i - C_{kj}^r C_{rm}^i
///                         over (i,j,k,m), summed over r
///   lsa-table-associator  (e_j,e_k,e_m) - (e_k,e_j,e_m) via table products
/// The two verdicts agree on every table.
std::vector<CheckReport> lsa_table_check(const StructureTable& T,
                                         std::size_t cap = 20);

/// A_{jkm}^i = (1/3)(C_{jr}^i C_{km}^r + C_{kr}^i C_{mj}^r + C_{mr}^i C_{jk}^r
///                 - C_{rj}^i C_{km}^r - C_{rk}^i C_{mj}^r - C_{rm}^i C_{jk}^r).
class CubicCoefficients {
public:
  explicit CubicCoefficients(int dim);
  const Rational& at(int j, int k, int m, int i) const;
  Rational& at(int j, int k, int m, int i);
  int dim() const { return dim_; }

private:
  int dim_{0};
  std::vector<Rational> a_;
};

CubicCoefficients compute_A(const StructureTable& T);

enum class EmitFormat { plain, latex };

/// Component equations u^i_t = u^i_xx + 2 C_{jk}^i u^k u^j_x + A_{jkm}^i u^k u^j u^m
/// with zero terms suppressed and (j,k,m)-ascending term order.
std::string emit_burgers(const StructureTable& T, EmitFormat format);

struct TruncationReport {
  std::vector<std::pair<Index, Index>> dropped_out_of_window;
  std::vector<std::pair<Index, Index>> dropped_undefined;
  std::size_t dropped_theta_terms{0};
};

struct TruncatedTable {
  StructureTable table;
  Window window{};
  TruncationReport report;
};

/// Finite snapshot of a graded spec over basis {e_x : x in w}; products whose
/// result index leaves w are dropped and counted, pole pairs recorded.
TruncatedTable graded_truncate(const AlgebraSpec& spec, Window w);

}  // namespace gva
