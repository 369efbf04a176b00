#include "gva/burgers.hpp"

#include <sstream>

namespace gva {

StructureTable::StructureTable(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("table dimension must be positive");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

std::size_t StructureTable::idx(int j, int k, int i) const {
  if (j < 1 || j > dim_ || k < 1 || k > dim_ || i < 1 || i > dim_)
    throw std::out_of_range("structure table index out of range");
  return (static_cast<std::size_t>(j - 1) * dim_ + (k - 1)) * dim_ + (i - 1);
}

const Rational& StructureTable::at(int j, int k, int i) const { return c_[idx(j, k, i)]; }

void StructureTable::set(int j, int k, int i, Rational v) { c_[idx(j, k, i)] = std::move(v); }

Element StructureTable::product_basis(int j, int k) const {
  Element out;
  for (int i = 1; i <= dim_; ++i) out.add_term(i, Scalar::from_rational(at(j, k, i)));
  return out;
}

Element StructureTable::product(const Element& A, const Element& B) const {
  Element out;
  for (const auto& [j, cj] : A.terms()) {
    for (const auto& [k, ck] : B.terms()) {
      if (j < 1 || j > dim_ || k < 1 || k > dim_)
        throw std::out_of_range("element index outside table basis");
      const Scalar c = cj * ck;
      for (int i = 1; i <= dim_; ++i)
        out.add_term(i, c * Scalar::from_rational(at(static_cast<int>(j), static_cast<int>(k), i),
                                                  c.mode()));
    }
  }
  return out;
}

std::string StructureTable::to_text() const {
  std::ostringstream os;
  os << "dim " << dim_ << "\n";
  for (int j = 1; j <= dim_; ++j)
    for (int k = 1; k <= dim_; ++k)
      for (int i = 1; i <= dim_; ++i)
        if (at(j, k, i) != 0)
          os << j << " " << k << " " << i << " " << rational_to_string(at(j, k, i)) << "\n";
  return os.str();
}

StructureTable StructureTable::from_text(const std::string& src) {
  std::istringstream in(src);
  std::string raw;
  std::size_t lineno = 0;
  int dim = -1;
  StructureTable t;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> cells;
    std::string cell;
    while (ls >> cell) cells.push_back(cell);
    if (cells.empty()) continue;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
      return std::runtime_error("table line " + std::to_string(lineno) + ": " + msg);
    };
    if (dim < 0) {
      if (cells.size() != 2 || cells[0] != "dim") throw fail("expected 'dim N'");
      try {
        dim = std::stoi(cells[1]);
      } catch (...) {
        throw fail("bad dimension '" + cells[1] + "'");
      }
      if (dim <= 0) throw fail("dimension must be positive");
      t = StructureTable(dim);
      continue;
    }
    if (cells.size() != 4) throw fail("expected 'j k i value'");
    int v[3];
    for (int p = 0; p < 3; ++p) {
      try {
        v[p] = std::stoi(cells[p]);
      } catch (...) {
        throw fail("bad index '" + cells[p] + "'");
      }
      if (v[p] < 1 || v[p] > dim) throw fail("index out of range 1..N");
    }
    auto r = rational_from_string(cells[3]);
    if (!r) throw fail("bad rational '" + cells[3] + "'");
    t.set(v[0], v[1], v[2], *r);
  }
  if (dim < 0) throw std::runtime_error("table: missing 'dim N' header");
  return t;
}

std::vector<CheckReport> lsa_table_check(const StructureTable& T, std::size_t cap) {
  const int N = T.dim();
  Window w{1, N};
  auto relation = run_tuple_check(
      "lsa-table-relation", w, 4, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        const int i = static_cast<int>(t[0]), j = static_cast<int>(t[1]),
                  k = static_cast<int>(t[2]), m = static_cast<int>(t[3]);
        Rational lhs(0), rhs(0);
        for (int r = 1; r <= N; ++r) {
          lhs += T.at(j, r, i) * T.at(k, m, r) - T.at(k, r, i) * T.at(j, m, r);
          rhs += T.at(j, k, r) * T.at(r, m, i) - T.at(k, j, r) * T.at(r, m, i);
        }
        Element res;
        res.add_term(i, Scalar::from_rational(lhs - rhs));
        return Residual(std::move(res));
      });
  auto assoc = run_tuple_check(
      "lsa-table-associator", w, 3, cap,
      [&](const std::vector<Index>& t) -> std::optional<Residual> {
        Element ej = Element::basis(t[0]), ek = Element::basis(t[1]), em = Element::basis(t[2]);
        auto a = [&](const Element& x, const Element& y, const Element& z) {
          return T.product(T.product(x, y), z) - T.product(x, T.product(y, z));
        };
        return Residual(a(ej, ek, em) - a(ek, ej, em));
      });
  return {std::move(relation), std::move(assoc)};
}

CubicCoefficients::CubicCoefficients(int dim) : dim_(dim) {
  a_.assign(static_cast<std::size_t>(dim) * dim * dim * dim, Rational(0));
}

static std::size_t idx4(int d, int j, int k, int m, int i) {
  std::size_t n = static_cast<std::size_t>(d);
  return ((static_cast<std::size_t>(j - 1) * n + (k - 1)) * n + (m - 1)) * n + (i - 1);
}

const Rational& CubicCoefficients::at(int j, int k, int m, int i) const {
  return a_[idx4(dim_, j, k, m, i)];
}

Rational& CubicCoefficients::at(int j, int k, int m, int i) { return a_[idx4(dim_, j, k, m, i)]; }

CubicCoefficients compute_A(const StructureTable& T) {
  const int N = T.dim();
  CubicCoefficients A(N);
  const Rational third(1, 3);
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k)
      for (int m = 1; m <= N; ++m)
        for (int i = 1; i <= N; ++i) {
          Rational acc(0);
          for (int r = 1; r <= N; ++r) {
            acc += T.at(j, r, i) * T.at(k, m, r);
            acc += T.at(k, r, i) * T.at(m, j, r);
            acc += T.at(m, r, i) * T.at(j, k, r);
            acc -= T.at(r, j, i) * T.at(k, m, r);
            acc -= T.at(r, k, i) * T.at(m, j, r);
            acc -= T.at(r, m, i) * T.at(j, k, r);
          }
          A.at(j, k, m, i) = third * acc;
        }
  return A;
}

namespace {

std::string comp(const char* base, int i, EmitFormat f, const char* sub) {
  // plain: u1_x ; latex: u^{1}_{x}
  std::ostringstream os;
  if (f == EmitFormat::plain) {
    os << base << i;
    if (*sub) os << "_" << sub;
  } else {
    os << base << "^{" << i << "}";
    if (*sub) os << "_{" << sub << "}";
  }
  return os.str();
}

void append_term(std::ostringstream& line, const Rational& coef,
                 const std::vector<std::string>& factors, EmitFormat f) {
  if (coef == 0) return;
  const bool neg = coef < 0;
  Rational mag = neg ? Rational(-coef) : coef;
  line << (neg ? " - " : " + ");
  const char* sep = f == EmitFormat::plain ? "*" : " ";
  bool coef_one = (mag == 1);
  if (!coef_one) line << rational_to_string(mag);
  bool first = coef_one;
  for (const auto& fac : factors) {
    if (!first) line << sep;
    line << fac;
    first = false;
  }
}

}  // namespace

std::string emit_burgers(const StructureTable& T, EmitFormat f) {
  const int N = T.dim();
  CubicCoefficients A = compute_A(T);
  std::ostringstream out;
  for (int i = 1; i <= N; ++i) {
    std::ostringstream line;
    line << comp("u", i, f, "t") << " = " << comp("u", i, f, "xx");
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        append_term(line, Rational(2) * T.at(j, k, i), {comp("u", k, f, ""), comp("u", j, f, "x")},
                    f);
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int m = 1; m <= N; ++m)
          append_term(line, A.at(j, k, m, i),
                      {comp("u", k, f, ""), comp("u", j, f, ""), comp("u", m, f, "")}, f);
    out << line.str() << "\n";
  }
  return out.str();
}

TruncatedTable graded_truncate(const AlgebraSpec& spec, Window w) {
  const int N = static_cast<int>(w.count());
  TruncatedTable out;
  out.table = StructureTable(N);
  out.window = w;
  for (Index xj = w.lo; xj <= w.hi; ++xj) {
    for (Index xk = w.lo; xk <= w.hi; ++xk) {
      auto v = eval_struct_full(spec, xj, xk);
      if (!v) {
        out.report.dropped_undefined.emplace_back(xj, xk);
        continue;
      }
      if (!v->theta.is_zero()) ++out.report.dropped_theta_terms;
      if (v->plain.is_zero()) continue;
      Index xi = xj + xk;
      if (xi < w.lo || xi > w.hi) {
        out.report.dropped_out_of_window.emplace_back(xj, xk);
        continue;
      }
      if (v->plain.nil_part() != 0)
        throw std::invalid_argument("graded_truncate requires rational coefficients");
      out.table.set(static_cast<int>(xj - w.lo + 1), static_cast<int>(xk - w.lo + 1),
                    static_cast<int>(xi - w.lo + 1), v->plain.real_part());
    }
  }
  return out;
}

}  // namespace gva
