#include "gva/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace gva {

MissingSupport::MissingSupport(Index x)
    : std::runtime_error("cochain has no entry for index " + std::to_string(x)), index(x) {}

const Rational& Cochain1::at(Index x) const {
  auto it = phi.find(x);
  if (it == phi.end()) throw MissingSupport(x);
  return it->second;
}

void Cochain2::set(Index i, Index j, const Rational& v) {
  if (i == j) {
    if (v != 0) throw std::invalid_argument("psi_{i,i} must vanish (antisymmetry)");
    upper_.emplace(std::make_pair(i, j), Rational(0));
    return;
  }
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  Rational stored = i < j ? v : Rational(-v);
  auto [it, inserted] = upper_.emplace(key, stored);
  if (!inserted && it->second != stored)
    throw std::invalid_argument("inconsistent antisymmetric entries for psi at (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
}

bool Cochain2::defined_at(Index i, Index j) const {
  if (i == j) return true;
  return upper_.count(i < j ? std::make_pair(i, j) : std::make_pair(j, i)) != 0;
}

Rational Cochain2::at(Index i, Index j) const {
  if (i == j) return Rational(0);
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  auto it = upper_.find(key);
  if (it == upper_.end()) throw MissingSupport(i);
  return i < j ? it->second : Rational(-it->second);
}

namespace {

Rational g_plain_or_throw(const AlgebraSpec& spec, Index i, Index j) {
  auto g = g_from_f(spec, i, j);
  if (!g) throw PoleError(i, j);
  if (g->plain.nil_part() != 0)
    throw std::invalid_argument("cochain operations require a rational-valued bracket");
  return g->plain.real_part();
}

}  // namespace

Cochain2 delta1(const AlgebraSpec& spec, const Cochain1& phi, Window w) {
  Cochain2 psi;
  for (Index i = w.lo; i <= w.hi; ++i) {
    for (Index j = w.lo; j <= w.hi; ++j) {
      Rational g = g_plain_or_throw(spec, i, j);
      Rational v = g * (phi.at(i + j) - phi.at(i) - phi.at(j));
      psi.set(i, j, v);  // throws if the image is not antisymmetric
    }
  }
  return psi;
}

std::map<std::array<Index, 3>, Rational> delta2(const AlgebraSpec& spec, const Cochain2& psi,
                                                Window w) {
  std::map<std::array<Index, 3>, Rational> out;
  for (Index i = w.lo; i <= w.hi; ++i) {
    for (Index j = w.lo; j <= w.hi; ++j) {
      for (Index k = w.lo; k <= w.hi; ++k) {
        Rational r = g_plain_or_throw(spec, i, j) * psi.at(i + j, k) +
                     g_plain_or_throw(spec, j, k) * psi.at(j + k, i) +
                     g_plain_or_throw(spec, k, i) * psi.at(i + k, j) -
                     g_plain_or_throw(spec, i, j + k) * psi.at(j, k) +
                     g_plain_or_throw(spec, j, i + k) * psi.at(i, k) -
                     g_plain_or_throw(spec, k, i + j) * psi.at(i, j);
        out[{i, j, k}] = std::move(r);
      }
    }
  }
  return out;
}

namespace {

struct LinearSystem {
  Index col_lo{0};
  std::size_t ncols{0};
  bool track_witness{false};
  // integer rows after clearing rhs denominators
  std::vector<std::vector<BigInt>> A;
  std::vector<BigInt> rhs;
  std::vector<std::pair<Index, Index>> tags;  // indexed by ORIGINAL row id
  // companion: working row r = sum_o W[r][o] * (original equation o)
  std::vector<std::map<std::size_t, Rational>> W;

  std::size_t col(Index x) const { return static_cast<std::size_t>(x - col_lo); }

  void add_row(std::vector<BigInt> coeffs, const Rational& rhs_rat,
               std::pair<Index, Index> tag) {
    // scale by the rhs denominator so the whole row is integral
    BigInt den = denominator(rhs_rat);
    for (auto& c : coeffs) c *= den;
    std::size_t r = A.size();
    A.push_back(std::move(coeffs));
    rhs.push_back(numerator(rhs_rat));
    tags.push_back(tag);
    if (track_witness) W.push_back({{r, Rational(den)}});
  }

  // Bareiss fraction-free echelon form; returns pivot (row, col) list.
  std::vector<std::pair<std::size_t, std::size_t>> eliminate() {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
      std::size_t p = r;
      while (p < A.size() && A[p][c] == 0) ++p;
      if (p == A.size()) continue;
      if (p != r) {
        std::swap(A[p], A[r]);
        std::swap(rhs[p], rhs[r]);
        if (track_witness) std::swap(W[p], W[r]);
      }
      const BigInt piv = A[r][c];
      auto exact_div = [&](const BigInt& t) {
        if (t % prev != 0) throw std::logic_error("fraction-free elimination step not exact");
        return t / prev;
      };
      for (std::size_t q = r + 1; q < A.size(); ++q) {
        const BigInt f = A[q][c];
        for (std::size_t cc = 0; cc < ncols; ++cc)
          A[q][cc] = exact_div(piv * A[q][cc] - f * A[r][cc]);
        rhs[q] = exact_div(piv * rhs[q] - f * rhs[r]);
        if (track_witness) {
          std::map<std::size_t, Rational> next;
          const Rational rp(piv), rf(f), rd(prev);
          for (const auto& [o, v] : W[q]) next[o] = rp * v / rd;
          for (const auto& [o, v] : W[r]) {
            auto& slot = next[o];
            slot -= rf * v / rd;
            if (slot == 0) next.erase(o);
          }
          W[q] = std::move(next);
        }
      }
      pivots.emplace_back(r, c);
      prev = piv;
      ++r;
    }
    return pivots;
  }
};

LinearSystem assemble(const AlgebraSpec& spec, const Cochain2* psi, Window w) {
  LinearSystem sys;
  sys.track_witness = psi != nullptr;
  sys.col_lo = std::min(w.lo, 2 * w.lo);
  Index col_hi = std::max(w.hi, 2 * w.hi);
  sys.ncols = static_cast<std::size_t>(col_hi - sys.col_lo + 1);
  for (Index i = w.lo; i <= w.hi; ++i) {
    for (Index j = w.lo; j <= w.hi; ++j) {
      auto g = g_from_f(spec, i, j);
      if (!g) continue;  // pole pair: excluded
      if (g->plain.nil_part() != 0)
        throw std::invalid_argument("coboundary system requires a rational-valued bracket");
      Rational gp = g->plain.real_part();
      Rational rhs = psi ? psi->at(i, j) : Rational(0);
      std::vector<BigInt> row(sys.ncols, BigInt(0));
      if (gp == 0) {
        // 0 = psi_{i,j}
        sys.add_row(std::move(row), rhs, {i, j});
      } else {
        row[sys.col(i + j)] += 1;
        row[sys.col(i)] -= 1;
        row[sys.col(j)] -= 1;
        sys.add_row(std::move(row), rhs / gp, {i, j});
      }
    }
  }
  return sys;
}

}  // namespace

SolveResult solve_coboundary(const AlgebraSpec& spec, const Cochain2& psi, Window w) {
  LinearSystem sys = assemble(spec, &psi, w);
  auto pivots = sys.eliminate();

  SolveResult res;
  std::size_t rank = pivots.size();
  for (std::size_t q = rank; q < sys.A.size(); ++q) {
    if (sys.rhs[q] == 0) continue;
    res.solvable = false;
    for (const auto& [o, mult] : sys.W[q])
      res.witness.combination.emplace_back(sys.tags[o], mult);
    res.witness.rhs_value = Rational(sys.rhs[q]);
    return res;
  }

  res.solvable = true;
  // back-substitution; free unknowns stay zero
  std::vector<Rational> x(sys.ncols, Rational(0));
  for (std::size_t pi = pivots.size(); pi-- > 0;) {
    auto [r, c] = pivots[pi];
    Rational acc(sys.rhs[r]);
    for (std::size_t cc = c + 1; cc < sys.ncols; ++cc)
      if (sys.A[r][cc] != 0) acc -= Rational(sys.A[r][cc]) * x[cc];
    x[c] = acc / Rational(sys.A[r][c]);
  }
  for (std::size_t c = 0; c < sys.ncols; ++c)
    res.solution.phi[sys.col_lo + static_cast<Index>(c)] = x[c];
  return res;
}

std::vector<Cochain1> kernel_basis(const AlgebraSpec& spec, Window w) {
  LinearSystem sys = assemble(spec, nullptr, w);
  auto pivots = sys.eliminate();

  std::vector<bool> is_pivot(sys.ncols, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;

  std::vector<Cochain1> basis;
  for (std::size_t fc = 0; fc < sys.ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> x(sys.ncols, Rational(0));
    x[fc] = 1;
    for (std::size_t pi = pivots.size(); pi-- > 0;) {
      auto [r, c] = pivots[pi];
      Rational acc(0);
      for (std::size_t cc = c + 1; cc < sys.ncols; ++cc)
        if (sys.A[r][cc] != 0) acc -= Rational(sys.A[r][cc]) * x[cc];
      x[c] = acc / Rational(sys.A[r][c]);
    }
    Cochain1 v;
    for (std::size_t c = 0; c < sys.ncols; ++c) v.phi[sys.col_lo + static_cast<Index>(c)] = x[c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool cochain_in_span(const std::vector<Cochain1>& basis, const Cochain1& target) {
  std::vector<Index> support;
  for (const auto& b : basis)
    for (const auto& [x, v] : b.phi) support.push_back(x);
  for (const auto& [x, v] : target.phi) support.push_back(x);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  auto value = [&](const Cochain1& c, Index x) {
    auto it = c.phi.find(x);
    return it == c.phi.end() ? Rational(0) : it->second;
  };

  // columns = basis vectors, rows = support indices; solve B y = target
  std::size_t rows = support.size(), cols = basis.size();
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) M[r][c] = value(basis[c], support[r]);
    M[r][cols] = value(target, support[r]);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    for (std::size_t q = r + 1; q < rows; ++q) {
      if (M[q][c] == 0) continue;
      Rational f = M[q][c] / M[r][c];
      for (std::size_t cc = c; cc <= cols; ++cc) M[q][cc] -= f * M[r][cc];
    }
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    bool zero_lhs = true;
    for (std::size_t c = 0; c < cols; ++c) zero_lhs = zero_lhs && M[q][c] == 0;
    if (zero_lhs && M[q][cols] != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& src, const char* what,
                                               std::size_t fields) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(src);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> cells;
    std::string cell;
    while (ls >> cell) cells.push_back(cell);
    if (cells.empty()) continue;
    if (cells.size() != fields)
      throw std::runtime_error(std::string(what) + " line " + std::to_string(lineno) +
                               ": expected " + std::to_string(fields) + " fields");
    rows.push_back(std::move(cells));
  }
  return rows;
}

Index parse_index(const std::string& s, const char* what) {
  try {
    return std::stoll(s);
  } catch (...) {
    throw std::runtime_error(std::string(what) + ": bad index '" + s + "'");
  }
}

Rational parse_rat(const std::string& s, const char* what) {
  auto r = rational_from_string(s);
  if (!r) throw std::runtime_error(std::string(what) + ": bad rational '" + s + "'");
  return *r;
}

}  // namespace

Cochain1 parse_phi_text(const std::string& src) {
  Cochain1 out;
  for (const auto& row : csv_rows(src, "phi table", 2)) {
    Index x = parse_index(row[0], "phi table");
    if (out.phi.count(x))
      throw std::runtime_error("phi table: duplicate index " + std::to_string(x));
    out.phi[x] = parse_rat(row[1], "phi table");
  }
  return out;
}

Cochain2 parse_psi_text(const std::string& src) {
  Cochain2 out;
  for (const auto& row : csv_rows(src, "psi table", 3)) {
    out.set(parse_index(row[0], "psi table"), parse_index(row[1], "psi table"),
            parse_rat(row[2], "psi table"));
  }
  return out;
}

}  // namespace gva
