#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conformal/rational_function.hpp"

namespace conformal {

// Result of exact Gaussian elimination on M x = rhs over a field F
// (F = Rational or RationalFunction).  `particular` is one solution when the
// system is consistent; `nullspace` is a basis of solutions of M x = 0, so
// the full solution set is particular + span(nullspace).
template <class F>
struct LinearSolution {
  bool consistent = true;
  size_t rank = 0;
  std::vector<F> particular;
  std::vector<std::vector<F>> nullspace;
  // Row index of a witness row 0 = nonzero when inconsistent.
  std::ptrdiff_t inconsistent_row = -1;
};

namespace detail {
inline size_t entry_complexity(const Rational &) { return 1; }
inline size_t entry_complexity(const RationalFunction &f) {
  return f.num().term_count() + f.den().term_count();
}
}  // namespace detail

// Exact Gauss-Jordan elimination with a deterministic pivot rule (cheapest
// entry in the column, ties by row order).  No floating point anywhere; all
// arithmetic stays in F.
template <class F>
LinearSolution<F> solve_linear(std::vector<std::vector<F>> M, std::vector<F> rhs) {
  const size_t rows = M.size();
  if (rhs.size() != rows)
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  const size_t cols = rows == 0 ? 0 : M[0].size();
  for (const auto &r : M)
    if (r.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

  LinearSolution<F> out;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t best = rows;
    size_t best_cost = 0;
    for (size_t i = r; i < rows; ++i) {
      if (M[i][c].is_zero()) continue;
      size_t cost = detail::entry_complexity(M[i][c]);
      if (best == rows || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == rows) continue;
    std::swap(M[r], M[best]);
    std::swap(rhs[r], rhs[best]);
    // Scale pivot row to 1.
    F inv = M[r][c];
    for (size_t j = c; j < cols; ++j)
      if (!M[r][j].is_zero()) M[r][j] = M[r][j] / inv;
    if (!rhs[r].is_zero()) rhs[r] = rhs[r] / inv;
    M[r][c] = F(1);
    // Eliminate everywhere else.
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      F f = M[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!M[r][j].is_zero()) M[i][j] = M[i][j] - f * M[r][j];
      if (!rhs[r].is_zero()) rhs[i] = rhs[i] - f * rhs[r];
      M[i][c] = F(0);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  out.rank = pivots.size();

  for (size_t i = out.rank; i < rows; ++i) {
    if (!rhs[i].is_zero()) {
      out.consistent = false;
      out.inconsistent_row = static_cast<std::ptrdiff_t>(i);
      return out;
    }
  }

  out.particular.assign(cols, F(0));
  for (auto [pr, pc] : pivots) out.particular[pc] = rhs[pr];

  std::vector<bool> is_pivot(cols, false);
  for (auto [pr, pc] : pivots) is_pivot[pc] = true;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<F> v(cols, F(0));
    v[fc] = F(1);
    for (auto [pr, pc] : pivots) v[pc] = F(0) - M[pr][fc];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

// A linear system extracted from polynomial identities: the unknowns are a
// designated set of variables that must occur linearly, every monomial in
// the remaining "row" variables labels one equation row, and whatever is
// left (parameter variables) lands inside the entries.
struct ParamLinearSystem {
  std::vector<std::pair<size_t, Monomial>> row_labels;  // (equation idx, row monomial)
  std::vector<std::vector<RationalFunction>> M;
  std::vector<RationalFunction> rhs;  // already negated free part: M x = rhs
  std::vector<Variable> unknowns;
};

// Splits each polynomial `eq == 0` into rows indexed by monomials in
// `row_vars`.  Every term must have total degree <= 1 in the unknowns
// (throws otherwise), and any variable that is neither an unknown nor a row
// variable is treated as a symbolic parameter inside the entries.
ParamLinearSystem linear_system_from(const std::vector<Polynomial> &eqs,
                                     const std::vector<Variable> &unknowns,
                                     const std::set<Variable> &row_vars);

// Same splitting, but requires that no parameter variables remain, so the
// matrix is purely rational.  Used by the grid sweeps where everything has
// been specialized.
struct RationalLinearSystem {
  std::vector<std::pair<size_t, Monomial>> row_labels;
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> rhs;
  std::vector<Variable> unknowns;
};

RationalLinearSystem linear_system_rational(const std::vector<Polynomial> &eqs,
                                            const std::vector<Variable> &unknowns);

}  // namespace conformal
