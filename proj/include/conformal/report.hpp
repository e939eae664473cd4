#pragma once

#include <string>
#include <vector>

#include "conformal/algebra.hpp"

namespace conformal {

// Human-oriented polynomial form: terms in ascending graded-lex order with
// signs folded into the joins, so (a - d) G_{-1} reads the way it is written
// on paper rather than "(-1)*d + a".
std::string ascending_str(const Polynomial &p);

// Coefficient wrapper for table lines: "(p)" for polynomials, "(p)/(q)" for
// genuine fractions.
std::string ascending_coeff_str(const RationalFunction &c);

// "[G_{-1} l G_0] = (1/2 - d) G_{-1}" — one bracket of the table, with the
// right-hand side's components in generator order and "0" for the zero
// bracket.
std::string bracket_line(const ConformalAlgebra &A, long i, long j);

// All bracket lines with both indices in [index_min, D].
std::vector<std::string> render_table(const ConformalAlgebra &A, long D);

// Rank of each graded piece of the table, grades index_min..D.  The graded
// families keep one free generator per grade, and the report makes that
// countable; a table that is not graded in this sense gets graded = false
// and no ranks.
struct RankReport {
  bool graded = false;
  long index_min = 0;
  std::vector<std::pair<long, long>> ranks;  // (grade, rank)
};

RankReport graded_ranks(const ConformalAlgebra &A, long D);

}  // namespace conformal
