#pragma once

#include <optional>
#include <string>

#include "conformal/algebra.hpp"

namespace conformal {

// The rank-one table [L l L] = (d + 2l) L.
ConformalAlgebra make_virasoro();

// The two graded families on generators G_i, i >= -1.  `alpha` may be the
// symbolic parameter (Polynomial of "a") or any rational constant.
//
// s = 2 uses the uniform rule
//   [G_i l G_j] = ((j - i) a + (i + j + 2) l + (i + 1) d) G_{i+j}
// for all i, j >= -1 (which vanishes identically at (-1, -1)); s = 1 keeps
// that rule for i, j >= 0 but replaces the bottom row by
//   [G_{-1} l G_{-1}] = 0,
//   [G_{-1} l G_0]    = (a - d) G_{-1},
//   [G_{-1} l G_j]    = (j + 1) G_{j-1}   (j >= 1),
// with the (i, -1) entries completed by skew-symmetry.
ConformalAlgebra make_B(int s, const RationalFunction &alpha);

// The filtered algebra on J^n, n >= 0, with
//   [J^m l J^n] = sum_{s<=m} C(m,s) (l+d)^s J^{m+n-s}
//               - sum_{s<=n} C(n,s) (-l)^s J^{m+n-s}.
ConformalAlgebra make_gc1();

// Control table with every bracket zero, on the same index set as the B
// families.
ConformalAlgebra make_abelian();

// Copy of A with the (i, j) table entry replaced; for witness tests.
ConformalAlgebra corrupt_entry(const ConformalAlgebra &A, long i, long j, const Element &e);

// Descriptor grammar: "vir" | "B1:alpha=<rational|sym>" |
// "B2:alpha=<rational|sym>" | "gc1" | "abelian".  Throws
// std::invalid_argument with a usage message on anything else.
ConformalAlgebra parse_algebra(const std::string &descriptor);

}  // namespace conformal
