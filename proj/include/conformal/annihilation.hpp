#pragma once

#include <map>
#include <string>
#include <vector>

#include "conformal/algebra.hpp"

namespace conformal {

// Basis element X_(n) of the mode Lie algebra attached to a conformal
// algebra: a generator together with a raw mode index n >= 0.  The doubly
// indexed presentation of the graded families shifts the mode down by one
// (display mode m = n - 1), which is what `display_mode`/`raw_mode` convert
// between.
struct ModeKey {
  GeneratorId gen;
  long mode = 0;  // raw, >= 0

  friend bool operator==(const ModeKey &a, const ModeKey &b) {
    return a.gen == b.gen && a.mode == b.mode;
  }
  friend bool operator<(const ModeKey &a, const ModeKey &b) {
    if (!(a.gen == b.gen)) return a.gen < b.gen;
    return a.mode < b.mode;
  }
  std::string str() const { return gen.str() + "_(" + std::to_string(mode) + ")"; }
};

inline long display_mode(long raw) { return raw - 1; }
inline long raw_mode(long display) { return display + 1; }

// Finite combination of modes; zero coefficients are never stored.
using AnnihilationSum = std::map<ModeKey, RationalFunction>;

void ann_add(AnnihilationSum &s, const ModeKey &k, const RationalFunction &c);
AnnihilationSum ann_scale(const AnnihilationSum &s, const RationalFunction &c);
AnnihilationSum ann_sub(AnnihilationSum a, const AnnihilationSum &b);
bool ann_is_zero(const AnnihilationSum &s);
std::string ann_str(const AnnihilationSum &s);

// (x)_(n) for an element with coefficients polynomial in d: expands each
// (d^t X)_(n) = (-1)^t n(n-1)...(n-t+1) X_(n-t); modes that would go
// negative carry a vanishing falling factorial, so they never appear.
AnnihilationSum modes_of(const Element &x, long n);

// [X_(m), Y_(n)] = sum_j C(m, j) (X_(j) Y)_(m+n-j), extended bilinearly.
AnnihilationSum ann_bracket(const ConformalAlgebra &A, const ModeKey &x, const ModeKey &y);
AnnihilationSum ann_bracket(const ConformalAlgebra &A, const AnnihilationSum &x,
                            const AnnihilationSum &y);

struct AnnReport {
  long compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares the mode bracket of the second family, written in the shifted
// double indexing G_{i,m} = (G_i)_(m+1), against the closed form
//   [G_{i,m}, G_{j,n}] = (j-i) a G_{i+j,m+n+1}
//                        + ((j+1)(m+1) - (n+1)(i+1)) G_{i+j,m+n}
// for all display indices i, j, m, n in [-1, bound].  `alpha` may be
// symbolic.
AnnReport check_block_closed_form(const RationalFunction &alpha, long bound,
                                  bool parallel = true);

// Antisymmetry and Jacobi for the mode bracket over all basis modes with
// generator index and raw mode bounded as given.
AnnReport check_lie_axioms(const ConformalAlgebra &A, long max_index, long max_mode,
                           bool parallel = true);

}  // namespace conformal
