#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conformal/element.hpp"

namespace conformal {

// A conformal algebra presented by a bracket table on basis generators: the
// rule maps an index pair (i, j) to [X_i l X_j] as an Element whose
// coefficients are polynomials in the bracket parameter "l", the translation
// variable "d", and any symbolic constants of the family.  Everything else
// (brackets of arbitrary C[d]-combinations, other parameter names, nested
// brackets) is derived from the rule by the engine below.
struct ConformalAlgebra {
  std::string name;
  char family = 'G';
  long index_min = 0;
  // True when the index is a grading additive under the bracket (the rule
  // maps (i, j) into index i + j only).
  bool graded = true;
  // True when the table mentions the symbolic family parameter "a".
  bool symbolic_alpha = false;
  std::function<bool(long)> valid_index;
  std::function<Element(long, long)> rule;

  Element generator(long i) const { return Element::generator({family, i}); }
};

// [x_lam y] for arbitrary elements, by bilinear extension of the rule:
// contributions p(d) X_i, q(d) X_j give p(-lam) q(lam+d) [X_i lam X_j].
// The left argument's coefficients must not involve lam; the right
// argument's may (they ride through as formal parameters, which is what
// iterated equal-parameter brackets need).
Element bracket(const ConformalAlgebra &A, const Element &x, const Element &y, Variable lam);
inline Element bracket(const ConformalAlgebra &A, const Element &x, const Element &y) {
  return bracket(A, x, y, vars::lambda());
}

// n-th product x_(n) y = n! * (coefficient of lam^n in [x lam y]).
Element nth_product(const ConformalAlgebra &A, const Element &x, const Element &y, long n);

// [x_l y] + [y_{-l-d} x]; identically zero iff the pair satisfies
// skew-symmetry.
Element skew_residual(const ConformalAlgebra &A, const Element &x, const Element &y);

// [x_l [y_m z]] - [y_m [x_l z]] - [[x_l y]_{l+m} z]; identically zero iff
// the triple satisfies the Jacobi identity.
Element jacobi_residual(const ConformalAlgebra &A, const Element &x, const Element &y,
                        const Element &z);

// [d x_l y] + l [x_l y]  and  [x_l d y] - (l+d) [x_l y]; zero by
// construction of the engine, kept as an executable consistency check.
Element sesqui_left_residual(const ConformalAlgebra &A, const Element &x, const Element &y);
Element sesqui_right_residual(const ConformalAlgebra &A, const Element &x, const Element &y);

struct AxiomFailure {
  std::string kind;            // "skew", "jacobi", "sesqui-left", "sesqui-right"
  std::vector<long> indices;   // the generator indices involved
  std::string residual;        // nonzero residual, printed
};

struct AxiomReport {
  long pairs = 0;
  long triples = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Sweeps skew-symmetry and sesquilinearity over all generator pairs and the
// Jacobi identity over all generator triples with indices in [index_min,
// max_index].  `parallel` switches between the OpenMP sweep and the serial
// reference loop; both produce identical reports.
AxiomReport verify_axioms(const ConformalAlgebra &A, long max_index, bool parallel = true);

// The generator indices [index_min, max_index] as a vector.
std::vector<long> index_range(const ConformalAlgebra &A, long max_index);

}  // namespace conformal
