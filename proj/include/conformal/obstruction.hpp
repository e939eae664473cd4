#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conformal/linalg.hpp"
#include "conformal/polynomial.hpp"

namespace conformal {

// One composition factor of a candidate finite module: either a free rank-one
// piece with weight Delta != 0 and shift beta (the degree-zero generator acts
// by beta + d + Delta*l), or a one-dimensional piece on which the bracket acts
// by zero and d by the scalar beta.
struct CompositionFactor {
  bool free = true;
  Rational Delta;  // meaningful only for free factors, where it must be nonzero
  Rational beta;

  std::string str() const;
};

CompositionFactor free_factor(const Rational &Delta, const Rational &beta);
CompositionFactor trivial_factor(const Rational &beta);

std::ostream &operator<<(std::ostream &os, const CompositionFactor &f);

// Bottom factor first.
struct CompositionSeries {
  std::vector<CompositionFactor> factors;
};

// "M:1/0;C:2;M:3/1" reads bottom-up as [free 1,0; trivial 2; free 3,1].
// Free factors take weight/shift separated by '/'; a fractional weight keeps
// its own slash and pushes the shift to the third slot ("M:1/2/0" is weight
// one half, shift zero), and a fractional shift then needs the weight written
// with an explicit denominator too ("M:2/1/-1/2").  Trivial factors take just
// the shift ("C:-2" or "C:1/3").
CompositionSeries parse_series(const std::string &text);

// The functional equation that a nonzero transition coefficient p_i(l, d)
// from the bottom factor into a top factor would have to satisfy, once the
// degree-zero generator is applied to both sides of
// "grade-i generator acting on the bottom generator = p_i times the top
// generator".  Four shapes arise from the ends of the pair:
//   1  free bottom, free top:
//        (bk + d + Dk*m) p(l, m+d)
//          = (i*a + (1+i)*m - l) p(l+m, d) + (b1 + l + d + D1*m) p(l, d)
//   2  trivial bottom, free top:
//        p(l, m+d) (bk + d + Dk*m) = (i*a + (1+i)*m - l) p(l+m, d)
//   3  free bottom, trivial top (p depends on l alone):
//        0 = (i*a + (1+i)*m - l) p(l+m) + (b1 + l + d + D1*m) p(l)
//   4  trivial bottom, trivial top:
//        0 = (i*a + (1+i)*m - l) p(l+m)
// Here l, m are the two bracket parameters and d stays formal.
struct ObstructionProblem {
  long i = 1;  // grade of the acting generator
  Rational alpha;
  int shape = 1;
  Rational Delta1, beta1;  // bottom data; Delta1 is unused for shapes 2 and 4
  Rational Deltak, betak;  // top data; both unused for shapes 3 and 4
  long m = 1;              // total-degree cap of the ansatz for p_i

  std::string str() const;
};

ObstructionProblem make_problem(long i, const Rational &alpha,
                                const CompositionFactor &bottom,
                                const CompositionFactor &top, long m);

// The equation above with p expanded as an undetermined-coefficient ansatz
// (two variables for shapes 1-2, one for shapes 3-4), flattened into a
// homogeneous linear system for the coefficients: one row per monomial in
// l, m, d.
struct ObstructionSystem {
  ObstructionProblem problem;
  std::vector<Variable> coeffs;              // ansatz coefficient unknowns
  std::vector<std::pair<long, long>> powers; // (l-power, d-power) per unknown
  Polynomial equation;                       // linear in the unknowns
  RationalLinearSystem system;
};

ObstructionSystem build_case_system(const ObstructionProblem &prob);

struct ActionCertificate {
  ObstructionProblem problem;
  bool trivial = false;  // only p_i = 0 satisfies the equation
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  // One nonzero solution p_i(l, d) per nullspace basis vector.
  std::vector<Polynomial> witnesses;
  // Every witness was substituted back into the raw equation and vanished.
  bool round_trip = false;
  std::vector<std::string> notes;
};

ActionCertificate certify_trivial_action(const ObstructionProblem &prob);

// Exact comparison of the two sides of the top-coefficient identity that a
// transition with deg p_i(l, 0) = m would force:
//   (i+1)(Dk+1)(i+1-Dk)^m   vs   (i+1 - D1*Dk)(i+1)^m.
// Sides are evaluated for every grade in [i_from, i_to]; `separated_from` is
// the least grade in the range with no agreement at or after it (within the
// checked range only — nothing is claimed beyond i_to).
struct DegreeBoundReport {
  Rational Delta1, Deltak;
  long m = 0;
  long i_from = 0, i_to = 0;
  std::vector<std::pair<Rational, Rational>> sides;  // per grade, in order
  std::vector<long> equal_at;
  std::optional<long> separated_from;
};

DegreeBoundReport degree_bound_check(const Rational &Delta1, const Rational &Deltak,
                                     long m, long i_from, long i_to);

// Least grade i0 in [1, i_max] such that certify_trivial_action holds for
// every grade in [i0, i0 + window]; nullopt when no such grade exists.
std::optional<long> least_stable_grade(const Rational &alpha,
                                       const CompositionFactor &bottom,
                                       const CompositionFactor &top, long m,
                                       long window, long i_max,
                                       bool parallel = false);

struct PairFailure {
  long i = 0;
  int shape = 0;
  std::size_t bottom_index = 0, top_index = 0;  // positions from the bottom
  Polynomial witness;

  std::string str() const;
};

struct NoFiniteModuleCertificate {
  CompositionSeries series;
  Rational alpha;
  long i0 = 0, window = 0, m = 0;
  long pairs = 0;      // ordered factor pairs examined per grade
  long instances = 0;  // certified subproblems
  bool certified = false;
  std::vector<PairFailure> failures;
  std::vector<std::string> notes;
};

// Certifies that no composition factor of the given series can receive a
// nonzero transition from any factor below, above, or beside it, for any
// grade in [i0, i0 + window].  Every ordered pair of factors is examined:
// walking up the series, each factor in turn plays the lowest generator not
// yet annihilated, and the image could land on any factor, so all pairs
// arise.  The claim covers the stated window only.
NoFiniteModuleCertificate no_finite_module_certificate(
    const CompositionSeries &series, const Rational &alpha, long i0, long m,
    long window = 20, bool parallel = true);

}  // namespace conformal
