#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conformal/catalog.hpp"
#include "conformal/linalg.hpp"
#include "conformal/rational_function.hpp"

namespace conformal {

// Reconstruction of every Z-graded algebra C[d]G_{-1} + C[d]G_0 + C[d]G_1 + ...
// whose degree-zero row acts by [G_0 l G_j] = (a_j + d + D_j l) G_j and whose
// lowering brackets [G_{-1} l G_j] never vanish for j >= 1.  Starting from the
// skew and Jacobi constraints alone, the machinery below derives the grading
// constants, solves for the seed bracket [G_1 l G_{-1}], propagates the whole
// multiplication table degree by degree, strips the gauge freedom, and matches
// the result against the built-in families.  Every step is an exact linear
// solve or an exact division; dead branches return a concrete contradiction
// witness instead of a table.

// ---- grading constants --------------------------------------------------

struct GradingDerivation {
  // a_j for each degree j in the window, expressed in terms of a_1 (symbolic
  // "a" when no numeric value is supplied).
  std::map<long, RationalFunction> alphas;
  Rational delta0;  // the forced weight of G_0 acting on itself
  // Pairs (i, j) whose bracket supplied a forcing equation.
  std::vector<std::pair<long, long>> forced_pairs;
  std::vector<std::string> notes;
};

// Solves the linear system the degree-zero action places on the constants
// a_j: a_0 = 0 and a_{j-1} - a_{-1} = a_j for j >= 1, giving a_j = j * a_1,
// and pins delta_0 = 2 from skew symmetry of [G_0 l G_0].  `window` bounds
// the degrees covered; `alpha1` fixes a numeric a_1 (otherwise symbolic).
GradingDerivation derive_grading_constants(const std::optional<Rational> &alpha1,
                                           long window);

// ---- seed analysis ------------------------------------------------------

enum class CaseTag { Case1, Case2, Case3 };

std::string case_tag_str(CaseTag t);

// One consistent solution of the seed constraints: the weights of G_{-1} and
// G_1, the value of a_1, and the bracket [G_1 l G_{-1}] up to the gauge
// constant c1.
struct SeedCase {
  CaseTag tag;
  std::optional<Rational> alpha1;  // nullopt = keep a_1 symbolic
  Rational delta_m1;               // weight of G_{-1}
  Rational delta_1;                // weight of G_1
  RationalFunction g_1m1;          // [G_1 l G_{-1}] coefficient, gauge c1
  std::vector<std::string> derivation;  // human-readable step log
};

// Outcome of one of the four seed selectors (a_1 zero / nonzero crossed with
// the constant term of [G_1 l G_{-1}] on the diagonal zero / nonzero).
struct BranchReport {
  std::string selector;
  bool applicable = true;  // false when a numeric a_1 rules the selector out
  std::vector<SeedCase> cases;
  std::vector<std::string> contradictions;  // witnesses for dead subbranches
};

// Solves the one-variable compatibility identities satisfied by
// f(p) = [G_1 p G_{-1}] restricted to d = 0, modelled as a polynomial ansatz
// of the given degree, then reconstructs the full two-variable bracket.  Each
// subbranch is an exact staged linear solve; impossible subbranches yield a
// contradiction witness naming the offending rows.
BranchReport solve_g1_minus1(const std::optional<Rational> &alpha1,
                             bool alpha_nonzero, bool a0_nonzero,
                             long ansatz_degree = 6);

// ---- table propagation --------------------------------------------------

struct ClassificationState {
  std::optional<Rational> alpha1;
  CaseTag tag = CaseTag::Case1;
  long D = 0;  // verification window: indices -1..D

  std::map<long, Rational> Delta;               // weights D_j
  std::map<long, RationalFunction> alphas;      // grading constants a_j
  // g[(i, j)] is the coefficient polynomial of [G_i l G_j] in front of
  // G_{i+j}, as a function of l and d (gauge constants may appear).
  std::map<std::pair<long, long>, RationalFunction> g;

  std::vector<std::string> gauge;       // gauge constants introduced, in order
  std::vector<std::string> notes;       // derivation log
  std::vector<std::string> violations;  // failed identity instances
  bool contradiction = false;
  long instances_checked = 0;  // identity instances verified exactly

  bool has_entry(long i, long j) const;
  const RationalFunction &entry(long i, long j) const;  // throws if absent
};

// Extends a seed to the full table on degrees -1..D (internally further, so
// every verification instance in the window closes), introducing one fresh
// gauge constant per new lowering bracket.  Afterwards every stored bracket
// is checked against all instances of the action, descent, weight, and
// row-extension identities with indices in the window, plus skew symmetry;
// failures are recorded in `violations` and flag `contradiction`.
ClassificationState propagate(const SeedCase &seed, long D,
                              bool parallel_sweep = true);

// Rescales the generators so that [G_{-1} l G_j] becomes (j+1), (j+1) l, or
// (j+1)(a_1 + l) according to the case tag, eliminating all gauge constants.
ClassificationState normalize(const ClassificationState &st);

// ---- identification -----------------------------------------------------

struct IdentifyResult {
  bool matched = false;
  int s = 0;  // matching family parameter for make_B
  std::optional<Rational> alpha1;
  std::string tag;                 // e.g. "B(2,a)" or "B(1,1/2)"
  std::vector<std::string> diffs;  // entry-by-entry mismatches, if any
};

// Compares a normalized table against make_B(s, alpha) entry by entry on the
// window -1..D.
IdentifyResult identify(const ClassificationState &normalized, long D);

// ---- full pipeline ------------------------------------------------------

struct CaseRun {
  std::string branch;  // selector that produced the seed
  SeedCase seed;
  ClassificationState propagated;
  ClassificationState normalized;
  IdentifyResult id;
  bool ok = false;
};

struct ClassifyReport {
  std::optional<Rational> alpha1;
  long D = 0;
  std::vector<BranchReport> branches;
  std::vector<CaseRun> runs;
  std::vector<std::string> outcomes;        // sorted identified family tags
  std::vector<std::string> contradictions;  // dead-branch witnesses
  std::vector<std::string> notes;           // e.g. subsumed specializations
  bool complete = false;  // every surviving seed propagated and matched
};

// Runs every applicable seed selector, propagates each surviving case to
// degree D, normalizes, and identifies.  `only` restricts the pipeline runs
// to a single case tag.
ClassifyReport classify_all(const std::optional<Rational> &alpha1, long D,
                            const std::optional<CaseTag> &only = std::nullopt);

}  // namespace conformal
