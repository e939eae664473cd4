#pragma once

#include <string>
#include <vector>

#include "conformal/element.hpp"

namespace conformal {

// Rank-one module data over the rank-one conformal algebra: either the free
// module on one generator v with
//   [L l (q(d) v)] = q(l + d) (offset + d + delta * l) v,   d v = d * v,
// or the one-dimensional module C v with
//   [L l v] = 0,   d v = offset * v   (offset plays the role of beta).
// delta and offset may be symbolic (polynomials in any constants) or
// rational.
struct VirModuleSpec {
  enum class Kind { Free, Trivial };
  Kind kind = Kind::Free;
  RationalFunction delta;
  RationalFunction offset;

  static VirModuleSpec free_module(const RationalFunction &delta, const RationalFunction &offset) {
    return {Kind::Free, delta, offset};
  }
  static VirModuleSpec trivial_module(const RationalFunction &beta) {
    return {Kind::Trivial, RationalFunction(), beta};
  }

  bool is_free() const { return kind == Kind::Free; }
  std::string str() const;  // "M(delta,offset)" or "C(beta)"
};

// Coefficient of v in [L lam (q(d) v)].  For the trivial module the
// coefficient q must be constant in d (the module is one-dimensional); the
// action is zero.
RationalFunction module_action(const VirModuleSpec &spec, const RationalFunction &q, Variable lam);

// Coefficient of v in d (q v): d * q for the free module, offset * q for the
// trivial one.
RationalFunction module_d_action(const VirModuleSpec &spec, const RationalFunction &q);

struct ModuleCheckFailure {
  std::string kind;      // "compatibility", "sesquilinearity"
  std::string probe;     // the coefficient the check ran on
  std::string residual;  // nonzero residual, printed
};

struct ModuleCheckReport {
  long checks = 0;
  std::vector<ModuleCheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies, symbolically in delta/offset, that the action satisfies the
// module axioms on the probe coefficients 1, d, ..., d^probe_degree (the
// checks are linear in the coefficient, so a basis suffices up to that
// degree):
//   [L l [L m (q v)]] - [L m [L l (q v)]] = (l - m) [L_{l+m} (q v)]
//   [L l (d (q v))] = (l + d) [L l (q v)]   (as coefficients of v)
ModuleCheckReport check_module_axioms(const VirModuleSpec &spec, long probe_degree = 5);

}  // namespace conformal
