#include "conformal/algebra.hpp"

#include <omp.h>

#include <stdexcept>

namespace conformal {

namespace {
// Temporaries for the skew/Jacobi engines; distinct from the reserved
// parameter names so user data never collides with them.
Variable skew_tmp() { return Variable("skp"); }
Variable jac_tmp() { return Variable("jcp"); }
}  // namespace

Element bracket(const ConformalAlgebra &A, const Element &x, const Element &y, Variable lam) {
  const Variable l = vars::lambda(), d = vars::d();
  const Polynomial lam_p = Polynomial::variable(lam);
  const Polynomial neg_lam = -lam_p;
  const Polynomial lam_plus_d = lam_p + Polynomial::variable(d);

  Element out;
  for (const auto &[gx, p] : x.components()) {
    if (p.involves(lam))
      throw std::invalid_argument(
          "bracket: left coefficient involves the bracket parameter " + lam.name());
    if (gx.family != A.family)
      throw std::invalid_argument("bracket: generator " + gx.str() + " not in " + A.name);
    const RationalFunction p_at = p.substitute(d, neg_lam);
    for (const auto &[gy, q] : y.components()) {
      if (gy.family != A.family)
        throw std::invalid_argument("bracket: generator " + gy.str() + " not in " + A.name);
      Element base = A.rule(gx.index, gy.index);
      if (base.is_zero()) continue;
      if (lam != l) base = base.substitute(l, lam_p);
      const RationalFunction factor = p_at * q.substitute(d, lam_plus_d);
      out += base.scaled(factor);
    }
  }
  return out;
}

Element nth_product(const ConformalAlgebra &A, const Element &x, const Element &y, long n) {
  if (n < 0) throw std::invalid_argument("nth_product: n must be >= 0");
  Element b = bracket(A, x, y, vars::lambda());
  return b.coefficient_of(vars::lambda(), n).scaled(RationalFunction(factorial(n)));
}

Element skew_residual(const ConformalAlgebra &A, const Element &x, const Element &y) {
  const Variable l = vars::lambda(), d = vars::d();
  const Variable t = skew_tmp();
  Element lhs = bracket(A, x, y, l);
  Element rhs = bracket(A, y, x, t);
  rhs = rhs.substitute(t, -Polynomial::variable(l) - Polynomial::variable(d));
  return lhs + rhs;
}

Element jacobi_residual(const ConformalAlgebra &A, const Element &x, const Element &y,
                        const Element &z) {
  const Variable l = vars::lambda(), m = vars::mu();
  const Variable t = jac_tmp();
  Element t1 = bracket(A, x, bracket(A, y, z, m), l);
  Element t2 = bracket(A, y, bracket(A, x, z, l), m);
  Element t3 = bracket(A, bracket(A, x, y, l), z, t);
  t3 = t3.substitute(t, Polynomial::variable(l) + Polynomial::variable(m));
  return t1 - t2 - t3;
}

Element sesqui_left_residual(const ConformalAlgebra &A, const Element &x, const Element &y) {
  const Polynomial d = Polynomial::variable(vars::d());
  const Polynomial l = Polynomial::variable(vars::lambda());
  Element dx = x.scaled(RationalFunction(d));
  return bracket(A, dx, y) + bracket(A, x, y).scaled(RationalFunction(l));
}

Element sesqui_right_residual(const ConformalAlgebra &A, const Element &x, const Element &y) {
  const Polynomial d = Polynomial::variable(vars::d());
  const Polynomial l = Polynomial::variable(vars::lambda());
  Element dy = y.scaled(RationalFunction(d));
  return bracket(A, x, dy) - bracket(A, x, y).scaled(RationalFunction(l + d));
}

std::vector<long> index_range(const ConformalAlgebra &A, long max_index) {
  std::vector<long> out;
  for (long i = A.index_min; i <= max_index; ++i)
    if (!A.valid_index || A.valid_index(i)) out.push_back(i);
  return out;
}

AxiomReport verify_axioms(const ConformalAlgebra &A, long max_index, bool parallel) {
  const std::vector<long> idx = index_range(A, max_index);
  const long n = static_cast<long>(idx.size());

  struct Job {
    std::string kind;
    std::vector<long> indices;
  };
  std::vector<Job> jobs;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      jobs.push_back({"skew", {idx[a], idx[b]}});
      jobs.push_back({"sesqui-left", {idx[a], idx[b]}});
      jobs.push_back({"sesqui-right", {idx[a], idx[b]}});
    }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) jobs.push_back({"jacobi", {idx[a], idx[b], idx[c]}});

  std::vector<std::string> residuals(jobs.size());
  auto run_job = [&](size_t k) {
    const Job &j = jobs[k];
    Element x = A.generator(j.indices[0]);
    Element y = A.generator(j.indices[1]);
    Element r;
    if (j.kind == "skew")
      r = skew_residual(A, x, y);
    else if (j.kind == "sesqui-left")
      r = sesqui_left_residual(A, x, y);
    else if (j.kind == "sesqui-right")
      r = sesqui_right_residual(A, x, y);
    else
      r = jacobi_residual(A, x, y, A.generator(j.indices[2]));
    residuals[k] = r.is_zero() ? std::string() : r.str();
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t k = 0; k < jobs.size(); ++k) run_job(k);
  } else {
    for (size_t k = 0; k < jobs.size(); ++k) run_job(k);
  }

  AxiomReport rep;
  rep.pairs = n * n;
  rep.triples = n * n * n;
  for (size_t k = 0; k < jobs.size(); ++k)
    if (!residuals[k].empty()) rep.failures.push_back({jobs[k].kind, jobs[k].indices, residuals[k]});
  return rep;
}

}  // namespace conformal
