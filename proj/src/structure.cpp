#include "conformal/structure.hpp"

#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "conformal/linalg.hpp"

namespace conformal {

bool GradedIdealState::full_at(long i) const {
  auto it = gens.find(i);
  return it != gens.end() && it->second.is_constant() && !it->second.is_zero();
}

bool GradedIdealState::all_full() const {
  for (long i = index_min; i <= grade_cap; ++i)
    if (!full_at(i)) return false;
  return true;
}

std::vector<long> GradedIdealState::not_full() const {
  std::vector<long> out;
  for (long i = index_min; i <= grade_cap; ++i)
    if (!full_at(i)) out.push_back(i);
  return out;
}

namespace {

// Coefficients of the element reduced modulo the per-grade generators; the
// subtraction stays inside the attained set because each generator is
// itself an attained single-grade element.
Element reduce_element(const Element &e, const std::map<long, Polynomial> &gens) {
  const Variable d = vars::d();
  Element out;
  for (const auto &[g, c] : e.components()) {
    Polynomial p = c.expect_polynomial("ideal closure coefficient");
    auto it = gens.find(g.index);
    if (it != gens.end()) {
      if (it->second.is_constant() && !it->second.is_zero()) continue;  // full grade
      p = univariate_divmod(p, it->second, d).second;
    }
    if (!p.is_zero()) out.add(g, RationalFunction(p));
  }
  return out;
}

std::string poly_str(const Polynomial &p) { return p.str(); }

}  // namespace

GradedIdealState ideal_closure(const ConformalAlgebra &A, const std::vector<Element> &seeds,
                               long D, size_t max_steps) {
  if (A.symbolic_alpha)
    throw std::invalid_argument(
        "ideal_closure: specialize the family parameter to a rational value first");
  const Variable d = vars::d(), l = vars::lambda();

  GradedIdealState st;
  st.grade_cap = D;
  st.index_min = A.index_min;

  std::deque<Element> work;
  std::vector<Element> parked;            // multi-grade leftovers, re-reduced on change
  std::set<std::string> expanded;         // canonical strings already bracket-expanded
  const std::vector<long> gen_indices = index_range(A, D);

  auto in_window = [&](const Element &e) {
    for (const auto &[g, c] : e.components())
      if (g.index < A.index_min || g.index > D) return false;
    return true;
  };

  // One round of bracket expansion: all coefficient extractions of
  // [G_k l e], k over the window.
  auto expand = [&](const Element &e, const std::string &why) {
    std::string key = e.str();
    if (!expanded.insert(key).second) return;
    for (long k : gen_indices) {
      Element b = bracket(A, A.generator(k), e, l);
      if (b.is_zero()) continue;
      long top = b.degree_in(l);
      for (long t = 0; t <= top; ++t) {
        Element coeff = b.coefficient_of(l, t);
        if (coeff.is_zero() || !in_window(coeff)) continue;
        work.push_back(coeff);
      }
      st.audit.push_back("bracket G_" + std::to_string(k) + " with " + why);
    }
  };

  for (const Element &s : seeds) {
    for (const auto &[g, c] : s.components()) {
      c.expect_polynomial("ideal closure seed");
      if (g.family != A.family)
        throw std::invalid_argument("ideal_closure: seed generator not in the algebra");
    }
    if (!in_window(s))
      throw std::invalid_argument("ideal_closure: seed outside the tracked grades");
    work.push_back(s);
  }

  while (!work.empty()) {
    if (++st.steps > static_cast<long>(max_steps)) {
      st.step_limit_hit = true;
      break;
    }
    Element e = reduce_element(work.front(), st.gens);
    work.pop_front();
    if (e.is_zero()) continue;

    if (e.component_count() == 1) {
      const auto &[g, c] = *e.components().begin();
      Polynomial p = c.expect_polynomial("ideal closure coefficient");
      auto it = st.gens.find(g.index);
      Polynomial next =
          it == st.gens.end() ? p / p.leading_coefficient() : univariate_gcd(it->second, p, d);
      if (it != st.gens.end() && next == it->second) continue;
      st.gens[g.index] = next;
      st.audit.push_back("grade " + std::to_string(g.index) + " ideal -> (" + poly_str(next) +
                         ")");
      Element gen_elem = Element::term(g, RationalFunction(next));
      expand(gen_elem, "grade-" + std::to_string(g.index) + " generator");
      // Ideals changed: parked elements may now reduce further.
      for (const Element &pe : parked) work.push_back(pe);
      parked.clear();
    } else {
      expand(e, "a multi-grade element");
      parked.push_back(e);
    }
  }
  return st;
}

SimplicityCertificate is_simple_truncated(const ConformalAlgebra &A, long D, int random_seeds,
                                          unsigned rng_seed) {
  SimplicityCertificate cert;
  cert.algebra = A.name;
  cert.D = D;

  std::vector<Element> seeds;
  for (long j : index_range(A, D)) seeds.push_back(A.generator(j));

  std::mt19937 rng(rng_seed);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), pick_cnt(1, 2);
  std::uniform_int_distribution<long> pick_grade(A.index_min, D);
  const Polynomial dp = Polynomial::variable(vars::d());
  for (int r = 0; r < random_seeds; ++r) {
    Element e;
    while (e.is_zero()) {
      e = Element();
      int parts = pick_cnt(rng);
      for (int t = 0; t < parts; ++t) {
        Polynomial p;
        int top = deg(rng);
        for (int k = 0; k <= top; ++k) p += dp.pow(k) * Rational(coef(rng));
        e += Element::term({A.family, pick_grade(rng)}, RationalFunction(p));
      }
    }
    seeds.push_back(e);
  }

  cert.certified = true;
  cert.runs.resize(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < seeds.size(); ++i) {
    GradedIdealState st = ideal_closure(A, {seeds[i]}, D);
    SimplicityCertificate::SeedRun run;
    run.seed = seeds[i].str();
    run.full = st.all_full();
    run.steps = st.steps;
    run.not_full_grades = st.not_full();
    for (long g : run.not_full_grades) {
      auto it = st.gens.find(g);
      run.stalled_generators[g] = it == st.gens.end() ? "0" : it->second.str();
    }
    cert.runs[i] = std::move(run);
  }
  for (const auto &r : cert.runs)
    if (!r.full) cert.certified = false;
  return cert;
}

bool NilpotencyResult::all_vanished() const {
  for (const auto &o : outcomes)
    if (o.vanished_at < 0) return false;
  return true;
}

std::string NilpotencyResult::witness() const {
  for (const auto &o : outcomes)
    if (o.vanished_at < 0) return o.probe;
  return "";
}

NilpotencyResult locally_nilpotent_test(const ConformalAlgebra &A, const Element &x,
                                        const std::vector<Element> &probes, long max_power,
                                        bool fresh_parameters) {
  if (max_power < 1) throw std::invalid_argument("locally_nilpotent_test: max_power must be >= 1");
  NilpotencyResult res;
  res.cap = max_power;
  res.fresh_parameters = fresh_parameters;
  res.outcomes.resize(probes.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < probes.size(); ++i) {
    NilpotencyResult::ProbeOutcome out;
    out.probe = probes[i].str();
    Element y = probes[i];
    for (long n = 1; n <= max_power; ++n) {
      Variable lam =
          fresh_parameters ? Variable("lp" + std::to_string(n)) : vars::lambda();
      y = bracket(A, x, y, lam);
      if (y.is_zero()) {
        out.vanished_at = n;
        break;
      }
    }
    res.outcomes[i] = std::move(out);
  }
  return res;
}

bool IsoRigidityResult::contains_identity() const {
  // a = 1 lies in the span iff some basis vector is a nonzero constant (the
  // solution space is computed from a homogeneous system, so constants in
  // the span show up as constant basis vectors after elimination).
  for (const auto &p : a_basis)
    if (p.is_constant() && !p.is_zero()) return true;
  return false;
}

IsoRigidityResult iso_rigidity_solve(int s, const Rational &alpha1, const Rational &alpha2,
                                     long degree_bound) {
  if (s != 1 && s != 2) throw std::invalid_argument("iso_rigidity_solve: s must be 1 or 2");
  if (degree_bound < 0) throw std::invalid_argument("iso_rigidity_solve: negative degree bound");
  IsoRigidityResult res;
  res.s = s;
  res.alpha1 = alpha1;
  res.alpha2 = alpha2;
  res.degree_bound = degree_bound;

  const Variable d = vars::d(), l = vars::lambda();
  const Polynomial dp = Polynomial::variable(d), lp = Polynomial::variable(l);

  // ---- the b0 equation: b0(-l) b0(l+d) - b0(d) = 0, quadratic in the
  // ansatz coefficients.  Degree descent from the top: with every higher
  // coefficient already zero, the l^(2k) row of the equation is exactly
  // (+-) c_k^2, forcing c_k = 0; at the bottom c_0^2 = c_0.
  std::vector<Variable> bc;
  Polynomial b0;
  for (long k = 0; k <= degree_bound; ++k) {
    Variable v("bc" + std::to_string(k));
    bc.push_back(v);
    b0 += Polynomial::variable(v) * dp.pow(k);
  }
  Polynomial E = b0.substitute(d, -lp) * b0.substitute(d, lp + dp) - b0;
  for (long k = degree_bound; k >= 1; --k) {
    Polynomial row = E.coefficient_of(l, 2 * k);
    Polynomial expect = Polynomial::variable(bc[k]) * Polynomial::variable(bc[k]);
    if (k % 2 == 1) expect = -expect;
    if (row != expect)
      throw std::logic_error("iso_rigidity_solve: unexpected top row in the degree descent");
    E = E.substitute(bc[k], Polynomial());
    res.notes.push_back("degree " + std::to_string(k) + " coefficient squares to zero");
  }
  Polynomial c0 = Polynomial::variable(bc[0]);
  if (E != c0 * c0 - c0)
    throw std::logic_error("iso_rigidity_solve: constant part is not b0^2 - b0");
  res.notes.push_back("b0 is constant with b0^2 = b0; nonzero forces b0 = 1");
  res.b0_solutions = {Polynomial(1L)};

  // ---- the a equation at b0 = 1, linear in the ansatz coefficients.
  std::vector<Variable> ac;
  Polynomial a;
  for (long k = 0; k <= degree_bound; ++k) {
    Variable v("pa" + std::to_string(k));
    ac.push_back(v);
    a += Polynomial::variable(v) * dp.pow(k);
  }
  const Polynomial a1(alpha1), a2(alpha2);
  Polynomial eq;
  if (s == 1)
    eq = (a2 - dp) * a.substitute(d, -lp) - (a1 - dp) * a;
  else
    eq = (a2 + lp) * a.substitute(d, -lp) - (a1 + lp) * a;

  auto sys = linear_system_rational({eq}, ac);
  auto sol = solve_linear(sys.M, sys.rhs);
  if (!sol.consistent)
    throw std::logic_error("iso_rigidity_solve: homogeneous system reported inconsistent");
  for (const auto &vec : sol.nullspace) {
    Polynomial cand;
    for (size_t k = 0; k < vec.size(); ++k) cand += dp.pow(static_cast<long>(k)) * vec[k];
    if (!cand.is_zero()) res.a_basis.push_back(cand);
  }
  return res;
}

}  // namespace conformal
