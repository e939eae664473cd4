#include "conformal/annihilation.hpp"

#include <sstream>
#include <stdexcept>

#include "conformal/catalog.hpp"

namespace conformal {

void ann_add(AnnihilationSum &s, const ModeKey &k, const RationalFunction &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

AnnihilationSum ann_scale(const AnnihilationSum &s, const RationalFunction &c) {
  AnnihilationSum out;
  if (c.is_zero()) return out;
  for (const auto &[k, v] : s) ann_add(out, k, v * c);
  return out;
}

AnnihilationSum ann_sub(AnnihilationSum a, const AnnihilationSum &b) {
  for (const auto &[k, v] : b) ann_add(a, k, -v);
  return a;
}

bool ann_is_zero(const AnnihilationSum &s) { return s.empty(); }

std::string ann_str(const AnnihilationSum &s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, v] : s) {
    if (!first) os << " + ";
    first = false;
    os << coeff_str(v) << " " << k.str();
  }
  return os.str();
}

AnnihilationSum modes_of(const Element &x, long n) {
  if (n < 0) throw std::invalid_argument("modes_of: raw mode must be >= 0");
  const Variable d = vars::d();
  AnnihilationSum out;
  for (const auto &[g, c] : x.components()) {
    if (c.den().involves(d))
      throw std::domain_error("modes_of: coefficient denominator involves d");
    const Polynomial num = c.num();
    const RationalFunction den_inv = RationalFunction(Polynomial(1L), c.den());
    auto by_power = num.coefficients_in(d);
    for (long t = 0; t < static_cast<long>(by_power.size()); ++t) {
      if (by_power[t].is_zero()) continue;
      Rational f = falling_factorial(n, t);
      if (f.is_zero()) continue;
      if (t % 2 == 1) f = -f;
      ann_add(out, {g, n - t}, RationalFunction(by_power[t]) * den_inv * RationalFunction(f));
    }
  }
  return out;
}

AnnihilationSum ann_bracket(const ConformalAlgebra &A, const ModeKey &x, const ModeKey &y) {
  Element xe = Element::generator(x.gen);
  Element ye = Element::generator(y.gen);
  Element b = bracket(A, xe, ye, vars::lambda());
  long top = b.degree_in(vars::lambda());
  AnnihilationSum out;
  for (long j = 0; j <= top && j <= x.mode; ++j) {
    Element prod = b.coefficient_of(vars::lambda(), j).scaled(RationalFunction(factorial(j)));
    if (prod.is_zero()) continue;
    Rational c = binomial(x.mode, j);
    if (c.is_zero()) continue;
    AnnihilationSum part = modes_of(prod, x.mode + y.mode - j);
    for (const auto &[k, v] : part) ann_add(out, k, v * RationalFunction(c));
  }
  return out;
}

AnnihilationSum ann_bracket(const ConformalAlgebra &A, const AnnihilationSum &x,
                            const AnnihilationSum &y) {
  AnnihilationSum out;
  for (const auto &[kx, cx] : x)
    for (const auto &[ky, cy] : y) {
      AnnihilationSum part = ann_bracket(A, kx, ky);
      for (const auto &[k, v] : part) ann_add(out, k, v * cx * cy);
    }
  return out;
}

AnnReport check_block_closed_form(const RationalFunction &alpha, long bound, bool parallel) {
  ConformalAlgebra B2 = make_B(2, alpha);
  struct Quad {
    long i, m, j, n;
  };
  std::vector<Quad> quads;
  for (long i = -1; i <= bound; ++i)
    for (long m = -1; m <= bound; ++m)
      for (long j = -1; j <= bound; ++j)
        for (long n = -1; n <= bound; ++n) quads.push_back({i, m, j, n});

  std::vector<std::string> bad(quads.size());
  auto run = [&](size_t q) {
    const auto [i, m, j, n] = quads[q];
    AnnihilationSum lhs = ann_bracket(B2, ModeKey{{'G', i}, raw_mode(m)}, ModeKey{{'G', j}, raw_mode(n)});
    AnnihilationSum rhs;
    RationalFunction c1 = alpha * Rational(j - i);
    Rational c2 = Rational((j + 1) * (m + 1) - (n + 1) * (i + 1));
    long r1 = raw_mode(m + n + 1), r2 = raw_mode(m + n);
    if (r1 >= 0) ann_add(rhs, {{'G', i + j}, r1}, c1);
    else if (!c1.is_zero())
      bad[q] = "closed form needs a negative mode at " + std::to_string(i) + "," +
               std::to_string(m) + "," + std::to_string(j) + "," + std::to_string(n);
    if (r2 >= 0) ann_add(rhs, {{'G', i + j}, r2}, RationalFunction(c2));
    else if (!c2.is_zero())
      bad[q] = "closed form needs a negative mode at " + std::to_string(i) + "," +
               std::to_string(m) + "," + std::to_string(j) + "," + std::to_string(n);
    AnnihilationSum diff = ann_sub(lhs, rhs);
    if (!ann_is_zero(diff))
      bad[q] = "mismatch at (i,m,j,n)=(" + std::to_string(i) + "," + std::to_string(m) + "," +
               std::to_string(j) + "," + std::to_string(n) + "): " + ann_str(diff);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t q = 0; q < quads.size(); ++q) run(q);
  } else {
    for (size_t q = 0; q < quads.size(); ++q) run(q);
  }

  AnnReport rep;
  rep.compared = static_cast<long>(quads.size());
  for (auto &s : bad)
    if (!s.empty()) rep.mismatches.push_back(std::move(s));
  return rep;
}

AnnReport check_lie_axioms(const ConformalAlgebra &A, long max_index, long max_mode,
                           bool parallel) {
  std::vector<ModeKey> basis;
  for (long i : index_range(A, max_index))
    for (long n = 0; n <= max_mode; ++n) basis.push_back({{A.family, i}, n});
  const size_t B = basis.size();

  struct Job {
    size_t x, y, z;
    bool pair;  // antisymmetry job (z unused)
  };
  std::vector<Job> jobs;
  for (size_t x = 0; x < B; ++x)
    for (size_t y = 0; y < B; ++y) jobs.push_back({x, y, 0, true});
  for (size_t x = 0; x < B; ++x)
    for (size_t y = 0; y < B; ++y)
      for (size_t z = 0; z < B; ++z) jobs.push_back({x, y, z, false});

  std::vector<std::string> bad(jobs.size());
  auto run = [&](size_t q) {
    const Job &jb = jobs[q];
    AnnihilationSum X = {{basis[jb.x], RationalFunction(1L)}};
    AnnihilationSum Y = {{basis[jb.y], RationalFunction(1L)}};
    if (jb.pair) {
      AnnihilationSum r = ann_bracket(A, X, Y);
      for (const auto &[k, v] : ann_bracket(A, Y, X)) ann_add(r, k, v);
      if (!ann_is_zero(r))
        bad[q] = "antisymmetry fails at [" + basis[jb.x].str() + ", " + basis[jb.y].str() +
                 "]: " + ann_str(r);
    } else {
      AnnihilationSum Z = {{basis[jb.z], RationalFunction(1L)}};
      AnnihilationSum r = ann_bracket(A, ann_bracket(A, X, Y), Z);
      r = ann_sub(r, ann_bracket(A, X, ann_bracket(A, Y, Z)));
      for (const auto &[k, v] : ann_bracket(A, Y, ann_bracket(A, X, Z))) ann_add(r, k, v);
      if (!ann_is_zero(r))
        bad[q] = "Jacobi fails at (" + basis[jb.x].str() + ", " + basis[jb.y].str() + ", " +
                 basis[jb.z].str() + "): " + ann_str(r);
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t q = 0; q < jobs.size(); ++q) run(q);
  } else {
    for (size_t q = 0; q < jobs.size(); ++q) run(q);
  }

  AnnReport rep;
  rep.compared = static_cast<long>(jobs.size());
  for (auto &s : bad)
    if (!s.empty()) rep.mismatches.push_back(std::move(s));
  return rep;
}

}  // namespace conformal
