#include "conformal/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conformal {

namespace {

Polynomial var(Variable v) { return Polynomial::variable(v); }

Variable coeff_var(long a, long b) {
  return Variable("q" + std::to_string(a) + "_" + std::to_string(b));
}

// Interns the whole coefficient alphabet up front so parallel regions never
// race to extend the table.
void preintern_coeffs(long m) {
  for (long a = 0; a <= m; ++a)
    for (long b = 0; a + b <= m; ++b) coeff_var(a, b);
}

void check_problem(const ObstructionProblem &prob) {
  if (prob.shape < 1 || prob.shape > 4)
    throw std::invalid_argument("obstruction: shape must be 1, 2, 3 or 4");
  if (prob.i < 1)
    throw std::invalid_argument("obstruction: the acting grade must be positive");
  if (prob.m < 0)
    throw std::invalid_argument("obstruction: negative ansatz degree");
  if ((prob.shape == 1 || prob.shape == 3) && prob.Delta1.is_zero())
    throw std::invalid_argument("obstruction: a free bottom factor needs a nonzero weight");
  if ((prob.shape == 1 || prob.shape == 2) && prob.Deltak.is_zero())
    throw std::invalid_argument("obstruction: a free top factor needs a nonzero weight");
}

Rational parse_rational(const std::string &s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  try {
    return Rational::parse(t);
  } catch (const std::exception &) {
    throw std::invalid_argument("series: cannot read the number '" + s + "'");
  }
}

Rational parse_fraction(const std::string &num, const std::string &den) {
  const Rational d = parse_rational(den);
  if (d.is_zero())
    throw std::invalid_argument("series: zero denominator in '" + num + "/" + den + "'");
  return parse_rational(num) / d;
}

}  // namespace

CompositionFactor free_factor(const Rational &Delta, const Rational &beta) {
  if (Delta.is_zero())
    throw std::invalid_argument("free composition factors need a nonzero weight");
  CompositionFactor f;
  f.free = true;
  f.Delta = Delta;
  f.beta = beta;
  return f;
}

CompositionFactor trivial_factor(const Rational &beta) {
  CompositionFactor f;
  f.free = false;
  f.beta = beta;
  return f;
}

std::string CompositionFactor::str() const {
  if (free) return "M_{" + Delta.str() + "," + beta.str() + "}";
  return "C_{" + beta.str() + "}";
}

std::ostream &operator<<(std::ostream &os, const CompositionFactor &f) {
  return os << f.str();
}

CompositionSeries parse_series(const std::string &text) {
  CompositionSeries out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("series: empty factor in '" + text + "'");
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    if (tok.size() < 3 || tok[1] != ':')
      throw std::invalid_argument("series: factor '" + tok + "' is not of the form M:... or C:...");
    char kind = tok[0];
    std::string rest = tok.substr(2);
    std::vector<std::string> parts;
    std::stringstream ps(rest);
    std::string p;
    while (std::getline(ps, p, '/')) parts.push_back(p);
    if (kind == 'M') {
      if (parts.size() == 2)
        out.factors.push_back(free_factor(parse_rational(parts[0]), parse_rational(parts[1])));
      else if (parts.size() == 3)
        out.factors.push_back(free_factor(parse_fraction(parts[0], parts[1]),
                                          parse_rational(parts[2])));
      else if (parts.size() == 4)
        out.factors.push_back(free_factor(parse_fraction(parts[0], parts[1]),
                                          parse_fraction(parts[2], parts[3])));
      else
        throw std::invalid_argument("series: 'M:" + rest + "' needs weight/shift");
    } else if (kind == 'C') {
      if (parts.size() == 1)
        out.factors.push_back(trivial_factor(parse_rational(parts[0])));
      else if (parts.size() == 2)
        out.factors.push_back(trivial_factor(parse_fraction(parts[0], parts[1])));
      else
        throw std::invalid_argument("series: 'C:" + rest + "' needs a single shift");
    } else {
      throw std::invalid_argument("series: unknown factor kind '" + std::string(1, kind) + "'");
    }
  }
  if (out.factors.empty())
    throw std::invalid_argument("series: no factors in '" + text + "'");
  return out;
}

std::string ObstructionProblem::str() const {
  std::ostringstream os;
  os << "grade " << i << ", a = " << alpha.str() << ", shape " << shape << " (";
  switch (shape) {
    case 1: os << "free bottom M_{" << Delta1 << "," << beta1 << "}, free top M_{" << Deltak << "," << betak << "}"; break;
    case 2: os << "trivial bottom C_{" << beta1 << "}, free top M_{" << Deltak << "," << betak << "}"; break;
    case 3: os << "free bottom M_{" << Delta1 << "," << beta1 << "}, trivial top C_{" << betak << "}"; break;
    default: os << "trivial bottom C_{" << beta1 << "}, trivial top C_{" << betak << "}"; break;
  }
  os << "), ansatz degree <= " << m;
  return os.str();
}

ObstructionProblem make_problem(long i, const Rational &alpha,
                                const CompositionFactor &bottom,
                                const CompositionFactor &top, long m) {
  ObstructionProblem prob;
  prob.i = i;
  prob.alpha = alpha;
  prob.shape = bottom.free ? (top.free ? 1 : 3) : (top.free ? 2 : 4);
  prob.Delta1 = bottom.Delta;
  prob.beta1 = bottom.beta;
  prob.Deltak = top.Delta;
  prob.betak = top.beta;
  prob.m = m;
  check_problem(prob);
  return prob;
}

ObstructionSystem build_case_system(const ObstructionProblem &prob) {
  check_problem(prob);
  ObstructionSystem out;
  out.problem = prob;

  const bool two_vars = prob.shape <= 2;
  const Polynomial l = var(vars::lambda());
  const Polynomial mu = var(vars::mu());
  const Polynomial d = var(vars::d());

  Polynomial P;
  for (long a = 0; a <= prob.m; ++a) {
    const long bmax = two_vars ? prob.m - a : 0;
    for (long b = 0; b <= bmax; ++b) {
      Variable c = coeff_var(a, b);
      out.coeffs.push_back(c);
      out.powers.emplace_back(a, b);
      Monomial mono = Monomial::var(c);
      if (a > 0) mono = mono * Monomial::var(vars::lambda(), a);
      if (b > 0) mono = mono * Monomial::var(vars::d(), b);
      P = P + Polynomial::monomial(mono, Rational(1));
    }
  }

  const Polynomial shifted_d = P.substitute(vars::d(), mu + d);       // p(l, m+d)
  const Polynomial shifted_l = P.substitute(vars::lambda(), l + mu);  // p(l+m, d)

  const Polynomial act = Polynomial(prob.alpha * Rational(prob.i)) +
                         Polynomial(Rational(prob.i + 1)) * mu - l;
  const Polynomial top = Polynomial(prob.betak) + d + Polynomial(prob.Deltak) * mu;
  const Polynomial bottom = Polynomial(prob.beta1) + l + d + Polynomial(prob.Delta1) * mu;

  switch (prob.shape) {
    case 1: out.equation = top * shifted_d - act * shifted_l - bottom * P; break;
    case 2: out.equation = shifted_d * top - act * shifted_l; break;
    case 3: out.equation = act * shifted_l + bottom * P; break;
    default: out.equation = act * shifted_l; break;
  }

  out.system = linear_system_rational({out.equation}, out.coeffs);
  return out;
}

ActionCertificate certify_trivial_action(const ObstructionProblem &prob) {
  ObstructionSystem sys = build_case_system(prob);

  std::vector<std::vector<Rational>> M = sys.system.M;
  std::vector<Rational> rhs = sys.system.rhs;
  LinearSolution<Rational> sol = solve_linear(std::move(M), std::move(rhs));

  ActionCertificate cert;
  cert.problem = prob;
  cert.unknowns = sys.coeffs.size();
  cert.rank = sol.rank;
  cert.nullity = sol.nullspace.size();
  cert.trivial = sol.nullspace.empty();
  cert.round_trip = true;

  for (const auto &vec : sol.nullspace) {
    Polynomial witness;
    std::map<Variable, Polynomial> bind;
    for (size_t j = 0; j < sys.coeffs.size(); ++j) {
      bind.emplace(sys.coeffs[j], Polynomial(vec[j]));
      if (vec[j].is_zero()) continue;
      Monomial mono;
      if (sys.powers[j].first > 0) mono = mono * Monomial::var(vars::lambda(), sys.powers[j].first);
      if (sys.powers[j].second > 0) mono = mono * Monomial::var(vars::d(), sys.powers[j].second);
      witness = witness + Polynomial::monomial(mono, vec[j]);
    }
    if (witness.is_zero() || !sys.equation.substitute(bind).is_zero())
      cert.round_trip = false;
    cert.witnesses.push_back(witness);
  }

  std::ostringstream note;
  note << prob.str() << ": " << cert.unknowns << " ansatz coefficients, rank "
       << cert.rank << ", solution space of dimension " << cert.nullity;
  cert.notes.push_back(note.str());
  if (!cert.trivial)
    cert.notes.push_back("a nonzero transition survives at this grade; see the witnesses");
  return cert;
}

DegreeBoundReport degree_bound_check(const Rational &Delta1, const Rational &Deltak,
                                     long m, long i_from, long i_to) {
  if (Delta1.is_zero() || Deltak.is_zero())
    throw std::invalid_argument("degree_bound_check: both weights must be nonzero");
  if (m < 2)
    throw std::invalid_argument("degree_bound_check: the top-coefficient argument needs degree >= 2");
  if (i_from < 1 || i_to < i_from)
    throw std::invalid_argument("degree_bound_check: bad grade range");

  DegreeBoundReport rep;
  rep.Delta1 = Delta1;
  rep.Deltak = Deltak;
  rep.m = m;
  rep.i_from = i_from;
  rep.i_to = i_to;
  for (long i = i_from; i <= i_to; ++i) {
    const Rational x(i + 1);
    const Rational lhs = x * (Deltak + Rational(1)) * (x - Deltak).pow(m);
    const Rational rhs = (x - Delta1 * Deltak) * x.pow(m);
    rep.sides.emplace_back(lhs, rhs);
    if (lhs == rhs) rep.equal_at.push_back(i);
  }
  const long from = rep.equal_at.empty() ? i_from : rep.equal_at.back() + 1;
  if (from <= i_to) rep.separated_from = from;
  return rep;
}

std::optional<long> least_stable_grade(const Rational &alpha,
                                       const CompositionFactor &bottom,
                                       const CompositionFactor &top, long m,
                                       long window, long i_max, bool parallel) {
  if (window < 0 || i_max < 1)
    throw std::invalid_argument("least_stable_grade: bad window or grade cap");
  const long hi = i_max + window;
  std::vector<char> trivial(static_cast<size_t>(hi) + 1, 0);
  preintern_coeffs(m);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 1; i <= hi; ++i)
      trivial[i] = certify_trivial_action(make_problem(i, alpha, bottom, top, m)).trivial;
  } else {
    for (long i = 1; i <= hi; ++i)
      trivial[i] = certify_trivial_action(make_problem(i, alpha, bottom, top, m)).trivial;
  }
  for (long i0 = 1; i0 <= i_max; ++i0) {
    bool ok = true;
    for (long i = i0; i <= i0 + window && ok; ++i) ok = trivial[i];
    if (ok) return i0;
  }
  return std::nullopt;
}

std::string PairFailure::str() const {
  std::ostringstream os;
  os << "grade " << i << ", shape " << shape << ", bottom factor #" << bottom_index
     << ", top factor #" << top_index << ", witness " << witness;
  return os.str();
}

NoFiniteModuleCertificate no_finite_module_certificate(
    const CompositionSeries &series, const Rational &alpha, long i0, long m,
    long window, bool parallel) {
  if (series.factors.empty())
    throw std::invalid_argument("no_finite_module_certificate: empty series");
  if (i0 < 1)
    throw std::invalid_argument("no_finite_module_certificate: the starting grade must be positive");
  if (m < 0)
    throw std::invalid_argument("no_finite_module_certificate: negative ansatz degree");
  if (window < 0)
    throw std::invalid_argument("no_finite_module_certificate: negative window");
  for (const auto &f : series.factors)
    if (f.free && f.Delta.is_zero())
      throw std::invalid_argument("no_finite_module_certificate: free factor with zero weight");

  NoFiniteModuleCertificate cert;
  cert.series = series;
  cert.alpha = alpha;
  cert.i0 = i0;
  cert.window = window;
  cert.m = m;

  const size_t n = series.factors.size();
  cert.pairs = static_cast<long>(n * n);

  struct Job {
    long i;
    size_t bottom, top;
  };
  std::vector<Job> jobs;
  for (long i = i0; i <= i0 + window; ++i)
    for (size_t b = 0; b < n; ++b)
      for (size_t t = 0; t < n; ++t) jobs.push_back({i, b, t});
  cert.instances = static_cast<long>(jobs.size());

  std::vector<std::optional<PairFailure>> slots(jobs.size());
  std::vector<std::string> errors(jobs.size());
  preintern_coeffs(m);

  auto run_job = [&](size_t k) {
    const Job &job = jobs[k];
    try {
      ObstructionProblem prob = make_problem(job.i, alpha, series.factors[job.bottom],
                                             series.factors[job.top], m);
      ActionCertificate ac = certify_trivial_action(prob);
      if (!ac.trivial || !ac.round_trip) {
        PairFailure f;
        f.i = job.i;
        f.shape = prob.shape;
        f.bottom_index = job.bottom;
        f.top_index = job.top;
        if (!ac.witnesses.empty()) f.witness = ac.witnesses.front();
        slots[k] = f;
      }
    } catch (const std::exception &e) {
      errors[k] = e.what();
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t k = 0; k < jobs.size(); ++k) run_job(k);
  } else {
    for (size_t k = 0; k < jobs.size(); ++k) run_job(k);
  }

  for (size_t k = 0; k < jobs.size(); ++k) {
    if (slots[k]) cert.failures.push_back(*slots[k]);
    if (!errors[k].empty()) cert.notes.push_back("instance error: " + errors[k]);
  }
  cert.certified = cert.failures.empty() &&
                   std::all_of(errors.begin(), errors.end(),
                               [](const std::string &s) { return s.empty(); });

  std::ostringstream head;
  head << "series of length " << n << ", a = " << alpha.str() << ": " << cert.instances
       << " transition problems certified over grades [" << i0 << ", " << i0 + window
       << "] at ansatz degree <= " << m;
  cert.notes.insert(cert.notes.begin(), head.str());
  cert.notes.push_back(
      "every ordered pair of factors is examined: walking up the series, each factor in "
      "turn plays the lowest generator not yet annihilated, and the image could land on "
      "any factor");
  cert.notes.push_back("the certificate covers the stated grade window only");
  return cert;
}

}  // namespace conformal
