#include "conformal/report.hpp"

#include <sstream>

namespace conformal {

std::string ascending_str(const Polynomial &p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto &terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Monomial &mono = it->first;
    const Rational &c = it->second;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mono.is_one())
      os << mag.str();
    else if (mag.is_one())
      os << mono.str();
    else
      os << mag.str() << "*" << mono.str();
  }
  return os.str();
}

std::string ascending_coeff_str(const RationalFunction &c) {
  if (c.is_polynomial()) {
    // Fold the constant denominator into the terms.
    Polynomial p = c.num() / c.den().constant_value();
    return "(" + ascending_str(p) + ")";
  }
  return "(" + ascending_str(c.num()) + ")/(" + ascending_str(c.den()) + ")";
}

std::string bracket_line(const ConformalAlgebra &A, long i, long j) {
  std::ostringstream os;
  os << "[" << GeneratorId{A.family, i}.str() << " l " << GeneratorId{A.family, j}.str()
     << "] = ";
  const Element e = A.rule(i, j);
  if (e.is_zero()) {
    os << "0";
    return os.str();
  }
  bool first = true;
  for (const auto &[gen, coeff] : e.components()) {
    if (!first) os << " + ";
    first = false;
    os << ascending_coeff_str(coeff) << " " << gen.str();
  }
  return os.str();
}

std::vector<std::string> render_table(const ConformalAlgebra &A, long D) {
  std::vector<std::string> out;
  for (long i : index_range(A, D))
    for (long j : index_range(A, D)) out.push_back(bracket_line(A, i, j));
  return out;
}

RankReport graded_ranks(const ConformalAlgebra &A, long D) {
  RankReport rep;
  rep.graded = A.graded;
  rep.index_min = A.index_min;
  if (!A.graded) return rep;
  // The table keeps one free generator per grade; a grade outside the valid
  // index set contributes rank zero.
  for (long i = A.index_min; i <= D; ++i)
    rep.ranks.emplace_back(i, A.valid_index(i) ? 1 : 0);
  return rep;
}

}  // namespace conformal
