#include "conformal/linalg.hpp"

#include <algorithm>
#include <map>

namespace conformal {

namespace {

// Splits a monomial into (unknown variable or none, row part, parameter part).
struct SplitTerm {
  std::optional<Variable> unknown;
  Monomial row;
  Monomial param;
};

SplitTerm split_monomial(const Monomial &m, const std::vector<Variable> &unknowns,
                         const std::set<Variable> &row_vars) {
  SplitTerm out;
  long unknown_degree = 0;
  for (const auto &[v, e] : m.factors()) {
    if (std::find(unknowns.begin(), unknowns.end(), v) != unknowns.end()) {
      unknown_degree += e;
      out.unknown = v;
    } else if (row_vars.count(v)) {
      out.row = out.row * Monomial::var(v, e);
    } else {
      out.param = out.param * Monomial::var(v, e);
    }
  }
  if (unknown_degree > 1)
    throw std::invalid_argument(
        "linear_system_from: equation is not linear in the unknowns (term " +
        m.str() + ")");
  return out;
}

struct RowKeyLess {
  bool operator()(const std::pair<size_t, Monomial> &a,
                  const std::pair<size_t, Monomial> &b) const {
    if (a.first != b.first) return a.first < b.first;
    return Monomial::cmp(a.second, b.second) > 0;  // descending, deterministic
  }
};

}  // namespace

ParamLinearSystem linear_system_from(const std::vector<Polynomial> &eqs,
                                     const std::vector<Variable> &unknowns,
                                     const std::set<Variable> &row_vars) {
  std::map<Variable, size_t> col;
  for (size_t j = 0; j < unknowns.size(); ++j) col.emplace(unknowns[j], j);
  if (col.size() != unknowns.size())
    throw std::invalid_argument("linear_system_from: duplicate unknown");

  struct Row {
    std::vector<Polynomial> coeff;  // parameter polynomial per unknown
    Polynomial free_part;
  };
  std::map<std::pair<size_t, Monomial>, Row, RowKeyLess> rows;

  for (size_t ei = 0; ei < eqs.size(); ++ei) {
    for (const auto &[mono, c] : eqs[ei].terms()) {
      SplitTerm s = split_monomial(mono, unknowns, row_vars);
      auto &row = rows[{ei, s.row}];
      if (row.coeff.empty()) row.coeff.assign(unknowns.size(), Polynomial());
      Polynomial contrib = Polynomial::monomial(s.param, c);
      if (s.unknown) {
        row.coeff[col.at(*s.unknown)] += contrib;
      } else {
        row.free_part += contrib;
      }
    }
  }

  ParamLinearSystem out;
  out.unknowns = unknowns;
  for (const auto &[key, row] : rows) {
    out.row_labels.push_back(key);
    std::vector<RationalFunction> r;
    r.reserve(unknowns.size());
    for (const auto &p : row.coeff) r.emplace_back(p);
    out.M.push_back(std::move(r));
    out.rhs.emplace_back(-row.free_part);
  }
  return out;
}

RationalLinearSystem linear_system_rational(const std::vector<Polynomial> &eqs,
                                            const std::vector<Variable> &unknowns) {
  // Route everything that is not an unknown into the row label, so entries
  // are plain rationals.
  std::set<Variable> row_vars;
  for (const auto &e : eqs)
    for (Variable v : e.variables())
      if (std::find(unknowns.begin(), unknowns.end(), v) == unknowns.end())
        row_vars.insert(v);

  ParamLinearSystem sys = linear_system_from(eqs, unknowns, row_vars);
  RationalLinearSystem out;
  out.row_labels = std::move(sys.row_labels);
  out.unknowns = std::move(sys.unknowns);
  out.M.reserve(sys.M.size());
  for (auto &r : sys.M) {
    std::vector<Rational> row;
    row.reserve(r.size());
    for (auto &f : r) row.push_back(f.constant_value());
    out.M.push_back(std::move(row));
  }
  out.rhs.reserve(sys.rhs.size());
  for (auto &f : sys.rhs) out.rhs.push_back(f.constant_value());
  return out;
}

}  // namespace conformal
