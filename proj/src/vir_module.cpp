#include "conformal/vir_module.hpp"

#include <stdexcept>

namespace conformal {

std::string VirModuleSpec::str() const {
  if (kind == Kind::Free) return "M(" + delta.str() + "," + offset.str() + ")";
  return "C(" + offset.str() + ")";
}

RationalFunction module_action(const VirModuleSpec &spec, const RationalFunction &q, Variable lam) {
  const Variable d = vars::d();
  if (spec.kind == VirModuleSpec::Kind::Trivial) {
    if (q.involves(d))
      throw std::domain_error("module_action: one-dimensional module coefficient involves d");
    return RationalFunction();
  }
  const Polynomial dp = Polynomial::variable(d), lp = Polynomial::variable(lam);
  return q.substitute(d, lp + dp) * (spec.offset + RationalFunction(dp) + spec.delta * RationalFunction(lp));
}

RationalFunction module_d_action(const VirModuleSpec &spec, const RationalFunction &q) {
  if (spec.kind == VirModuleSpec::Kind::Trivial) {
    if (q.involves(vars::d()))
      throw std::domain_error("module_d_action: one-dimensional module coefficient involves d");
    return spec.offset * q;
  }
  return RationalFunction(Polynomial::variable(vars::d())) * q;
}

ModuleCheckReport check_module_axioms(const VirModuleSpec &spec, long probe_degree) {
  const Variable l = vars::lambda(), m = vars::mu(), d = vars::d();
  const Variable t = Variable("mtp");
  const Polynomial lp = Polynomial::variable(l), mp = Polynomial::variable(m);
  const Polynomial dp = Polynomial::variable(d);

  ModuleCheckReport rep;
  std::vector<RationalFunction> probes;
  if (spec.is_free())
    for (long k = 0; k <= probe_degree; ++k) probes.push_back(RationalFunction(dp.pow(k)));
  else
    probes.push_back(RationalFunction(1L));

  for (const auto &q : probes) {
    // [L l [L m (q v)]] - [L m [L l (q v)]] - (l - m) [L_{l+m} (q v)]
    RationalFunction t1 = module_action(spec, module_action(spec, q, m), l);
    RationalFunction t2 = module_action(spec, module_action(spec, q, l), m);
    RationalFunction rhs =
        module_action(spec, q, t).substitute(t, lp + mp) * RationalFunction(lp - mp);
    RationalFunction res = t1 - t2 - rhs;
    ++rep.checks;
    if (!res.is_zero()) rep.failures.push_back({"compatibility", q.str(), res.str()});

    // [L l (d (q v))] = (l + d) [L l (q v)]
    RationalFunction lhs_s = module_action(spec, module_d_action(spec, q), l);
    RationalFunction rhs_s = RationalFunction(lp + dp) * module_action(spec, q, l);
    RationalFunction res_s = lhs_s - rhs_s;
    ++rep.checks;
    if (!res_s.is_zero()) rep.failures.push_back({"sesquilinearity", q.str(), res_s.str()});
  }
  return rep;
}

}  // namespace conformal
