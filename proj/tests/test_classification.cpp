#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "conformal/classification.hpp"

using namespace conformal;

namespace {
const Polynomial L = Polynomial::variable(vars::lambda());
const Polynomial D_ = Polynomial::variable(vars::d());
const Polynomial A_ = Polynomial::variable(vars::alpha());

Polynomial PV(const char *n) { return Polynomial::variable(Variable(n)); }
RationalFunction RF(const Polynomial &p) { return RationalFunction(p); }

bool mentions(const std::vector<std::string> &msgs, const std::string &sub) {
  for (const auto &m : msgs)
    if (m.find(sub) != std::string::npos) return true;
  return false;
}

SeedCase seed_of(CaseTag tag) {
  auto a = solve_g1_minus1(std::nullopt, true, true);
  auto d = solve_g1_minus1(std::nullopt, false, false);
  switch (tag) {
    case CaseTag::Case1: return a.cases[0];
    case CaseTag::Case3: return a.cases[1];
    default: return d.cases[0];
  }
}
}  // namespace

TEST_CASE("grading constants are forced to multiples of the first one") {
  auto g = derive_grading_constants(std::nullopt, 6);
  CHECK(g.delta0 == Rational(2));
  for (long j = -1; j <= 6; ++j)
    CHECK(g.alphas.at(j) == RF(Polynomial(Rational(j)) * A_));
  CHECK(g.forced_pairs.front() == std::pair<long, long>{0, 0});
  CHECK(g.forced_pairs.size() == 7);  // (0,0) plus (-1,j) for j = 1..6
  CHECK(mentions(g.notes, "a degenerate bracket would impose no constraint"));

  auto h = derive_grading_constants(Rational::parse("1/2"), 4);
  CHECK(h.alphas.at(3) == RF(Polynomial(Rational::parse("3/2"))));
  CHECK(h.alphas.at(-1) == RF(Polynomial(Rational::parse("-1/2"))));
}

TEST_CASE("seed solve with nonzero parameter and nonzero diagonal constant") {
  auto R = solve_g1_minus1(std::nullopt, true, true);
  CHECK(R.applicable);
  REQUIRE(R.cases.size() == 2);

  CHECK(R.cases[0].tag == CaseTag::Case1);
  CHECK(!R.cases[0].alpha1.has_value());
  CHECK(R.cases[0].delta_m1 == Rational(0));
  CHECK(R.cases[0].delta_1 == Rational(3));
  CHECK(R.cases[0].g_1m1 == RF(PV("c1")));

  CHECK(R.cases[1].tag == CaseTag::Case3);
  CHECK(R.cases[1].delta_m1 == Rational(1));
  CHECK(R.cases[1].delta_1 == Rational(3));
  CHECK(R.cases[1].g_1m1 == RF(PV("c1")) * RF(A_ - L - D_) / RF(A_));

  // the generic-weight subbranch dies on a mechanically inconsistent pair
  REQUIRE(R.contradictions.size() == 1);
  std::string r1 = (PV("D1") + PV("Dm") - Polynomial(3L)).str();
  std::string r2 = (PV("D1") + PV("Dm") - Polynomial(1L)).str();
  CHECK(R.contradictions[0].find("'" + r1 + " = 0'") != std::string::npos);
  CHECK(R.contradictions[0].find("'" + r2 + " = 0'") != std::string::npos);
  CHECK(R.contradictions[0].find("impossible") != std::string::npos);
}

TEST_CASE("seed solve with nonzero parameter and vanishing diagonal constant is empty") {
  auto R = solve_g1_minus1(std::nullopt, true, false);
  CHECK(R.applicable);
  CHECK(R.cases.empty());
  REQUIRE(R.contradictions.size() == 1);
  CHECK(R.contradictions[0].find(
            "contradicting the required nonvanishing of [G_{-1} l G_1]") !=
        std::string::npos);
}

TEST_CASE("seed solve at parameter zero with nonzero diagonal constant") {
  auto R = solve_g1_minus1(std::nullopt, false, true);
  CHECK(R.applicable);
  REQUIRE(R.cases.size() == 1);
  CHECK(R.cases[0].tag == CaseTag::Case1);
  REQUIRE(R.cases[0].alpha1.has_value());
  CHECK(*R.cases[0].alpha1 == Rational(0));
  CHECK(R.cases[0].delta_m1 == Rational(0));
  CHECK(R.cases[0].delta_1 == Rational(3));
  CHECK(R.cases[0].g_1m1 == RF(PV("c1")));

  // weight 1 and generic weight both die on the same parameter-free row
  std::string row = (Polynomial(2L) * PV("p") * PV("p")).str();
  REQUIRE(R.contradictions.size() == 2);
  CHECK(mentions(R.contradictions, "'" + row + " = 0'"));
  CHECK(mentions(R.contradictions, "weight of G_{-1} equal to 1"));
  CHECK(mentions(R.contradictions, "generic weight Dm of G_{-1}"));
}

TEST_CASE("seed solve at parameter zero with vanishing diagonal constant") {
  auto R = solve_g1_minus1(std::nullopt, false, false);
  CHECK(R.applicable);
  REQUIRE(R.cases.size() == 1);
  CHECK(R.cases[0].tag == CaseTag::Case2);
  REQUIRE(R.cases[0].alpha1.has_value());
  CHECK(*R.cases[0].alpha1 == Rational(0));
  CHECK(R.cases[0].delta_m1 == Rational(1));
  CHECK(R.cases[0].delta_1 == Rational(3));
  CHECK(R.cases[0].g_1m1 == RF(PV("c1")) * RF(L + D_));
  CHECK(!R.cases[0].derivation.empty());

  REQUIRE(R.contradictions.size() == 4);
  CHECK(mentions(R.contradictions, "weights (0, D1) with D1 != 1"));
  CHECK(mentions(R.contradictions,
                 "weights (0, 1): the diagonal identities hold vacuously"));
  CHECK(mentions(R.contradictions, "linear profile coefficient zero"));
  CHECK(mentions(R.contradictions, "generic weight of G_{-1}"));
}

TEST_CASE("a numeric parameter rules selectors in or out") {
  CHECK(!solve_g1_minus1(Rational::parse("1/2"), false, true).applicable);
  CHECK(!solve_g1_minus1(Rational::parse("1/2"), false, false).applicable);
  CHECK(!solve_g1_minus1(Rational(0), true, true).applicable);
  CHECK(!solve_g1_minus1(Rational(0), true, false).applicable);

  auto R = solve_g1_minus1(Rational::parse("1/2"), true, true);
  CHECK(R.applicable);
  REQUIRE(R.cases.size() == 2);
  for (const auto &c : R.cases) {
    REQUIRE(c.alpha1.has_value());
    CHECK(*c.alpha1 == Rational::parse("1/2"));
  }
  Polynomial half{Rational::parse("1/2")};
  CHECK(R.cases[1].g_1m1 == RF(half - L - D_) * RF(PV("c1")) / RF(half));
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(solve_g1_minus1(std::nullopt, true, true, 0), std::invalid_argument);
  CHECK_THROWS_AS(derive_grading_constants(std::nullopt, 0), std::invalid_argument);
  CHECK_THROWS_AS(propagate(seed_of(CaseTag::Case1), 0), std::invalid_argument);
}

TEST_CASE("propagation rebuilds the table column by column") {
  auto st = propagate(seed_of(CaseTag::Case1), 3);
  CHECK(!st.contradiction);
  CHECK(st.violations.empty());
  // 24 action + 5 descent + 5 weight + 9 row-extension + 25 skew instances
  CHECK(st.instances_checked == 68);

  CHECK(st.entry(-1, 2) == RF(PV("c2")));
  CHECK(st.entry(-1, 3) == RF(PV("c3")));
  CHECK(st.entry(1, 1) ==
        RF(Polynomial(-3L)) * RF(PV("c1")) * RF(Polynomial(2L) * L + D_) / RF(PV("c2")));
  CHECK(st.entry(1, 2) ==
        RF(Polynomial(-2L)) * RF(PV("c1")) * RF(A_ + Polynomial(5L) * L + Polynomial(2L) * D_) /
            RF(PV("c3")));

  // one gauge constant per lowering bracket
  CHECK(st.gauge == std::vector<std::string>{"c1", "c2", "c3", "c4", "c5", "c6", "c7"});

  // the weights come out arithmetic with step one
  CHECK(st.Delta.at(-1) == Rational(0));
  for (long j = 0; j <= 7; ++j) CHECK(st.Delta.at(j) == Rational(j + 2));
  CHECK(st.alphas.at(5) == RF(Polynomial(5L) * A_));
  CHECK(!st.notes.empty());
}

TEST_CASE("propagation keeps the lowering profile of each case") {
  auto st3 = propagate(seed_of(CaseTag::Case3), 3);
  CHECK(!st3.contradiction);
  CHECK(st3.entry(-1, 2) == RF(PV("c2")) * RF(A_ + L));
  CHECK(st3.entry(1, 1) ==
        RF(Polynomial(-3L)) * RF(PV("c1")) * RF(Polynomial(2L) * L + D_) /
            (RF(A_) * RF(PV("c2"))));
  CHECK(st3.Delta.at(2) == Rational(4));

  auto st2 = propagate(seed_of(CaseTag::Case2), 3);
  CHECK(!st2.contradiction);
  CHECK(st2.entry(-1, 2) == RF(PV("c2")) * RF(L));
  CHECK(st2.Delta.at(2) == Rational(4));
}

TEST_CASE("normalization matches the catalog tables entry by entry") {
  struct Want {
    CaseTag tag;
    const char *id;
  } wants[3] = {{CaseTag::Case1, "B(1,a)"},
                {CaseTag::Case2, "B(2,0)"},
                {CaseTag::Case3, "B(2,a)"}};
  for (const auto &w : wants) {
    auto st = propagate(seed_of(w.tag), 3);
    REQUIRE(!st.contradiction);
    auto n = normalize(st);
    CHECK(n.gauge.empty());
    auto id = identify(n, 3);
    CHECK(id.matched);
    CHECK(id.diffs.empty());
    CHECK(id.tag == w.id);
  }

  // spot values after normalization
  auto n1 = normalize(propagate(seed_of(CaseTag::Case1), 2));
  CHECK(n1.entry(-1, 1) == RF(Polynomial(2L)));
  CHECK(n1.entry(1, 1) == RF(Polynomial(4L) * L + Polynomial(2L) * D_));
}

TEST_CASE("normalization is independent of the gauge choices") {
  auto st = propagate(seed_of(CaseTag::Case3), 3);
  auto base = normalize(st);

  ClassificationState tw = st;
  auto unit = [](long j) {
    if (j <= 0) return RationalFunction(1);
    return RationalFunction(Polynomial::variable(Variable("z" + std::to_string(j))));
  };
  for (auto &kv : tw.g) {
    if (kv.second.is_zero()) continue;
    kv.second = kv.second * unit(kv.first.first) * unit(kv.first.second) /
                unit(kv.first.first + kv.first.second);
  }
  auto ren = normalize(tw);
  REQUIRE(ren.g.size() == base.g.size());
  for (const auto &[k, v] : base.g) CHECK(ren.g.at(k) == v);
}

TEST_CASE("identification reports entry mismatches") {
  auto n = normalize(propagate(seed_of(CaseTag::Case1), 2));
  n.g[{1, 1}] = n.g[{1, 1}] * RF(Polynomial(2L));
  auto id = identify(n, 2);
  CHECK(!id.matched);
  REQUIRE(id.diffs.size() == 1);
  CHECK(id.diffs[0].find("entry (1, 1)") != std::string::npos);
}

TEST_CASE("an inconsistent seed is refuted by name") {
  SeedCase bad = seed_of(CaseTag::Case1);
  bad.delta_m1 = Rational(5);  // wrong weight for the bottom generator
  auto st = propagate(bad, 3);
  CHECK(st.contradiction);
  REQUIRE(!st.violations.empty());
  CHECK(st.violations[0].find("descent identity (j=2)") != std::string::npos);

  CHECK_THROWS_AS(normalize(st), std::invalid_argument);
}

TEST_CASE("full pipeline finds exactly both families") {
  auto rep = classify_all(std::nullopt, 6);
  CHECK(rep.complete);
  CHECK(rep.runs.size() == 3);
  CHECK(rep.outcomes == std::vector<std::string>{"B(1,a)", "B(2,0)", "B(2,a)"});
  CHECK(!rep.contradictions.empty());
  CHECK(mentions(rep.notes, "specialization of a run already scheduled"));
  for (const auto &run : rep.runs) {
    CHECK(run.ok);
    CHECK(run.propagated.instances_checked > 0);
  }
}

TEST_CASE("full pipeline specializes to numeric parameters") {
  auto at0 = classify_all(Rational(0), 6);
  CHECK(at0.complete);
  CHECK(at0.outcomes == std::vector<std::string>{"B(1,0)", "B(2,0)"});

  auto at_half = classify_all(Rational::parse("1/2"), 4);
  CHECK(at_half.complete);
  CHECK(at_half.outcomes == std::vector<std::string>{"B(1,1/2)", "B(2,1/2)"});
}

TEST_CASE("pipeline case filter") {
  auto rep = classify_all(std::nullopt, 4, CaseTag::Case3);
  CHECK(rep.complete);
  CHECK(rep.runs.size() == 1);
  CHECK(rep.outcomes == std::vector<std::string>{"B(2,a)"});
}
