// conformal-kit: batch verification front end over the conformal algebra
// library.  Every subcommand emits a versioned JSON report (or a short text
// rendering behind --format text) and exits 0 exactly when the run found no
// failures.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "conformal/annihilation.hpp"
#include "conformal/catalog.hpp"
#include "conformal/classification.hpp"
#include "conformal/obstruction.hpp"
#include "conformal/report.hpp"
#include "conformal/structure.hpp"
#include "conformal/vir_module.hpp"

using json = nlohmann::ordered_json;
using namespace conformal;

namespace {

struct Common {
  std::string format = "json";
  std::string output;
  int threads = 0;
};

void add_common(CLI::App *cmd, Common &c, const std::string &default_format = "json") {
  c.format = default_format;
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Also write the report to this file");
  cmd->add_option("--threads", c.threads, "Worker cap (0 = library default)")
      ->envname("CONFORMAL_KIT_THREADS");
}

void apply_threads(const Common &c) {
#ifdef _OPENMP
  if (c.threads > 0) omp_set_num_threads(c.threads);
#endif
}

// sym -> the symbolic family parameter; otherwise an exact rational.
RationalFunction parse_alpha_rf(const std::string &s) {
  if (s == "sym") return RationalFunction(Polynomial::variable(vars::alpha()));
  return RationalFunction(Polynomial(Rational::parse(s)));
}

std::optional<Rational> parse_alpha_opt(const std::string &s) {
  if (s == "sym") return std::nullopt;
  return Rational::parse(s);
}

int emit(const json &out, const Common &c, const std::string &text, bool ok) {
  std::string payload = c.format == "json" ? out.dump(2) + "\n" : text;
  std::cout << payload;
  if (!c.output.empty()) {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file '" << c.output << "'\n";
      return 2;
    }
    f << payload;
  }
  return ok ? 0 : 1;
}

json axiom_report_json(const AxiomReport &rep) {
  json failures = json::array();
  for (const auto &f : rep.failures)
    failures.push_back({{"kind", f.kind}, {"indices", f.indices}, {"residual", f.residual}});
  return {{"pairs", rep.pairs}, {"triples", rep.triples}, {"failures", failures}};
}

json ann_report_json(const AnnReport &rep) {
  return {{"compared", rep.compared}, {"mismatches", rep.mismatches}};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"conformal-kit: exact verification of the graded conformal algebra families"};
  app.require_subcommand(1);
  std::function<int()> run;

  // ---- axioms -------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "axioms", "Skew, sesquilinearity and Jacobi sweeps over a bracket table");
    auto common = std::make_shared<Common>();
    auto algebra = std::make_shared<std::string>("B2:alpha=sym");
    auto degree = std::make_shared<long>(4);
    auto serial = std::make_shared<bool>(false);
    cmd->add_option("--algebra", *algebra, "Table descriptor")->capture_default_str();
    cmd->add_option("--max-degree", *degree, "Largest generator index")->capture_default_str();
    cmd->add_flag("--serial", *serial, "Use the serial reference sweep");
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        apply_threads(*common);
        ConformalAlgebra A = parse_algebra(*algebra);
        AxiomReport rep = verify_axioms(A, *degree, !*serial);
        json out = {{"schema_version", 1},
                    {"command", "axioms"},
                    {"config",
                     {{"algebra", *algebra}, {"max_degree", *degree}, {"serial", *serial}}},
                    {"ok", rep.ok()},
                    {"failures", rep.failures.size()},
                    {"result", axiom_report_json(rep)}};
        std::ostringstream text;
        text << A.name << ": " << rep.pairs << " pairs, " << rep.triples << " triples, "
             << rep.failures.size() << " failures\n";
        for (const auto &f : rep.failures) {
          text << "  " << f.kind << " at (";
          for (size_t k = 0; k < f.indices.size(); ++k)
            text << (k ? ", " : "") << f.indices[k];
          text << "): " << f.residual << "\n";
        }
        return emit(out, *common, text.str(), rep.ok());
      };
    });
  }

  // ---- table --------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand("table", "Print the bracket table");
    auto common = std::make_shared<Common>();
    auto algebra = std::make_shared<std::string>("B2:alpha=sym");
    auto degree = std::make_shared<long>(2);
    cmd->add_option("--algebra", *algebra, "Table descriptor")->capture_default_str();
    cmd->add_option("--max-degree", *degree, "Largest generator index")->capture_default_str();
    add_common(cmd, *common, "text");
    cmd->callback([=]() {
      run = [=]() {
        ConformalAlgebra A = parse_algebra(*algebra);
        std::vector<std::string> lines = render_table(A, *degree);
        json entries = json::array();
        for (long i : index_range(A, *degree))
          for (long j : index_range(A, *degree))
            entries.push_back({{"i", i}, {"j", j}, {"bracket", A.rule(i, j).str()}});
        json out = {{"schema_version", 1},
                    {"command", "table"},
                    {"config", {{"algebra", *algebra}, {"max_degree", *degree}}},
                    {"ok", true},
                    {"failures", 0},
                    {"result", {{"name", A.name}, {"entries", entries}}}};
        std::ostringstream text;
        text << A.name << "\n";
        for (const auto &line : lines) text << line << "\n";
        return emit(out, *common, text.str(), true);
      };
    });
  }

  // ---- annihilation -------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "annihilation", "Mode-algebra closed form and Lie axioms for the graded families");
    auto common = std::make_shared<Common>();
    auto alpha = std::make_shared<std::string>("sym");
    auto bound = std::make_shared<long>(3);
    auto algebra = std::make_shared<std::string>("B2:alpha=sym");
    auto lie_index = std::make_shared<long>(2);
    auto lie_mode = std::make_shared<long>(2);
    auto serial = std::make_shared<bool>(false);
    cmd->add_option("--alpha", *alpha, "Family parameter for the closed form (rational or sym)")
        ->capture_default_str();
    cmd->add_option("--bound", *bound, "Index/mode bound for the closed-form comparison")
        ->capture_default_str();
    cmd->add_option("--algebra", *algebra, "Table whose mode algebra gets the Lie sweep")
        ->capture_default_str();
    cmd->add_option("--lie-index", *lie_index, "Generator index bound for the Lie sweep")
        ->capture_default_str();
    cmd->add_option("--lie-mode", *lie_mode, "Raw mode bound for the Lie sweep")
        ->capture_default_str();
    cmd->add_flag("--serial", *serial, "Use the serial reference sweep");
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        apply_threads(*common);
        AnnReport closed = check_block_closed_form(parse_alpha_rf(*alpha), *bound, !*serial);
        ConformalAlgebra A = parse_algebra(*algebra);
        AnnReport lie = check_lie_axioms(A, *lie_index, *lie_mode, !*serial);
        const bool ok = closed.ok() && lie.ok();
        json out = {{"schema_version", 1},
                    {"command", "annihilation"},
                    {"config",
                     {{"alpha", *alpha},
                      {"bound", *bound},
                      {"algebra", *algebra},
                      {"lie_index", *lie_index},
                      {"lie_mode", *lie_mode},
                      {"serial", *serial}}},
                    {"ok", ok},
                    {"failures", closed.mismatches.size() + lie.mismatches.size()},
                    {"result",
                     {{"closed_form", ann_report_json(closed)}, {"lie", ann_report_json(lie)}}}};
        std::ostringstream text;
        text << "closed form: " << closed.compared << " brackets compared, "
             << closed.mismatches.size() << " mismatches\n";
        for (const auto &s : closed.mismatches) text << "  " << s << "\n";
        text << "lie axioms: " << lie.compared << " instances, " << lie.mismatches.size()
             << " mismatches\n";
        for (const auto &s : lie.mismatches) text << "  " << s << "\n";
        return emit(out, *common, text.str(), ok);
      };
    });
  }

  // ---- simplicity ---------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "simplicity", "Ideal-closure certificate: every seed regenerates every grade");
    auto common = std::make_shared<Common>();
    auto algebra = std::make_shared<std::string>("B2:alpha=0");
    auto degree = std::make_shared<long>(5);
    auto nseeds = std::make_shared<int>(10);
    auto seed = std::make_shared<unsigned>(1);
    cmd->add_option("--algebra", *algebra, "Table descriptor (numeric parameter required)")
        ->capture_default_str();
    cmd->add_option("--max-degree", *degree, "Grade window cap")->capture_default_str();
    cmd->add_option("--random-seeds", *nseeds, "Extra pseudo-random seed elements")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed for the random elements")->capture_default_str();
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        apply_threads(*common);
        ConformalAlgebra A = parse_algebra(*algebra);
        SimplicityCertificate cert = is_simple_truncated(A, *degree, *nseeds, *seed);
        json runs = json::array();
        size_t failures = 0;
        for (const auto &r : cert.runs) {
          json stalled = json::object();
          for (const auto &[g, gen] : r.stalled_generators)
            stalled[std::to_string(g)] = gen;
          runs.push_back({{"seed", r.seed},
                          {"full", r.full},
                          {"steps", r.steps},
                          {"not_full_grades", r.not_full_grades},
                          {"stalled_generators", stalled}});
          if (!r.full) ++failures;
        }
        json out = {{"schema_version", 1},
                    {"command", "simplicity"},
                    {"config",
                     {{"algebra", *algebra},
                      {"max_degree", *degree},
                      {"random_seeds", *nseeds},
                      {"seed", *seed}}},
                    {"ok", cert.certified},
                    {"failures", failures},
                    {"result", {{"certified", cert.certified}, {"runs", runs}}}};
        std::ostringstream text;
        text << cert.algebra << " (grades -1.." << cert.D << "): "
             << (cert.certified ? "every seed regenerates every grade"
                                : "some seed stalls below the full table")
             << "\n";
        for (const auto &r : cert.runs) {
          text << "  seed " << r.seed << ": " << (r.full ? "full" : "STALLED") << " ("
               << r.steps << " steps)";
          if (!r.full) {
            text << " — stuck grades:";
            for (long g : r.not_full_grades) {
              text << " " << g;
              auto it = r.stalled_generators.find(g);
              if (it != r.stalled_generators.end()) text << " [gen " << it->second << "]";
            }
          }
          text << "\n";
        }
        return emit(out, *common, text.str(), cert.certified);
      };
    });
  }

  // ---- iso ----------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "iso", "Rigidity of structure-preserving maps between two family members");
    auto common = std::make_shared<Common>();
    auto family = std::make_shared<int>(2);
    auto a1 = std::make_shared<std::string>("0");
    auto a2 = std::make_shared<std::string>("0");
    auto bound = std::make_shared<long>(6);
    cmd->add_option("--family", *family, "Family selector (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd->add_option("--alpha1", *a1, "Source parameter (rational)")->capture_default_str();
    cmd->add_option("--alpha2", *a2, "Target parameter (rational)")->capture_default_str();
    cmd->add_option("--degree-bound", *bound, "Ansatz degree bound")->capture_default_str();
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        const Rational r1 = Rational::parse(*a1), r2 = Rational::parse(*a2);
        IsoRigidityResult res = iso_rigidity_solve(*family, r1, r2, *bound);
        // Expectation: equal parameters admit exactly the identity data,
        // distinct parameters admit nothing.
        bool ok;
        size_t failures = 0;
        json b0 = json::array();
        for (const auto &p : res.b0_solutions) b0.push_back(p.str());
        json ab = json::array();
        for (const auto &p : res.a_basis) ab.push_back(p.str());
        if (r1 == r2) {
          ok = res.contains_identity() && res.b0_solutions.size() == 1;
        } else {
          ok = res.empty() && res.b0_solutions.size() <= 1;
        }
        if (!ok) failures = 1;
        json out = {{"schema_version", 1},
                    {"command", "iso"},
                    {"config",
                     {{"family", *family},
                      {"alpha1", *a1},
                      {"alpha2", *a2},
                      {"degree_bound", *bound}}},
                    {"ok", ok},
                    {"failures", failures},
                    {"result",
                     {{"b0_solutions", b0},
                      {"a_basis", ab},
                      {"contains_identity", res.contains_identity()},
                      {"empty", res.empty()},
                      {"notes", res.notes}}}};
        std::ostringstream text;
        text << "family " << *family << ", parameters " << r1 << " -> " << r2 << ": ";
        if (res.empty())
          text << "no structure-preserving map\n";
        else {
          text << res.a_basis.size() << "-dimensional solution space"
               << (res.contains_identity() ? " containing the identity" : "") << "\n";
          for (const auto &p : res.a_basis) text << "  a(d) = " << p << "\n";
        }
        for (const auto &n : res.notes) text << "  note: " << n << "\n";
        return emit(out, *common, text.str(), ok);
      };
    });
  }

  // ---- classify -----------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "classify", "Reconstruct every graded table with the required lowering row");
    auto common = std::make_shared<Common>();
    auto alpha = std::make_shared<std::string>("sym");
    auto degree = std::make_shared<long>(6);
    auto branch = std::make_shared<std::string>("all");
    cmd->add_option("--alpha", *alpha, "First grading constant (rational or sym)")
        ->capture_default_str();
    cmd->add_option("--max-degree", *degree, "Verification window cap")->capture_default_str();
    cmd->add_option("--branch", *branch, "Restrict to one surviving case")
        ->check(CLI::IsMember({"all", "case1", "case2", "case3"}))
        ->capture_default_str();
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        apply_threads(*common);
        std::optional<CaseTag> only;
        if (*branch == "case1") only = CaseTag::Case1;
        if (*branch == "case2") only = CaseTag::Case2;
        if (*branch == "case3") only = CaseTag::Case3;
        ClassifyReport rep = classify_all(parse_alpha_opt(*alpha), *degree, only);
        json runs = json::array();
        size_t failures = 0;
        for (const auto &r : rep.runs) {
          if (!r.ok) ++failures;
          runs.push_back({{"branch", r.branch},
                          {"case", case_tag_str(r.seed.tag)},
                          {"identified", r.id.tag},
                          {"matched", r.id.matched},
                          {"instances_checked", r.propagated.instances_checked},
                          {"gauge_constants", r.propagated.gauge},
                          {"violations", r.propagated.violations},
                          {"diffs", r.id.diffs},
                          {"ok", r.ok}});
        }
        json out = {{"schema_version", 1},
                    {"command", "classify"},
                    {"config",
                     {{"alpha", *alpha}, {"max_degree", *degree}, {"branch", *branch}}},
                    {"ok", rep.complete},
                    {"failures", failures},
                    {"result",
                     {{"complete", rep.complete},
                      {"outcomes", rep.outcomes},
                      {"runs", runs},
                      {"contradictions", rep.contradictions},
                      {"notes", rep.notes}}}};
        std::ostringstream text;
        text << "surviving tables (window -1.." << *degree << "): ";
        for (size_t k = 0; k < rep.outcomes.size(); ++k)
          text << (k ? ", " : "") << rep.outcomes[k];
        text << "\n";
        for (const auto &r : rep.runs)
          text << "  " << case_tag_str(r.seed.tag) << " -> " << r.id.tag << " ("
               << r.propagated.instances_checked << " identity instances, "
               << (r.ok ? "ok" : "FAILED") << ")\n";
        text << "  dead branches: " << rep.contradictions.size() << "\n";
        for (const auto &c : rep.contradictions) text << "    " << c << "\n";
        return emit(out, *common, text.str(), rep.complete);
      };
    });
  }

  // ---- obstruction ----------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "obstruction",
        "Certify that a composition series admits no nonzero transition coefficients");
    auto common = std::make_shared<Common>();
    auto series = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("0");
    auto i0 = std::make_shared<long>(1);
    auto window = std::make_shared<long>(20);
    auto deg = std::make_shared<long>(6);
    auto serial = std::make_shared<bool>(false);
    cmd->add_option("--series", *series, "Factors bottom first, e.g. M:1/0;C:2;M:3/1")
        ->required();
    cmd->add_option("--alpha", *alpha, "Family parameter (rational)")->capture_default_str();
    cmd->add_option("--i0", *i0, "First grade of the certified window")->capture_default_str();
    cmd->add_option("--window", *window, "Window length beyond i0")->capture_default_str();
    cmd->add_option("--deg", *deg, "Ansatz degree cap")->capture_default_str();
    cmd->add_flag("--serial", *serial, "Certify instances serially");
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        apply_threads(*common);
        NoFiniteModuleCertificate cert = no_finite_module_certificate(
            parse_series(*series), Rational::parse(*alpha), *i0, *deg, *window, !*serial);
        json factors = json::array();
        for (const auto &f : cert.series.factors) factors.push_back(f.str());
        json fails = json::array();
        for (const auto &f : cert.failures)
          fails.push_back({{"grade", f.i},
                           {"shape", f.shape},
                           {"bottom_index", f.bottom_index},
                           {"top_index", f.top_index},
                           {"witness", f.witness.str()}});
        json out = {{"schema_version", 1},
                    {"command", "obstruction"},
                    {"config",
                     {{"series", *series},
                      {"alpha", *alpha},
                      {"i0", *i0},
                      {"window", *window},
                      {"deg", *deg},
                      {"serial", *serial}}},
                    {"ok", cert.certified},
                    {"failures", cert.failures.size()},
                    {"result",
                     {{"certified", cert.certified},
                      {"factors", factors},
                      {"pairs", cert.pairs},
                      {"instances", cert.instances},
                      {"failures", fails},
                      {"notes", cert.notes}}}};
        std::ostringstream text;
        text << (cert.certified ? "certified" : "REFUSED") << ": " << cert.instances
             << " transition problems over grades [" << cert.i0 << ", "
             << cert.i0 + cert.window << "], ansatz degree <= " << cert.m << "\n";
        for (const auto &f : cert.failures) text << "  surviving transition: " << f.str() << "\n";
        return emit(out, *common, text.str(), cert.certified);
      };
    });
  }

  // ---- module-check ---------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "module-check", "Module axioms for a rank-one or one-dimensional action");
    auto common = std::make_shared<Common>();
    auto kind = std::make_shared<std::string>("free");
    auto delta = std::make_shared<std::string>("sym");
    auto offset = std::make_shared<std::string>("sym");
    auto probe = std::make_shared<long>(5);
    cmd->add_option("--kind", *kind, "free or trivial")
        ->check(CLI::IsMember({"free", "trivial"}))
        ->capture_default_str();
    cmd->add_option("--delta", *delta, "Weight (rational or sym; free kind only)")
        ->capture_default_str();
    cmd->add_option("--offset", *offset, "Shift (rational or sym)")->capture_default_str();
    cmd->add_option("--probe-degree", *probe, "Probe coefficients up to this degree")
        ->capture_default_str();
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        auto param = [](const std::string &s, const char *name) {
          if (s == "sym") return RationalFunction(Polynomial::variable(Variable(name)));
          return RationalFunction(Polynomial(Rational::parse(s)));
        };
        VirModuleSpec spec =
            *kind == "free"
                ? VirModuleSpec::free_module(param(*delta, "delta"), param(*offset, "beta"))
                : VirModuleSpec::trivial_module(param(*offset, "beta"));
        ModuleCheckReport rep = check_module_axioms(spec, *probe);
        json fails = json::array();
        for (const auto &f : rep.failures)
          fails.push_back({{"kind", f.kind}, {"probe", f.probe}, {"residual", f.residual}});
        json out = {{"schema_version", 1},
                    {"command", "module-check"},
                    {"config",
                     {{"kind", *kind},
                      {"delta", *delta},
                      {"offset", *offset},
                      {"probe_degree", *probe}}},
                    {"ok", rep.ok()},
                    {"failures", rep.failures.size()},
                    {"result", {{"module", spec.str()}, {"checks", rep.checks}, {"failures", fails}}}};
        std::ostringstream text;
        text << spec.str() << ": " << rep.checks << " checks, " << rep.failures.size()
             << " failures\n";
        for (const auto &f : rep.failures)
          text << "  " << f.kind << " on " << f.probe << ": " << f.residual << "\n";
        return emit(out, *common, text.str(), rep.ok());
      };
    });
  }

  // ---- ranks ------------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand("ranks", "Rank of each graded piece of a table");
    auto common = std::make_shared<Common>();
    auto algebra = std::make_shared<std::string>("B2:alpha=sym");
    auto degree = std::make_shared<long>(6);
    cmd->add_option("--algebra", *algebra, "Table descriptor")->capture_default_str();
    cmd->add_option("--max-degree", *degree, "Largest grade reported")->capture_default_str();
    add_common(cmd, *common);
    cmd->callback([=]() {
      run = [=]() {
        ConformalAlgebra A = parse_algebra(*algebra);
        RankReport rep = graded_ranks(A, *degree);
        json result;
        std::ostringstream text;
        if (!rep.graded) {
          result = {{"graded", false}, {"message", "not graded"}};
          text << A.name << ": not graded\n";
        } else {
          json ranks = json::array();
          for (const auto &[g, r] : rep.ranks) ranks.push_back({{"grade", g}, {"rank", r}});
          result = {{"graded", true}, {"ranks", ranks}};
          text << A.name << " ranks:";
          for (const auto &[g, r] : rep.ranks) text << " " << g << ":" << r;
          text << "\n";
        }
        json out = {{"schema_version", 1},
                    {"command", "ranks"},
                    {"config", {{"algebra", *algebra}, {"max_degree", *degree}}},
                    {"ok", true},
                    {"failures", 0},
                    {"result", result}};
        return emit(out, *common, text.str(), true);
      };
    });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run();
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
