#include "qtorus/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtorus/config.hpp"
#include "qtorus/contraction.hpp"
#include "qtorus/element_io.hpp"
#include "qtorus/error.hpp"
#include "qtorus/hypotheses.hpp"
#include "qtorus/induced.hpp"
#include "qtorus/properties.hpp"
#include "qtorus/survey.hpp"

namespace qtorus {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    int samples = 20;
    int K = 4;
    int growth_steps = 24;
    std::optional<int> bound;
    std::string level = "quick";
    std::string f;
    std::vector<std::string> values;
};

struct Run {
    Json report;
    std::ostringstream text;
    int code = kExitOk;

    void fail() { code = std::max(code, static_cast<int>(kExitFailure)); }
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::SearchSpaceTooLarge:
        case ErrorKind::BudgetExceeded:
        case ErrorKind::Overflow:
            return kExitBudget;
        default:
            return kExitInput;
    }
}

std::string vec_text(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

std::string dim_text(const DimensionResult& d) {
    if (d.exact) return std::to_string(d.value()) + " (exact)";
    return "in [" + std::to_string(d.lower) + ", " + std::to_string(d.upper) + "] (bounds)";
}

Json dim_json(const DimensionResult& d) {
    return Json{{"value", d.value()}, {"exact", d.exact}, {"lower", d.lower}, {"upper", d.upper}};
}

std::uint64_t resolve_seed(const Options& o, const AlgebraConfig* c) {
    if (o.seed) return *o.seed;
    if (c && c->seed) return *c->seed;
    return 1;
}

AlgebraConfig require_config(const Options& o) {
    if (o.config.empty()) throw Error(ErrorKind::Config, "--config is required for " + o.command);
    return load_config(o.config);
}

void header(Run& run, const Options& o, const AlgebraConfig* c, std::uint64_t seed) {
    run.report["tool"] = "qtorus";
    run.report["version"] = kToolVersion;
    run.report["command"] = o.command;
    run.report["seed"] = seed;
    if (c) run.report["config"] = c->echo;
    run.text << "qtorus " << kToolVersion << " " << o.command << " (seed " << seed << ")\n";
}

// Invariant block shared by every command that reads one algebra.
void invariants(Run& run, const AlgebraConfig& c) {
    const Sublattice Z = center_lattice(c.sys);
    const ExponentSystem split = c.split_system();
    const HypothesisFlags h = check_hypotheses(split);
    Json inv;
    inv["n"] = c.sys.n;
    inv["mode"] = c.sys.mode.describe();
    inv["center"] = {{"rank", Z.rank}, {"basis", Z.basis}};
    inv["dim"] = dim_json(h.dim);
    Json E = Json::array();
    for (const auto& m : split.E) E.push_back(matrix_json(m));
    inv["split"] = {{"basis", matrix_json(c.basis)}, {"t", c.t + 1}, {"E", E}};
    inv["hypotheses"] = {{"B_commutative", h.B_commutative},
                         {"center_trivial", h.center_trivial},
                         {"dim_is_1", h.dim_is_1},
                         {"dim_is_n_minus_1", h.dim_is_n_minus_1}};
    run.report["invariants"] = inv;

    auto& t = run.text;
    t << "algebra: n = " << c.sys.n << ", r = " << c.sys.r() << ", " << c.sys.mode.describe() << "\n";
    t << "center: rank " << Z.rank;
    if (!Z.basis.empty()) {
        t << ", basis";
        for (const auto& b : Z.basis) t << " " << vec_text(b);
    }
    t << "\n";
    t << "dim: " << dim_text(h.dim) << "\n";
    t << "split: t = basis column " << c.t + 1 << "\n";
    t << "hypotheses: B_commutative=" << h.B_commutative << " center_trivial=" << h.center_trivial
      << " dim_is_1=" << h.dim_is_1 << " dim_is_n_minus_1=" << h.dim_is_n_minus_1 << "\n";
}

void cmd_algebra(Run& run, const Options& o) {
    const AlgebraConfig c = require_config(o);
    header(run, o, &c, resolve_seed(o, &c));
    invariants(run, c);
}

void cmd_dim_oracle(Run& run, const Options& o) {
    const AlgebraConfig c = require_config(o);
    header(run, o, &c, resolve_seed(o, &c));
    if (c.sys.n > 4) throw Error(ErrorKind::Config, "dim-oracle needs n <= 4");
    const int bound = o.bound.value_or(2);
    const DimensionResult d = algebra_dimension(c.sys);
    const IsotropicResult b = brute_force_max_isotropic(c.sys, bound);
    // The oracle only sees generators with entries up to the bound, so its rank is a lower bound.
    const bool consistent = d.exact ? b.rank == d.value() : b.rank <= d.upper;
    run.report["dim"] = dim_json(d);
    run.report["oracle"] = {{"bound", bound}, {"rank", b.rank}, {"basis", b.basis}, {"nodes", b.nodes}};
    run.report["agree"] = consistent;
    run.text << "dim: " << dim_text(d) << "\n";
    run.text << "oracle (entries <= " << bound << "): rank " << b.rank;
    for (const auto& v : b.basis) run.text << " " << vec_text(v);
    run.text << "\n";
    if (d.exact)
        run.text << (consistent ? "agree" : "MISMATCH") << "\n";
    else
        run.text << (consistent ? "consistent with bounds" : "MISMATCH: oracle exceeds upper bound") << "\n";
    if (!consistent) {
        if (c.sys.mode.is_root() && bound < c.sys.mode.m)
            run.text << "note: at a root of unity of order " << c.sys.mode.m << " rank n needs --bound >= "
                     << c.sys.mode.m << "\n";
        run.fail();
    }
}

std::string sample_text(const SampleResult& s) {
    if (s.generated) return "generates at |k| <= " + std::to_string(s.k_used) + " (" + s.witness + ")";
    return "FAILS: " + s.failure;
}

void cmd_contract(Run& run, const Options& o) {
    const AlgebraConfig c = require_config(o);
    const std::uint64_t seed = resolve_seed(o, &c);
    header(run, o, &c, seed);
    invariants(run, c);
    const ExponentSystem split = c.split_system();
    const AlgebraPtr ctx = Algebra::make(split, true);
    const Element f = parse_element(o.f, ctx);
    const ContractionModule M(f);
    const int n = M.n(), d = M.degree();
    auto& t = run.text;
    Json res;
    res["f"] = format_element(f);
    res["normalized_f"] = format_element(M.form().f);
    res["degree"] = d;
    t << "f = " << format_element(f) << "\nnormalized: " << format_element(M.form().f) << " (degree " << d << ")\n";
    const bool roundtrip = parse_element(format_element(M.form().f), ctx) == M.form().f;
    if (!roundtrip) run.fail();

    std::vector<ModVec> probes{M.generator()};
    for (std::uint64_t i = 0; i < 3; ++i) probes.push_back(random_module_vector(M, seed * 7919 + i));
    const std::string rel = M.verify_relations(probes);
    res["relations"] = rel.empty() ? "hold" : rel;
    t << "relations: " << (rel.empty() ? "hold on " + std::to_string(probes.size()) + " probes" : "FAIL " + rel)
      << "\n";
    if (!rel.empty()) run.fail();

    const GkReport gk = gk_certified(M);
    Json subl = Json::array();
    for (const auto& v : gk.sublattices) subl.push_back({{"coordinates", v.coordinates}, {"verdict", v.verdict}});
    res["gk"] = {{"value", gk.value()},       {"exact", gk.exact},
                 {"lower_witness", gk.lower_witness}, {"upper_witness", gk.upper_witness},
                 {"sublattices", subl}};
    t << "gk: " << gk.value() << (gk.exact ? " (certified)" : " (NOT exact)") << "\n  lower: " << gk.lower_witness
      << "\n  upper: " << gk.upper_witness << "\n";
    if (!gk.exact || gk.value() != n - 1) run.fail();

    if (o.growth_steps > 0) {
        const GrowthEstimate g = gk_growth_estimate(M, o.growth_steps, seed);
        res["growth"] = {{"dims", g.dims},
                         {"exact", g.exact},
                         {"slope", std::round(g.slope * 1000) / 1000},
                         {"window", {g.window_lo, g.window_hi}}};
        t << "growth f(m), m = 0.." << o.growth_steps << (g.exact ? "" : " (mod-p lower bounds)") << ":";
        for (const auto v : g.dims) t << " " << v;
        t << "\n  log-log slope over [" << g.window_lo << ", " << g.window_hi << "]: " << std::fixed
          << std::setprecision(3) << g.slope << std::defaultfloat << std::setprecision(6) << " (n - 1 = " << n - 1
          << ")\n";
    }

    const ModuleFactors mf = monomial_factors(M);
    const auto& right = mf.right;
    const auto& left = mf.left;
    Json factors = Json::array();
    if (right) {
        factors.push_back({{"side", "right"}, {"factor", format_element(right->linear)},
                           {"cofactor", format_element(right->cofactor)}});
        t << "factor witness: f = (" << format_element(right->cofactor) << ")(" << format_element(right->linear)
          << ")\n";
    }
    if (left) {
        factors.push_back({{"side", "left"}, {"factor", format_element(left->linear)},
                           {"cofactor", format_element(left->cofactor)}});
        t << "factor witness: f = (" << format_element(left->linear) << ")(" << format_element(left->cofactor)
          << ")\n";
    }
    res["factors"] = factors;

    if (base_is_commutative(ctx)) {
        std::vector<std::pair<ModVec, std::string>> plan{{M.generator(), "generator"}};
        if (right) plan.push_back({M.coords(right->cofactor), "probe " + format_element(right->cofactor)});
        if (left) plan.push_back({M.coords(left->linear), "probe " + format_element(left->linear)});
        plan.erase(std::remove_if(plan.begin(), plan.end(),
                                  [](const auto& p) {
                                      return std::all_of(p.first.begin(), p.first.end(),
                                                         [](const Element& e) { return e.is_zero(); });
                                  }),
                   plan.end());
        for (std::uint64_t i = 0; static_cast<int>(plan.size()) < o.samples; ++i)
            plan.push_back({random_module_vector(M, seed * 104729 + i), "random"});
        Json crit = Json::array();
        int torsion = 0;
        std::string first_failure;
        for (const auto& [w, origin] : plan) {
            CriticalityVerdict v;
            for (int K = o.K; K <= 4 * o.K; K *= 2) {
                v = criticality_check(M, w, K, seed);
                if (v.torsion) break;
            }
            torsion += v.torsion;
            if (!v.torsion && first_failure.empty())
                first_failure = origin + ": rank " + std::to_string(v.rank) + " < " + std::to_string(d);
            crit.push_back({{"w", origin}, {"torsion", v.torsion}, {"rank", v.rank}, {"K", v.K},
                            {"mod_p", v.by_specialization}});
        }
        res["criticality"] = crit;
        t << "criticality: " << torsion << "/" << plan.size() << " quotients S/wA are B-torsion (rank " << d
          << ")\n";
        if (!first_failure.empty()) {
            t << "  criticality FAILS for " << first_failure << "\n";
            run.fail();
        }
    } else {
        res["criticality"] = "skipped: B not commutative";
        t << "criticality: skipped, B not commutative\n";
    }

    if (n == 2 && base_is_commutative(ctx)) {
        const SimplicityCertificate cert = certify_simplicity_contraction(M, o.samples, o.K, seed);
        Json samples = Json::array();
        std::size_t ok = 0;
        for (const auto& s : cert.samples) {
            ok += s.generated;
            samples.push_back({{"origin", s.origin}, {"generated", s.generated}, {"k_used", s.k_used},
                               {"rank", s.rank}, {"witness", s.witness}, {"failure", s.failure}});
        }
        res["simplicity"] = {{"certified", cert.all_generated}, {"max_k_used", cert.max_k_used},
                             {"samples", samples}};
        t << "simplicity: " << ok << "/" << cert.samples.size() << " samples generate"
          << (cert.all_generated ? ", certified at |k| <= " + std::to_string(cert.max_k_used) : ", NOT certified")
          << "\n";
        for (const auto& s : cert.samples)
            if (!s.generated) t << "  " << s.origin << ": " << sample_text(s) << "\n";
        if (!cert.all_generated) run.fail();
    } else {
        res["simplicity"] = "criticality only (n >= 3)";
        t << "simplicity: criticality only for n >= 3\n";
    }

    const BoundCheck bc = gk_dimension_bound_check(gk.value(), split);
    res["gk_dimension_bound"] = {{"pass", bc.pass}, {"detail", bc.detail}};
    t << "gk bound: " << (bc.pass ? "pass, " : "VIOLATION, ") << bc.detail << "\n";
    if (!bc.pass) run.fail();
    res["roundtrip"] = roundtrip;
    run.report["results"] = res;
}

void cmd_induce(Run& run, const Options& o) {
    const AlgebraConfig c = require_config(o);
    header(run, o, &c, resolve_seed(o, &c));
    invariants(run, c);
    const ExponentSystem split = c.split_system();
    const AlgebraPtr ctx = Algebra::make(split, true);
    if (static_cast<int>(o.values.size()) != ctx->n() - 1)
        throw Error(ErrorKind::Config, "induce needs " + std::to_string(ctx->n() - 1) + " character values, got " +
                                           std::to_string(o.values.size()));
    Character chi{ctx, {}};
    for (const auto& v : o.values) chi.values.push_back(parse_scalar(v, ctx->field()));
    const InducedModule W(chi);
    const int n = ctx->n();
    auto& t = run.text;
    Json res;
    Json vals = Json::array();
    for (const auto& v : chi.values) vals.push_back(format_scalar(v, ctx->field()));
    res["character"] = vals;

    Json table = Json::array();
    t << "weights wt(k, j):\n";
    for (std::int64_t k = -3; k <= 3; ++k) {
        Json row = Json::array();
        t << "  k = " << std::setw(2) << k << ":";
        for (int j = 0; j + 1 < n; ++j) {
            row.push_back(format_scalar(W.weight(k, j), ctx->field()));
            t << " " << row.back().get<std::string>();
        }
        t << "\n";
        table.push_back({{"k", k}, {"weights", row}});
    }
    res["weights"] = table;

    const std::string rel = W.verify_relations(10);
    if (!rel.empty()) {
        t << "relations: FAIL " << rel << "\n";
        run.fail();
    }
    const InducedVerdict v = induced_simplicity_verdict(W);
    Json verdict{{"simple", v.simple}, {"certificate", v.certificate}, {"distinct_checked", v.distinct_checked}};
    if (v.simple) {
        t << "verdict: simple\n  " << v.certificate << "\n";
    } else {
        verdict["period"] = *v.period;
        verdict["witness"] = "(t^" + std::to_string(*v.period) + " - 1)W";
        verdict["witness_closed"] = v.witness_closed;
        verdict["witness_proper"] = v.witness_proper;
        verdict["quotient_dimension"] = v.quotient_dimension;
        t << "verdict: not simple, witness (t^" << *v.period << " - 1)W, closed=" << v.witness_closed
          << " proper=" << v.witness_proper << ", quotient dimension " << v.quotient_dimension << "\n  "
          << v.certificate << "\n";
        if (!v.witness_closed || !v.witness_proper) run.fail();
    }
    res["verdict"] = verdict;

    const auto growth = induced_growth(W, 8);
    bool linear = true;
    for (std::size_t m = 0; m < growth.size(); ++m) linear = linear && growth[m] == 2 * static_cast<std::int64_t>(m) + 1;
    res["gk"] = {{"value", 1}, {"growth", growth}, {"detail", "gk(W) = gk(V) + 1 = 0 + 1"}};
    t << "gk(W) = gk(V) + 1 = 1; f(m) = dim W_0 V_0^m:";
    for (const auto g : growth) t << " " << g;
    t << "\n";
    if (!linear) {
        t << "  growth is NOT 2m + 1\n";
        run.fail();
    }
    const BoundCheck bc = gk_dimension_bound_check(1, split);
    res["gk_dimension_bound"] = {{"pass", bc.pass}, {"detail", bc.detail}};
    t << "gk bound: " << (bc.pass ? "pass, " : "VIOLATION, ") << bc.detail << "\n";
    if (!bc.pass) run.fail();
    run.report["results"] = res;
}

void cmd_survey(Run& run, const Options& o) {
    std::vector<CorpusEntry> corpus;
    const std::uint64_t seed = resolve_seed(o, nullptr);
    header(run, o, nullptr, seed);
    if (!o.config.empty()) {
        for (const auto& c : load_corpus(o.config)) corpus.push_back({c.name, c.split_system()});
        run.report["corpus"] = o.config;
    } else {
        CorpusSearch search;
        search.entry_bound = o.bound.value_or(1);
        corpus = default_corpus(search);
        run.report["corpus"] = "built-in, search bound " + std::to_string(search.entry_bound);
    }
    SurveyOptions opt;
    opt.samples = o.samples;
    opt.K = o.K;
    opt.seed = seed;
    const SurveyReport rep = survey_conjecture(corpus, opt);
    auto& t = run.text;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je{{"name", e.name}, {"n", e.n}, {"skipped", e.skipped}};
        t << "\n[" << e.name << "]\n";
        if (e.skipped) {
            je["warning"] = e.warning;
            t << "  WARNING " << e.warning << "\n";
            entries.push_back(je);
            continue;
        }
        Json mods = Json::array();
        for (const auto& m : e.modules) {
            mods.push_back({{"kind", m.kind}, {"description", m.description}, {"seed", m.seed}, {"gk", m.gk},
                            {"simplicity_certified", m.simplicity_certified}, {"evidence", m.evidence},
                            {"gk_dimension_bound", m.bound_check}});
            t << "  " << m.kind << " seed " << m.seed << ": " << m.description << "\n    gk " << m.gk << ", "
              << (m.simplicity_certified ? "simple" : "simplicity not certified") << "; " << m.evidence << "\n";
        }
        je["modules"] = mods;
        je["multiset"] = e.multiset;
        je["conforms"] = e.conforms;
        je["violations"] = e.violations;
        t << "  multiset {";
        for (std::size_t i = 0; i < e.multiset.size(); ++i) t << (i ? ", " : "") << e.multiset[i];
        t << "} within {1, " << e.n - 1 << "}: " << (e.conforms ? "yes" : "NO") << "\n";
        for (const auto& v : e.violations) t << "  FINDING: " << v << "\n";
        entries.push_back(je);
    }
    run.report["entries"] = entries;
    run.report["conforms"] = rep.conforms;
    run.report["gk_dimension_bound_violations"] = rep.bound_violations;
    t << "\noverall: " << (rep.conforms ? "conforms" : "FINDINGS REPORTED") << ", " << rep.bound_violations
      << " gk bound violations\n";
    // A bound violation contradicts a proved inequality; a multiset outside
    // {1, n - 1} is a finding about an open question and is not an error.
    if (rep.bound_violations > 0) run.fail();
}

void cmd_selftest(Run& run, const Options& o) {
    const std::uint64_t seed = resolve_seed(o, nullptr);
    header(run, o, nullptr, seed);
    if (o.level != "quick" && o.level != "full") throw Error(ErrorKind::Config, "--level must be quick or full");
    const auto results = run_selftest(o.level == "full", seed);
    Json props = Json::array();
    std::uint64_t failed = 0;
    for (const auto& r : results) {
        props.push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures},
                         {"reproducer", r.reproducer}});
        run.text << (r.pass() ? "PASS " : "FAIL ") << r.name << ": " << r.checked - r.failures << "/" << r.checked
                 << "\n";
        if (!r.pass()) run.text << "  reproducer: " << r.reproducer << "\n";
        failed += !r.pass();
    }
    run.report["level"] = o.level;
    run.report["properties"] = props;
    run.text << results.size() - failed << " passed, " << failed << " failed\n";
    if (failed) run.fail();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum torus modules: invariants, constructions and certificates", "qtorus"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config, "JSON algebra config (survey: corpus file)");
    app.add_option("--out", o.out, "write the JSON report here");
    app.add_option("--seed", o.seed, "random seed (default: config seed, else 1)");
    app.add_option("--samples", o.samples, "samples per certificate")->check(CLI::Range(1, 100000));
    app.add_option("--K", o.K, "initial truncation |k| <= K")->check(CLI::Range(1, 1000));
    app.add_option("--growth-steps", o.growth_steps, "growth table length (0 skips)")->check(CLI::Range(0, 200));
    app.add_option("--bound", o.bound, "dim-oracle entry bound; survey search bound")->check(CLI::Range(1, 50));
    app.add_option("--level", o.level, "selftest level")->check(CLI::IsMember({"quick", "full"}));

    auto* algebra = app.add_subcommand("algebra", "center, dimension and hypothesis flags");
    auto* oracle = app.add_subcommand("dim-oracle", "dimension against the exhaustive isotropic search");
    auto* contract = app.add_subcommand("contract", "the module A/fA for a unitary f");
    contract->add_option("f", o.f, "element text, e.g. \"t^2 - x1\"")->required();
    auto* induce = app.add_subcommand("induce", "the module induced from a character of B");
    induce->add_option("values", o.values, "chi(x1) ... chi(x_{n-1})")->required();
    auto* survey = app.add_subcommand("survey", "gk dimensions of simple modules over a corpus");
    auto* selftest = app.add_subcommand("selftest", "property suites");
    for (auto* s : {algebra, oracle, contract, induce, survey, selftest}) s->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    o.command = app.get_subcommands().front()->get_name();

    Run run;
    try {
        if (o.command == "algebra") cmd_algebra(run, o);
        else if (o.command == "dim-oracle") cmd_dim_oracle(run, o);
        else if (o.command == "contract") cmd_contract(run, o);
        else if (o.command == "induce") cmd_induce(run, o);
        else if (o.command == "survey") cmd_survey(run, o);
        else cmd_selftest(run, o);
    } catch (const Error& e) {
        out << run.text.str();
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    run.report["exit_code"] = run.code;
    out << run.text.str();
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) {
            err << "error: cannot write " << o.out << "\n";
            return kExitInput;
        }
        file << run.report.dump(2) << "\n";
    }
    return run.code;
}

}  // namespace qtorus
