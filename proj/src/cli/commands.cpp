#include "locyc/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "locyc/cli/report.hpp"
#include "locyc/families/builtin.hpp"
#include "locyc/families/config.hpp"
#include "locyc/galois_stats/reference.hpp"
#include "locyc/jsonutil.hpp"

namespace locyc::cli {

namespace {

using families::FamilyRegistry;

struct Globals {
    std::string families_path;
    bool pretty = false;
    unsigned threads = 1;
};

struct Outcome {
    RunReport report;
    int code = exit_ok;
};

BigInt parse_big_flag(const std::string& text, const char* flag) {
    try {
        return parse_bigint(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not an integer");
    }
}

std::string join(const std::vector<BigInt>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].str();
    return out;
}

FamilyRegistry load_families(const Globals& g, std::ostream& err) {
    std::string path = g.families_path;
    if (path.empty())
        if (const char* env = std::getenv("GALOIS_FAMILIES")) path = env;
    if (path.empty()) return FamilyRegistry::builtin();
    err << "loading families from " << path << "\n";
    return families::load_registry(path);
}

families::CurveFamily lookup(const FamilyRegistry& reg, const std::string& name) {
    try {
        return reg.get(name);
    } catch (const std::out_of_range&) {
        throw UsageError("unknown family '" + name + "'");
    }
}

std::optional<families::RuleMode> parse_mode(const std::string& text) {
    if (text.empty() || text == "any") return std::nullopt;
    try {
        return families::parse_rule_mode(text);
    } catch (const std::exception&) {
        throw UsageError("unknown mode '" + text + "'");
    }
}

void add_certificate_warnings(const families::SpecializationCertificate& cert, std::vector<std::string>& w) {
    if (!cert.bad_primes_touched.empty())
        w.push_back("t0 = " + cert.t0.to_string() + ": bad primes touched: " + join(cert.bad_primes_touched));
    if (cert.probabilistic_primality)
        w.push_back("t0 = " + cert.t0.to_string() + ": a prime factor is only probabilistically prime");
}

// search-triples

struct TriplesOpts {
    unsigned n = 0;
    std::string l_bound = "10000", c_bound = "10000000000";
    std::uint64_t height_bound = 100000;
    std::size_t limit = 10;
};

Outcome cmd_search_triples(const TriplesOpts& o, const Globals& g, std::ostream& err) {
    if (o.n < 5 || o.n > 10) throw UsageError("--n must lie in [5, 10]");
    searches::TripleQuery q;
    q.n = o.n;
    q.l_bound = parse_big_flag(o.l_bound, "--l-bound");
    q.c_bound = parse_big_flag(o.c_bound, "--c-bound");
    if (q.l_bound < 0 || q.c_bound < 0) throw UsageError("bounds must be nonnegative");
    q.height_bound = o.height_bound;
    q.limit = o.limit;
    q.threads = g.threads;
    err << "search-triples: n = " << q.n << ", heights up to " << q.height_bound << "\n";
    auto res = searches::find_triples(q);
    err << "search-triples: " << res.triples.size() << " triples\n";

    Outcome out;
    out.report.command = "search-triples";
    out.report.config = {{"n", q.n},
                         {"lBound", bigint_to_json(q.l_bound)},
                         {"cBound", bigint_to_json(q.c_bound)},
                         {"heightBound", q.height_bound},
                         {"limit", q.limit}};
    Json triples = Json::array();
    for (const auto& t : res.triples) triples.push_back(to_json(t));
    out.report.results = {{"triples", triples}, {"budgetExhausted", res.budget_exhausted}};
    if (res.budget_exhausted) {
        out.report.warnings.push_back("height bound " + std::to_string(q.height_bound) + " reached with " +
                                      std::to_string(res.triples.size()) + " of " + std::to_string(q.limit) +
                                      " triples");
        if (!res.triples.empty()) out.code = exit_partial;
    }
    return out;
}

// certify

struct CertifyOpts {
    std::string family, t0, mode;
};

Outcome cmd_certify(const CertifyOpts& o, const Globals& g, std::ostream& err) {
    auto reg = load_families(g, err);
    auto fam = lookup(reg, o.family);
    families::ProjectivePoint t0;
    try {
        t0 = families::ProjectivePoint::parse(o.t0);
    } catch (const std::exception& e) {
        throw UsageError("--t0: " + std::string(e.what()));
    }
    auto mode = parse_mode(o.mode);
    auto cert = families::certify(fam, t0, mode);

    Outcome out;
    out.report.command = "certify";
    out.report.config = {{"family", fam.name},
                         {"familyHash", config_hash(families::family_to_json(fam))},
                         {"t0", t0.to_string()},
                         {"mode", mode ? families::to_string(*mode) : "any"}};
    out.report.results = to_json(cert);
    add_certificate_warnings(cert, out.report.warnings);
    return out;
}

// search-spec

struct SpecOpts {
    std::string family, mode = "strong", ratio, x_congruence, y_congruence;
    std::uint64_t budget = 1000;
    std::size_t limit = 10;
};

Outcome cmd_search_spec(const SpecOpts& o, const Globals& g, std::ostream& err) {
    auto reg = load_families(g, err);
    auto fam = lookup(reg, o.family);
    searches::SpecializationQuery q;
    auto mode = parse_mode(o.mode);
    if (!mode) throw UsageError("search-spec needs --mode strong or quotient");
    q.mode = *mode;
    q.budget = o.budget;
    q.limit = o.limit;
    q.threads = g.threads;
    try {
        if (!o.ratio.empty()) {
            auto colon = o.ratio.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("expected lo:hi");
            auto [ln, ld] = parse_fraction(o.ratio.substr(0, colon));
            auto [hn, hd] = parse_fraction(o.ratio.substr(colon + 1));
            q.ratio = searches::RatioInterval{ln, ld, hn, hd};
        }
        if (!o.x_congruence.empty() || !o.y_congruence.empty()) {
            searches::CongruencePair pair;
            if (!o.x_congruence.empty()) pair.t = parse_congruence(o.x_congruence);
            if (!o.y_congruence.empty()) pair.s = parse_congruence(o.y_congruence);
            q.extra.push_back(pair);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    err << "search-spec: " << fam.name << ", radius up to " << q.budget << "\n";
    auto res = searches::find_specializations(fam, q);
    err << "search-spec: " << res.hits.size() << " specializations\n";

    Outcome out;
    out.report.command = "search-spec";
    out.report.config = {{"family", fam.name},
                         {"familyHash", config_hash(families::family_to_json(fam))},
                         {"mode", families::to_string(q.mode)},
                         {"budget", q.budget},
                         {"limit", q.limit},
                         {"ratio", o.ratio},
                         {"xCongruence", o.x_congruence},
                         {"yCongruence", o.y_congruence}};
    Json hits = Json::array();
    for (const auto& h : res.hits) {
        hits.push_back(to_json(h));
        add_certificate_warnings(h.certificate, out.report.warnings);
    }
    out.report.results = {{"hits", hits},
                          {"budgetExhausted", res.budget_exhausted},
                          {"classModulus", res.class_modulus},
                          {"admissibleClasses", res.admissible_classes},
                          {"rejectedClasses", res.rejected_classes}};
    if (res.budget_exhausted) {
        out.report.warnings.push_back("budget " + std::to_string(q.budget) + " reached with " +
                                      std::to_string(res.hits.size()) + " of " + std::to_string(q.limit) + " hits");
        if (!res.hits.empty()) out.code = exit_partial;
    }
    return out;
}

// green-tao

struct GreenTaoOpts {
    std::vector<std::string> forms;
    std::string ratio;
};

Outcome cmd_green_tao(const GreenTaoOpts& o) {
    searches::FormSystem sys;
    try {
        for (const auto& f : o.forms) sys.forms.push_back(parse_affine_form(f));
        if (!o.ratio.empty()) {
            auto colon = o.ratio.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("--ratio expects lo:hi");
            auto [ln, ld] = parse_fraction(o.ratio.substr(0, colon));
            auto [hn, hd] = parse_fraction(o.ratio.substr(colon + 1));
            sys.ratio = searches::RatioInterval{ln, ld, hn, hd};
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto res = searches::check_green_tao(sys);
    Outcome out;
    out.report.command = "green-tao";
    Json forms = Json::array();
    for (const auto& f : sys.forms) forms.push_back(f.to_string());
    out.report.config = {{"forms", forms}, {"ratio", o.ratio}};
    out.report.results = to_json(res);
    return out;
}

// pgl2-primes

struct Pgl2Opts {
    std::uint64_t lo = 8, hi = 1000000;
    std::size_t keep_failing = 20;
    std::optional<std::uint64_t> prime;
};

Outcome cmd_pgl2_primes(const Pgl2Opts& o, std::ostream& err) {
    Outcome out;
    out.report.command = "pgl2-primes";
    if (o.prime) {
        out.report.config = {{"prime", *o.prime}};
        out.report.results = {{"prime", *o.prime}, {"passes", searches::pgl2_prime_filter(*o.prime)}};
        return out;
    }
    if (o.hi < o.lo) throw UsageError("--hi must be at least --lo");
    err << "pgl2-primes: scanning [" << o.lo << ", " << o.hi << "]\n";
    auto scan = searches::pgl2_scan(o.lo, o.hi, o.keep_failing);
    out.report.config = {{"lo", o.lo}, {"hi", o.hi}, {"keepFailing", o.keep_failing}};
    out.report.results = to_json(scan);
    return out;
}

// galois-stats

struct GaloisOpts {
    std::string poly;
    unsigned residue_n = 0;
    std::uint64_t budget = 1000;
    std::vector<std::string> references;
};

Outcome cmd_galois_stats(const GaloisOpts& o, const Globals& g, std::ostream& err) {
    if (o.poly.empty() == (o.residue_n == 0)) throw UsageError("give exactly one of --poly and --residue-n");
    polyring::IntPoly f;
    if (o.residue_n) {
        if (o.residue_n < 3) throw UsageError("--residue-n must be at least 3");
        std::vector<BigInt> coeffs;
        for (unsigned i = 1; i < o.residue_n; ++i) coeffs.emplace_back(i);
        f = polyring::IntPoly(std::move(coeffs));
    } else {
        try {
            f = parse_int_poly(o.poly);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--poly: ") + e.what());
        }
    }
    auto refs = o.references;
    const auto d = static_cast<unsigned>(std::max(f.degree(), 0));
    if (refs.empty() && d >= 1 && d <= 12) {
        refs = {"symmetric " + std::to_string(d), "alternating " + std::to_string(d)};
        if (d == 6) refs.push_back("pgl2_5");
    }
    err << "galois-stats: " << polyring::to_string(f) << ", " << o.budget << " primes\n";
    auto sample = galois_stats::sample_frobenius(f, o.budget, g.threads);
    auto ranked = galois_stats::rank_references(sample.distribution, refs);

    Outcome out;
    out.report.command = "galois-stats";
    out.report.config = {{"polynomial", polyring::to_string(f)}, {"budget", o.budget}, {"references", refs}};
    Json ranking = Json::array();
    for (const auto& r : ranked) {
        Json tv = rational_to_json(r.tv);
        ranking.push_back({{"group", r.group}, {"tv", tv["value"]}, {"tvExact", tv["exact"]}});
    }
    out.report.results = {{"sample", to_json(sample)}, {"ranking", ranking}};
    if (!ranked.empty()) out.report.results["closest"] = ranked.front().group;
    out.report.warnings.push_back("closest reference is statistical evidence, not a Galois group computation");
    if (sample.skipped) out.report.warnings.push_back(std::to_string(sample.skipped) + " primes skipped as degenerate");
    return out;
}

// check-criteria

struct CriteriaOpts {
    std::vector<unsigned> e;
    bool perfect = false;
    std::optional<std::uint64_t> nq_order;
    bool nq_abelian = false, nq_cyclic = false, nq_split = false;
};

Outcome cmd_check_criteria(const CriteriaOpts& o) {
    std::optional<families::NormalizerQuotient> nq;
    if (o.nq_order) nq = families::NormalizerQuotient{*o.nq_order, o.nq_abelian, o.nq_cyclic, o.nq_split};
    if (o.e.size() < 2) throw UsageError("--e needs at least two indices");
    auto rep = families::check_locally_abelian_criteria(o.e, nq, o.perfect);
    Outcome out;
    out.report.command = "check-criteria";
    out.report.config = {{"e", o.e}, {"perfect", o.perfect}};
    if (nq)
        out.report.config["normalizerQuotient"] = {
            {"order", nq->order}, {"abelian", nq->abelian}, {"cyclic", nq->cyclic}, {"split", nq->split}};
    out.report.results = to_json(rep);
    return out;
}

// list-families

Outcome cmd_list_families(const Globals& g, std::ostream& err) {
    auto reg = load_families(g, err);
    Json fams = Json::array();
    for (const auto& name : reg.names()) {
        auto fam = reg.get(name);
        Json branches = Json::array();
        for (const auto& bp : fam.branch_points) branches.push_back({{"form", bp.form.to_string()}, {"e", bp.e}});
        Json bad = Json::array();
        for (const auto& p : fam.bad_prime_superset) bad.push_back(bigint_to_json(p));
        fams.push_back({{"name", fam.name},
                        {"groupLabel", fam.group_label},
                        {"f", polyring::to_string(fam.f)},
                        {"branchPoints", branches},
                        {"badPrimeSuperset", bad}});
    }
    Outcome out;
    out.report.command = "list-families";
    out.report.results = {{"families", fams}};
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally cyclic specializations of Galois covers", "locyc"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--families", g.families_path, "Family registry file (default: built-ins, or $GALOIS_FAMILIES)");
    app.add_flag("--pretty", g.pretty, "Indent the JSON report");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::function<Outcome()> action;

    TriplesOpts tri;
    auto* st = app.add_subcommand("search-triples", "Prime triples (a, b, c) for the degree-n family");
    st->add_option("--n", tri.n, "Degree n in [5, 10]")->required();
    st->add_option("--l-bound", tri.l_bound, "Bound on |l|")->capture_default_str();
    st->add_option("--c-bound", tri.c_bound, "Bound on c")->capture_default_str();
    st->add_option("--height-bound", tri.height_bound, "Largest max(|a|, |b|) visited")->capture_default_str();
    st->add_option("--limit", tri.limit, "Number of triples")->capture_default_str();
    st->callback([&] { action = [&] { return cmd_search_triples(tri, g, err); }; });

    CertifyOpts cert;
    auto* ce = app.add_subcommand("certify", "Local certificate of one specialization");
    ce->add_option("--family", cert.family, "Family name")->required();
    ce->add_option("--t0", cert.t0, "Point a/b or inf")->required();
    ce->add_option("--mode", cert.mode, "strong, quotient or any (default)");
    ce->callback([&] { action = [&] { return cmd_certify(cert, g, err); }; });

    SpecOpts spec;
    auto* ss = app.add_subcommand("search-spec", "Certified locally cyclic specializations");
    ss->add_option("--family", spec.family, "Family name")->required();
    ss->add_option("--mode", spec.mode, "strong or quotient")->capture_default_str();
    ss->add_option("--budget", spec.budget, "Largest max(|x0|, y0) visited")->capture_default_str();
    ss->add_option("--limit", spec.limit, "Number of hits")->capture_default_str();
    ss->add_option("--ratio", spec.ratio, "Interval lo:hi for x0/y0");
    ss->add_option("--x-congruence", spec.x_congruence, "modulus:r1,r2,... on x0");
    ss->add_option("--y-congruence", spec.y_congruence, "modulus:r1,r2,... on y0");
    ss->callback([&] { action = [&] { return cmd_search_spec(spec, g, err); }; });

    GreenTaoOpts gt;
    auto* gr = app.add_subcommand("green-tao", "Green-Tao hypotheses for affine forms aT + bS + c");
    gr->add_option("--form", gt.forms, "a,b,c (repeatable)")->required();
    gr->add_option("--ratio", gt.ratio, "Interval lo:hi for T/S");
    gr->callback([&] { action = [&] { return cmd_green_tao(gt); }; });

    Pgl2Opts pg;
    auto* pp = app.add_subcommand("pgl2-primes", "Primes at which some of 2, 3, 5, 7 is a non-square");
    pp->add_option("--lo", pg.lo, "Range start")->capture_default_str();
    pp->add_option("--hi", pg.hi, "Range end")->capture_default_str();
    pp->add_option("--keep-failing", pg.keep_failing, "Failing primes listed")->capture_default_str();
    pp->add_option("--prime", pg.prime, "Test a single prime");
    pp->callback([&] { action = [&] { return cmd_pgl2_primes(pg, err); }; });

    GaloisOpts gs;
    auto* ga = app.add_subcommand("galois-stats", "Frobenius cycle types against reference groups");
    ga->add_option("--poly", gs.poly, "Coefficients c0,c1,...");
    ga->add_option("--residue-n", gs.residue_n, "Use 1 + 2X + ... + (n-1)X^(n-2)");
    ga->add_option("--budget", gs.budget, "Number of primes")->capture_default_str();
    ga->add_option("--reference", gs.references, "symmetric m, alternating m or pgl2_5 (repeatable)");
    ga->callback([&] { action = [&] { return cmd_galois_stats(gs, g, err); }; });

    CriteriaOpts cr;
    auto* cc = app.add_subcommand("check-criteria", "Ramification-type criteria for locally abelian realizations");
    cc->add_option("--e", cr.e, "Ramification indices e1,e2,...")->required()->delimiter(',');
    cc->add_flag("--perfect", cr.perfect, "The group is perfect");
    cc->add_option("--nq-order", cr.nq_order, "Order of N(I1)/I1");
    cc->add_flag("--nq-abelian", cr.nq_abelian, "N(I1)/I1 is abelian");
    cc->add_flag("--nq-cyclic", cr.nq_cyclic, "N(I1)/I1 is cyclic");
    cc->add_flag("--nq-split", cr.nq_split, "N(I1) splits over I1");
    cc->callback([&] { action = [&] { return cmd_check_criteria(cr); }; });

    auto* lf = app.add_subcommand("list-families", "Registered families");
    lf->callback([&] { action = [&] { return cmd_list_families(g, err); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        Outcome res = action();
        Json doc = render(res.report, report_timestamp());
        out << doc.dump(g.pretty ? 2 : -1) << "\n";
        return res.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const searches::HypothesisViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const families::ConfigurationError& e) {
        err << "configuration error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace locyc::cli
