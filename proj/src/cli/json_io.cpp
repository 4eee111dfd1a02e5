#include "locyc/cli/json_io.hpp"

#include <stdexcept>

#include "locyc/jsonutil.hpp"

namespace locyc::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

Json bigints(const std::vector<BigInt>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(bigint_to_json(x));
    return arr;
}

}  // namespace

Json to_json(const families::SpecializationCertificate& cert) {
    Json records = Json::array();
    for (const auto& r : cert.records) {
        Json evidence = Json::array();
        for (const auto& e : r.evidence) evidence.push_back({{"predicate", e.predicate}, {"passed", e.passed}});
        records.push_back({{"prime", bigint_to_json(r.prime)},
                           {"branch", r.branch},
                           {"nu", r.nu},
                           {"inertiaOrder", r.inertia_order},
                           {"verdict", families::to_string(r.verdict)},
                           {"evidence", evidence}});
    }
    return {{"family", cert.family},
            {"t0", cert.t0.to_string()},
            {"mode", cert.mode ? families::to_string(*cert.mode) : "any"},
            {"formValues", bigints(cert.form_values)},
            {"records", records},
            {"badPrimesTouched", bigints(cert.bad_primes_touched)},
            {"cyclicBaseDegree", bigint_to_json(cert.cyclic_base_degree)},
            {"degreeLowerBoundOnly", cert.degree_lower_bound_only},
            {"probabilisticPrimality", cert.probabilistic_primality},
            {"status", cert.status}};
}

Json to_json(const searches::PrimeTriple& t) {
    return {{"n", t.n},
            {"a", bigint_to_json(t.a)},
            {"b", bigint_to_json(t.b)},
            {"c", bigint_to_json(t.c)},
            {"l", bigint_to_json(t.l)}};
}

Json to_json(const searches::Specialization& s) {
    return {{"x0", bigint_to_json(s.point.num())},
            {"y0", bigint_to_json(s.point.den())},
            {"certificate", to_json(s.certificate)}};
}

Json to_json(const searches::GreenTaoResult& r) {
    Json out{{"pass", r.pass}, {"reason", r.reason}};
    if (r.dependent_pair) {
        out["dependentPair"] = {r.dependent_pair->first, r.dependent_pair->second};
        out["relation"] = {bigint_to_json(r.relation[0]), bigint_to_json(r.relation[1]), bigint_to_json(r.relation[2])};
    }
    if (r.fixed_prime) out["fixedPrime"] = bigint_to_json(*r.fixed_prime);
    return out;
}

Json to_json(const searches::Pgl2Scan& scan) {
    return {{"lo", scan.lo},
            {"hi", scan.hi},
            {"primes", scan.primes},
            {"passing", scan.passing},
            {"density", scan.density()},
            {"failing", scan.failing}};
}

Json to_json(const families::CriteriaReport& r) {
    Json conds = Json::array();
    for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"conditions", conds}, {"passed", r.passed}};
}

Json rational_to_json(const galois_stats::Rational& q) {
    return {{"exact", q.str()}, {"value", static_cast<double>(q)}};
}

Json to_json(const galois_stats::CycleTypeDistribution& d) {
    Json entries = Json::array();
    for (const auto& [lambda, p] : d.entries) {
        Json e = rational_to_json(p);
        entries.push_back({{"type", galois_stats::to_string(lambda)}, {"exact", e["exact"]}, {"value", e["value"]}});
    }
    return {{"degree", d.degree}, {"entries", entries}};
}

Json to_json(const galois_stats::FrobeniusSample& s) {
    Json counts = Json::object();
    for (const auto& [lambda, n] : s.counts) counts[galois_stats::to_string(lambda)] = n;
    return {{"primesUsed", s.primes_used},
            {"skipped", s.skipped},
            {"largestPrime", s.largest_prime},
            {"discriminant", bigint_to_json(s.discriminant)},
            {"discIsSquare", s.disc_is_square},
            {"counts", counts},
            {"distribution", to_json(s.distribution)}};
}

searches::AffineForm parse_affine_form(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 3) throw std::invalid_argument("affine form '" + std::string(text) + "' is not a,b,c");
    return {parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
}

polyring::IntPoly parse_int_poly(std::string_view text) {
    std::vector<BigInt> coeffs;
    for (const auto& part : split(text, ',')) coeffs.push_back(parse_bigint(part));
    return polyring::IntPoly(std::move(coeffs));
}

std::pair<BigInt, BigInt> parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_bigint(text), BigInt(1)};
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("fraction '" + std::string(text) + "' needs a positive denominator");
    return {parse_bigint(text.substr(0, slash)), den};
}

arith::CongruenceConstraint parse_congruence(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("congruence '" + std::string(text) + "' is not modulus:r1,r2,...");
    auto mod = parse_bigint(text.substr(0, colon));
    if (mod <= 0 || !fits_uint64(mod)) throw std::invalid_argument("congruence modulus out of range");
    std::vector<std::uint64_t> residues;
    for (const auto& r : split(text.substr(colon + 1), ',')) {
        BigInt v = parse_bigint(r);
        if (v < 0 || v >= mod) throw std::invalid_argument("residue " + r + " outside [0, modulus)");
        residues.push_back(static_cast<std::uint64_t>(v));
    }
    return {static_cast<std::uint64_t>(mod), std::move(residues)};
}

}  // namespace locyc::cli
