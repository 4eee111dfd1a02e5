#include "locyc/families/ramification.hpp"

#include <algorithm>
#include <numeric>

#include "locyc/arith/factor.hpp"
#include "locyc/polyring/mod_poly.hpp"

namespace locyc::families {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedCyclic: return "certified-cyclic";
        case Verdict::CertifiedAbelian: return "certified-abelian";
        case Verdict::BadPrime: return "bad-prime";
        case Verdict::Uncertified: return "uncertified";
    }
    return "uncertified";
}

unsigned intersection_multiplicity(const ProjectivePoint& t0, const BranchPoint& b, const BigInt& p) {
    BigInt v = b.form.eval(t0.num(), t0.den());
    if (v == 0) throw std::invalid_argument("t0 = " + t0.to_string() + " lies on the branch form " + b.form.to_string());
    return valuation(v, p);
}

namespace {

bool by_prime_then_branch(const RamifiedPrime& a, const RamifiedPrime& b) {
    if (a.prime != b.prime) return a.prime < b.prime;
    return a.branch < b.branch;
}

PredicateResult check_congruence(const CongruenceConstraint& c, const BigInt& p) {
    return {"p in " + c.to_string(), c.allows(p)};
}

PredicateResult check_roots(const RootCheck& rc, const BigInt& p) {
    std::string what = "#roots(" + polyring::to_string(rc.poly) + ") mod p";
    if (!fits_uint64(p)) return {what + " = ? (prime above 2^64), need " + std::to_string(rc.required_roots), false};
    try {
        unsigned k = polyring::count_distinct_roots_mod_p(rc.poly, static_cast<std::uint64_t>(p));
        return {what + " = " + std::to_string(k) + ", need " + std::to_string(rc.required_roots), k == rc.required_roots};
    } catch (const polyring::DegenerateReduction&) {
        return {what + ": polynomial vanishes mod p", false};
    }
}

bool apply_rule(const CyclicityRule& rule, const BigInt& p, std::vector<PredicateResult>& evidence) {
    bool ok = true;
    for (const auto& c : rule.congruences) {
        evidence.push_back(check_congruence(c, p));
        ok = ok && evidence.back().passed;
    }
    for (const auto& rc : rule.root_checks) {
        evidence.push_back(check_roots(rc, p));
        ok = ok && evidence.back().passed;
    }
    for (auto& ev : evidence) {
        if (ev.predicate.rfind('[', 0) != 0) ev.predicate = "[" + to_string(rule.mode) + "] " + ev.predicate;
    }
    return ok;
}

}  // namespace

RamificationData enumerate_ramified(const CurveFamily& fam, const ProjectivePoint& t0) {
    RamificationData out;
    for (std::size_t i = 0; i < fam.branch_points.size(); ++i) {
        BigInt v = fam.branch_points[i].form.eval(t0.num(), t0.den());
        if (v == 0)
            throw std::invalid_argument("t0 = " + t0.to_string() + " is a branch point of " + fam.name + " (form " +
                                        fam.branch_points[i].form.to_string() + ")");
        out.form_values.push_back(v);
    }
    for (std::size_t i = 0; i < fam.branch_points.size(); ++i) {
        const BigInt& v = out.form_values[i];
        if (big_abs(v) == 1) continue;
        auto fac = arith::factor(v);
        out.probabilistic = out.probabilistic || fac.probabilistic;
        unsigned e = fam.branch_points[i].e;
        for (const auto& pp : fac.factors) {
            RamifiedPrime r{pp.prime, i, pp.exponent, e / std::gcd(e, pp.exponent)};
            (fam.is_bad_prime(pp.prime) ? out.bad : out.good).push_back(r);
        }
    }
    std::sort(out.good.begin(), out.good.end(), by_prime_then_branch);
    std::sort(out.bad.begin(), out.bad.end(), by_prime_then_branch);
    for (std::size_t k = 1; k < out.good.size(); ++k) {
        if (out.good[k].prime == out.good[k - 1].prime)
            throw ConfigurationError("prime " + out.good[k].prime.str() + " outside the bad-prime superset of " + fam.name +
                                     " meets branch forms " + std::to_string(out.good[k - 1].branch) + " and " +
                                     std::to_string(out.good[k].branch) + " at t0 = " + t0.to_string());
    }
    return out;
}

bool SpecializationCertificate::certified_outside_bad_primes() const {
    return std::none_of(records.begin(), records.end(),
                        [](const CertificateRecord& r) { return r.verdict == Verdict::Uncertified; });
}

SpecializationCertificate certify(const CurveFamily& fam, const ProjectivePoint& t0, std::optional<RuleMode> mode) {
    RamificationData ram = enumerate_ramified(fam, t0);
    SpecializationCertificate cert;
    cert.family = fam.name;
    cert.t0 = t0;
    cert.mode = mode;
    cert.form_values = ram.form_values;
    cert.probabilistic_primality = ram.probabilistic;

    for (const auto& r : ram.good) {
        const BranchPoint& bp = fam.branch_points[r.branch];
        CertificateRecord rec{r.prime, r.branch, r.nu, r.inertia_order, Verdict::Uncertified, {}};
        if (r.nu > 1) {
            rec.evidence.push_back({"intersection multiplicity = 1", false});
        } else if (bp.e == 1) {
            rec.evidence.push_back({"unramified branch point (e = 1)", true});
            rec.verdict = Verdict::CertifiedCyclic;
        } else {
            bool pass = false;
            if (mode) {
                if (const CyclicityRule* rule = bp.rule_for(*mode))
                    pass = apply_rule(*rule, r.prime, rec.evidence);
                else
                    rec.evidence.push_back({"rule for mode " + to_string(*mode) + " exists", false});
            } else {
                for (const auto& rule : bp.rules) {
                    std::vector<PredicateResult> ev;
                    bool ok = apply_rule(rule, r.prime, ev);
                    rec.evidence.insert(rec.evidence.end(), ev.begin(), ev.end());
                    pass = pass || ok;
                }
            }
            if (pass) {
                rec.verdict = Verdict::CertifiedCyclic;
            } else if (r.inertia_order == 2) {
                rec.evidence.push_back({"inertia of order 2 (central, decomposition group abelian)", true});
                rec.verdict = Verdict::CertifiedAbelian;
            }
        }
        cert.records.push_back(std::move(rec));
    }
    for (const auto& r : ram.bad) {
        cert.records.push_back(
            {r.prime, r.branch, r.nu, r.inertia_order, Verdict::BadPrime, {{"prime in the bad-prime superset", false}}});
        if (cert.bad_primes_touched.empty() || cert.bad_primes_touched.back() != r.prime)
            cert.bad_primes_touched.push_back(r.prime);
    }
    std::sort(cert.records.begin(), cert.records.end(), [](const CertificateRecord& a, const CertificateRecord& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        return a.branch < b.branch;
    });

    auto has = [&](Verdict v) {
        return std::any_of(cert.records.begin(), cert.records.end(), [v](const CertificateRecord& r) { return r.verdict == v; });
    };
    if (has(Verdict::Uncertified))
        cert.status = "uncertified";
    else if (has(Verdict::BadPrime))
        cert.status = "bad-primes-unresolved";
    else if (has(Verdict::CertifiedAbelian))
        cert.status = "locally-abelian-certified";
    else
        cert.status = "locally-cyclic-certified";

    BaseDegree m = cyclic_base_degree(cert);
    cert.cyclic_base_degree = m.m;
    cert.degree_lower_bound_only = m.lower_bound_only;
    return cert;
}

BaseDegree cyclic_base_degree(const SpecializationCertificate& cert) {
    BaseDegree out;
    for (const auto& r : cert.records) {
        if (r.verdict == Verdict::BadPrime) {
            out.lower_bound_only = true;
            continue;
        }
        out.m = big_lcm(out.m, BigInt(r.inertia_order));
    }
    return out;
}

}  // namespace locyc::families
