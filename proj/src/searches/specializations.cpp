#include "locyc/searches/specializations.hpp"

#include <exception>
#include <numeric>
#include <thread>

#include "locyc/arith/modular.hpp"
#include "locyc/arith/primality.hpp"

namespace locyc::searches {

namespace {

using arith::u64;

constexpr u64 max_class_modulus = 8192;
constexpr std::uint64_t radii_per_block = 64;

struct BranchCondition {
    BigInt a, b;  // value = a*x + b*y (content included)
    CongruenceConstraint constraint = CongruenceConstraint::unconstrained();
};

struct SearchPlan {
    const CurveFamily* fam = nullptr;
    RuleMode mode = RuleMode::StrongSplit;
    std::vector<BranchCondition> conditions;
    std::optional<RatioInterval> ratio;
    u64 modulus = 1;
    std::vector<char> admissible;  // modulus^2 flags, index u * modulus + v
};

u64 mod_u64(const BigInt& a, u64 m) { return static_cast<u64>(mod_floor(a, BigInt(m))); }

bool value_allowed(const BigInt& v, const BranchCondition& cond, const CurveFamily& fam) {
    BigInt mag = big_abs(v);
    if (mag < 2) return false;
    if (!cond.constraint.allows(mag)) return false;
    if (fam.is_bad_prime(mag)) return false;
    return fits_uint64(mag) ? arith::is_prime_u64(static_cast<u64>(mag)) : arith::is_prime(mag);
}

std::optional<Specialization> try_point(const SearchPlan& plan, long long x, long long y) {
    u64 m = plan.modulus;
    u64 u = static_cast<u64>(arith::floor_mod(x, static_cast<std::int64_t>(m)));
    u64 v = static_cast<u64>(arith::floor_mod(y, static_cast<std::int64_t>(m)));
    if (!plan.admissible[u * m + v]) return std::nullopt;
    if (std::gcd(x < 0 ? -x : x, y) != 1) return std::nullopt;
    BigInt bx = x, by = y;
    if (plan.ratio && !plan.ratio->contains(bx, by)) return std::nullopt;
    for (const auto& cond : plan.conditions)
        if (!value_allowed(cond.a * bx + cond.b * by, cond, *plan.fam)) return std::nullopt;
    ProjectivePoint pt(bx, by);
    auto cert = families::certify(*plan.fam, pt, plan.mode);
    if (!cert.locally_cyclic()) return std::nullopt;
    return Specialization{pt, std::move(cert)};
}

// Shells max(|x|, y) = r for r in [r0, r1], in (r, x, y) order; at most `limit` hits.
std::vector<Specialization> scan_block(const SearchPlan& plan, std::uint64_t r0, std::uint64_t r1, std::size_t limit) {
    std::vector<Specialization> hits;
    for (std::uint64_t ru = r0; ru <= r1 && hits.size() < limit; ++ru) {
        auto r = static_cast<long long>(ru);
        for (long long x = -r; x <= r && hits.size() < limit; ++x) {
            bool edge = x == -r || x == r;
            for (long long y = edge ? 1 : r; y <= r && hits.size() < limit; ++y) {
                if (auto hit = try_point(plan, x, y)) hits.push_back(std::move(*hit));
            }
        }
    }
    return hits;
}

}  // namespace

FormSystem induced_system(const CurveFamily& fam, std::uint64_t modulus, std::uint64_t u, std::uint64_t v) {
    FormSystem sys;
    BigInt m = modulus;
    for (const auto& bp : fam.branch_points) {
        if (bp.form.degree() != 1) throw std::invalid_argument("branch form " + bp.form.to_string() + " is not linear");
        BigInt a = bp.form.coeffs()[1] * bp.form.content(), b = bp.form.coeffs()[0] * bp.form.content();
        sys.forms.push_back({a * m, b * m, a * u + b * v});
    }
    return sys;
}

SpecializationSearchResult find_specializations(const CurveFamily& fam, const SpecializationQuery& query) {
    SearchPlan plan;
    plan.fam = &fam;
    plan.mode = query.mode;
    plan.ratio = query.ratio;
    if (plan.ratio) {
        const auto& r = *plan.ratio;
        if (r.lo_den <= 0 || r.hi_den <= 0 || r.hi_num * r.lo_den <= r.lo_num * r.hi_den)
            throw std::invalid_argument("ratio interval must have positive denominators and positive length");
    }
    BigInt modulus = 1;
    for (std::size_t i = 0; i < fam.branch_points.size(); ++i) {
        const auto& bp = fam.branch_points[i];
        if (bp.form.degree() != 1)
            throw std::invalid_argument(fam.name + ": branch form " + bp.form.to_string() + " is not linear");
        BranchCondition cond;
        cond.a = bp.form.coeffs()[1] * bp.form.content();
        cond.b = bp.form.coeffs()[0] * bp.form.content();
        if (bp.e >= 2) {
            const auto* rule = bp.rule_for(query.mode);
            if (!rule)
                throw std::invalid_argument(fam.name + ": branch " + std::to_string(i) + " has no " +
                                            families::to_string(query.mode) + " rule");
            cond.constraint = arith::merge_constraints(rule->congruences);
        }
        modulus = big_lcm(modulus, BigInt(cond.constraint.modulus()));
        plan.conditions.push_back(std::move(cond));
    }
    for (const auto& pair : query.extra) {
        modulus = big_lcm(modulus, BigInt(pair.t.modulus()));
        modulus = big_lcm(modulus, BigInt(pair.s.modulus()));
    }
    if (modulus > max_class_modulus)
        throw std::invalid_argument("combined congruence modulus " + modulus.str() + " exceeds " +
                                    std::to_string(max_class_modulus));
    const u64 m = static_cast<u64>(modulus);
    plan.modulus = m;

    SpecializationSearchResult result;
    result.class_modulus = m;
    plan.admissible.assign(m * m, 0);
    std::vector<std::pair<u64, u64>> coeff_mod;
    for (const auto& cond : plan.conditions) {
        u64 mi = cond.constraint.modulus();
        coeff_mod.emplace_back(mod_u64(cond.a, mi), mod_u64(cond.b, mi));
    }
    std::optional<GreenTaoResult> last_failure;
    for (u64 u = 0; u < m; ++u) {
        for (u64 v = 0; v < m; ++v) {
            if (std::gcd(std::gcd(u, v), m) != 1) continue;
            bool ok = true;
            for (std::size_t i = 0; i < plan.conditions.size() && ok; ++i) {
                const auto& c = plan.conditions[i].constraint;
                u64 mi = c.modulus();
                u64 val = arith::add_mod(arith::mul_mod(coeff_mod[i].first, u % mi, mi),
                                         arith::mul_mod(coeff_mod[i].second, v % mi, mi), mi);
                ok = c.allows_residue(val) || c.allows_residue((mi - val) % mi);
            }
            for (const auto& pair : query.extra) {
                if (!ok) break;
                ok = pair.t.allows_residue(u % pair.t.modulus()) && pair.s.allows_residue(v % pair.s.modulus());
            }
            if (!ok) continue;
            GreenTaoResult gt = check_green_tao(induced_system(fam, m, u, v));
            if (!gt.pass) {
                ++result.rejected_classes;
                last_failure = gt;
                continue;
            }
            plan.admissible[u * m + v] = 1;
            ++result.admissible_classes;
        }
    }
    if (result.admissible_classes == 0) {
        if (last_failure)
            throw HypothesisViolation(fam.name + ": every admissible residue class fails the Green-Tao hypotheses (" +
                                          last_failure->reason + ")",
                                      *last_failure);
        GreenTaoResult none;
        none.reason = "no residue class satisfies the congruence conditions";
        throw HypothesisViolation(fam.name + ": " + none.reason, none);
    }

    const unsigned threads = std::max(1u, query.threads);
    for (std::uint64_t r = 1; r <= query.budget && result.hits.size() < query.limit;) {
        std::vector<std::vector<Specialization>> found(threads);
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) {
            std::uint64_t r0 = r + k * radii_per_block;
            if (r0 > query.budget) break;
            std::uint64_t r1 = std::min(query.budget, r0 + radii_per_block - 1);
            auto job = [&, k, r0, r1] {
                try {
                    found[k] = scan_block(plan, r0, r1, query.limit);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            };
            if (threads == 1)
                job();
            else
                pool.emplace_back(job);
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& block : found)
            for (auto& hit : block) result.hits.push_back(std::move(hit));
        r += threads * radii_per_block;
    }
    if (result.hits.size() > query.limit) result.hits.resize(query.limit);
    result.budget_exhausted = result.hits.size() < query.limit;
    return result;
}

}  // namespace locyc::searches
