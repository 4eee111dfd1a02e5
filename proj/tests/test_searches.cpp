#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"
#include "locyc/families/builtin.hpp"
#include "locyc/searches/krasner.hpp"
#include "locyc/searches/pgl2.hpp"
#include "locyc/searches/specializations.hpp"
#include "locyc/searches/triples.hpp"
#include "oracles.hpp"

using namespace locyc;
using namespace locyc::searches;

namespace {

const families::FamilyRegistry& registry() {
    static const families::FamilyRegistry reg = families::FamilyRegistry::builtin();
    return reg;
}

bool has_pair(const TripleSearchResult& r, long long a, long long b) {
    return std::any_of(r.triples.begin(), r.triples.end(), [&](const PrimeTriple& t) { return t.a == a && t.b == b; });
}

// Every triple of height <= h, by direct enumeration over integers.
std::vector<PrimeTriple> brute_triples(unsigned n, long long h) {
    std::vector<std::tuple<long long, BigInt, BigInt, BigInt>> keyed;
    BigInt A = big_pow(BigInt(n), n), B = big_pow(BigInt(n - 1), n - 1);
    for (long long a = -h; a <= h; ++a) {
        for (long long b = -h; b <= h; ++b) {
            long long aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
            if (aa <= n || bb <= n || aa % n != 1 || bb % (n - 1) != 1) continue;
            if (!oracle::trial_prime(aa) || !oracle::trial_prime(bb)) continue;
            PrimeTriple t{n, a, b, A * b + B * a, 0};
            if (t.c <= n) continue;
            if (!oracle::check_triple(t).empty()) continue;
            keyed.emplace_back(std::max(aa, bb), t.c, t.a, t.b);
        }
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<PrimeTriple> out;
    for (auto& [height, c, a, b] : keyed) out.push_back({n, a, b, c, triple_offset(n, a, b)});
    return out;
}

}  // namespace

TEST_CASE("triple search examples") {
    TripleQuery q;
    q.n = 5;
    q.limit = 1;
    auto r5 = find_triples(q);
    REQUIRE(r5.triples.size() == 1);
    CHECK(r5.triples[0] == PrimeTriple{5, 11, 13, 43441, 0});
    CHECK_FALSE(r5.budget_exhausted);

    q.n = 6;
    q.height_bound = 151;
    q.limit = 1000;
    CHECK(has_pair(find_triples(q), 7, 151));

    q.n = 7;
    q.height_bound = 4027;
    CHECK(has_pair(find_triples(q), 113, 4027));

    q.n = 8;
    q.height_bound = 5209;
    auto r8 = find_triples(q);
    CHECK(has_pair(r8, -17, 5209));
    for (const auto& t : r8.triples)
        if (t.a == -17 && t.b == 5209) CHECK(t.c == BigInt(87378517913LL));

    TripleQuery small;
    small.n = 5;
    small.c_bound = 100;
    auto none = find_triples(small);
    CHECK(none.triples.empty());
    CHECK(none.budget_exhausted);

    small.n = 4;
    CHECK_THROWS_AS(find_triples(small), std::invalid_argument);
    small.n = 11;
    CHECK_THROWS_AS(find_triples(small), std::invalid_argument);
}

TEST_CASE("triple search matches direct enumeration") {
    for (unsigned n : {5u, 6u, 7u}) {
        TripleQuery q;
        q.n = n;
        q.height_bound = 300;
        q.limit = 100000;
        auto found = find_triples(q);
        auto expect = brute_triples(n, 300);
        CHECK(found.triples.size() == expect.size());
        CHECK(found.triples == expect);
    }
}

TEST_CASE("every returned triple passes independent verification") {
    for (unsigned n = 5; n <= 10; ++n) {
        TripleQuery q;
        q.n = n;
        q.limit = 10;
        q.height_bound = 30000;
        for (const auto& t : find_triples(q).triples) {
            CHECK(oracle::check_triple(t) == "");
            CHECK(big_abs(t.l) <= q.l_bound);
            CHECK(t.c <= q.c_bound);
            BigInt A = big_pow(BigInt(n), n), B = big_pow(BigInt(n - 1), n - 1);
            BigInt a0 = t.a - t.l * A;
            CHECK(2 * big_abs(a0) <= A);
            CHECK(mod_floor(B * a0 - t.c, A) == 0);
        }
    }
}

TEST_CASE("triple search output does not depend on threads") {
    TripleQuery q;
    q.n = 5;
    q.height_bound = 20000;
    q.limit = 60;
    auto serial = find_triples(q);
    q.threads = 4;
    CHECK(find_triples(q).triples == serial.triples);
}

TEST_CASE("triple offsets") {
    CHECK(triple_offset(5, 11, 13) == 0);
    // shifting along the kernel of (a, b) -> c changes l by one
    CHECK(triple_offset(5, 11 + 3125, 13 - 256) == 1);
    CHECK(triple_offset(5, 11 - 2 * 3125, 13 + 2 * 256) == -2);
}

TEST_CASE("green-tao examples") {
    FormSystem s54{{{5, 0, 1}, {0, 8, 1}, {1280, -25000, -2869}}, {}, std::nullopt};
    CHECK(check_green_tao(s54).pass);
    FormSystem pgl{{{7, 0, 1}, {0, 6, 1}, {756, 4941258, 108 + 823543}}, {}, std::nullopt};
    CHECK(check_green_tao(pgl).pass);

    FormSystem consecutive{{{1, 0, 0}, {1, 0, 1}}, {}, std::nullopt};
    auto r = check_green_tao(consecutive);
    CHECK_FALSE(r.pass);
    REQUIRE(r.fixed_prime.has_value());
    CHECK(*r.fixed_prime == 2);

    FormSystem dependent{{{1, 1, 0}, {2, 2, 4}}, {}, std::nullopt};
    auto d = check_green_tao(dependent);
    CHECK_FALSE(d.pass);
    REQUIRE(d.dependent_pair.has_value());
    CHECK(*d.dependent_pair == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(d.relation == std::array<BigInt, 3>{2, -1, 4});

    FormSystem content{{{3, 0, 3}, {0, 1, 1}}, {}, std::nullopt};
    auto c = check_green_tao(content);
    REQUIRE(c.fixed_prime.has_value());
    CHECK(*c.fixed_prime == 3);

    CHECK_THROWS_AS(check_green_tao(FormSystem{}), std::invalid_argument);
    CHECK_THROWS_AS(check_green_tao(FormSystem{{{0, 0, 1}}, {}, std::nullopt}), std::invalid_argument);
    FormSystem bad_ratio{{{1, 0, 1}}, {}, RatioInterval{2, 1, 1, 1}};
    CHECK_THROWS_AS(check_green_tao(bad_ratio), std::invalid_argument);
}

TEST_CASE("green-tao fixed-divisor scan agrees with random sampling") {
    std::mt19937_64 rng(53);
    auto coef = [&] { return BigInt(static_cast<long long>(rng() % 13) - 6); };
    int passes = 0, fixed = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FormSystem sys;
        std::size_t k = 1 + rng() % 4;
        while (sys.forms.size() < k) {
            AffineForm f{coef(), coef(), coef()};
            if (f.a != 0 || f.b != 0) sys.forms.push_back(f);
        }
        auto res = check_green_tao(sys);
        if (res.dependent_pair && !res.fixed_prime) continue;
        std::vector<std::uint64_t> primes = arith::sieve_primes(2, static_cast<std::int64_t>(std::max<std::size_t>(k, 2)));
        if (res.fixed_prime && *res.fixed_prime > static_cast<long long>(primes.back()))
            primes.push_back(static_cast<std::uint64_t>(*res.fixed_prime));
        for (auto p : primes) {
            // only the smallest fixed prime is reported
            if (res.fixed_prime && *res.fixed_prime < p) break;
            bool found_unit = false;
            for (int s = 0; s < 100000 && !found_unit; ++s) {
                BigInt t = static_cast<long long>(rng() % 2000001) - 1000000;
                BigInt u = static_cast<long long>(rng() % 2000001) - 1000000;
                BigInt prod = 1;
                for (const auto& f : sys.forms) prod *= f.eval(t, u);
                found_unit = mod_floor(prod, BigInt(p)) != 0;
            }
            bool claimed_fixed = res.fixed_prime && *res.fixed_prime == p;
            CHECK(found_unit == !claimed_fixed);
        }
        if (res.pass) ++passes;
        if (res.fixed_prime) ++fixed;
    }
    CHECK(passes > 10);
    CHECK(fixed > 5);
}

TEST_CASE("specialization search: serre5 quotient mode") {
    auto fam = registry().get("serre5");
    SpecializationQuery q;
    q.mode = families::RuleMode::QuotientCyclic;
    q.budget = 2000;
    q.limit = 5;
    auto res = find_specializations(fam, q);
    REQUIRE(res.hits.size() == 5);
    CHECK(res.class_modulus == 40);
    for (const auto& h : res.hits) {
        const auto& v = h.certificate.form_values;
        std::set<BigInt> distinct;
        for (const auto& x : v) {
            CHECK(arith::is_prime(x));
            distinct.insert(big_abs(x));
        }
        CHECK(distinct.size() == 3);
        CHECK(big_abs(v[0]) % 5 == 1);
        CHECK(big_abs(v[1]) % 4 == 1);
        BigInt r8 = big_abs(v[2]) % 8;
        CHECK((r8 == 1 || r8 == 3));
        for (const auto& r : h.certificate.records) CHECK(r.verdict == families::Verdict::CertifiedCyclic);
        CHECK(h.certificate.locally_cyclic());
    }
    CHECK(res.hits[0].point == families::ProjectivePoint(-11, 13));

    q.threads = 3;
    auto par = find_specializations(fam, q);
    REQUIRE(par.hits.size() == res.hits.size());
    for (std::size_t i = 0; i < res.hits.size(); ++i) CHECK(par.hits[i].point == res.hits[i].point);
}

TEST_CASE("specialization search: pgl27 strong mode and extra constraints") {
    auto fam = registry().get("pgl27");
    SpecializationQuery q;
    q.budget = 2000;
    q.limit = 1;
    auto res = find_specializations(fam, q);
    REQUIRE(res.hits.size() == 1);
    const auto& p = res.hits[0].point;
    CHECK(big_abs(p.num()) % 7 == 1);
    CHECK(p.den() % 6 == 1);
    BigInt third = 108 * p.num() + 823543 * p.den();
    CHECK(arith::is_prime(third));
    CHECK(big_abs(third) % 6 == 1);

    auto serre = registry().get("serre5");
    SpecializationQuery e;
    e.mode = families::RuleMode::QuotientCyclic;
    e.budget = 3000;
    e.limit = 3;
    e.extra.push_back({arith::CongruenceConstraint(3, {2}), arith::CongruenceConstraint::unconstrained()});
    e.ratio = RatioInterval{-1, 1, 0, 1};
    auto er = find_specializations(serre, e);
    REQUIRE_FALSE(er.hits.empty());
    for (const auto& h : er.hits) {
        CHECK(mod_floor(h.point.num(), BigInt(3)) == 2);
        CHECK(h.point.num() <= 0);
        CHECK(h.point.num() >= -h.point.den());
    }
}

TEST_CASE("specialization search refusals") {
    families::CurveFamily fam;
    fam.name = "forced-even";
    for (auto form : {polyring::HomogeneousForm::T(), polyring::HomogeneousForm::S(), polyring::HomogeneousForm::linear(1, 1)}) {
        families::BranchPoint bp;
        bp.form = form;
        bp.e = 2;
        bp.rules.push_back(families::CyclicityRule{});
        fam.branch_points.push_back(bp);
    }
    fam.bad_prime_superset = {2, 3};
    try {
        find_specializations(fam, {});
        FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation& e) {
        REQUIRE(e.detail().fixed_prime.has_value());
        CHECK(*e.detail().fixed_prime == 2);
    }

    fam.branch_points[2].form = polyring::HomogeneousForm({1, 0, 1});
    CHECK_THROWS_AS(find_specializations(fam, {}), std::invalid_argument);

    SpecializationQuery q;
    q.mode = families::RuleMode::QuotientCyclic;
    CHECK_THROWS_AS(find_specializations(registry().get("serre6"), q), std::invalid_argument);
}

TEST_CASE("pgl2 prime filter") {
    CHECK(pgl2_prime_filter(11));
    CHECK(pgl2_prime_filter(13));
    CHECK_THROWS_AS(pgl2_prime_filter(7), std::invalid_argument);
    CHECK_THROWS_AS(pgl2_prime_filter(15), std::invalid_argument);
    // smallest prime > 7 at which 2, 3, 5 and 7 are all squares
    std::uint64_t first_fail = 0;
    for (auto p : arith::sieve_primes(11, 10000)) {
        if (!pgl2_prime_filter(p)) {
            first_fail = p;
            break;
        }
    }
    CHECK(first_fail == 311);
    for (std::uint64_t q : {2, 3, 5, 7}) CHECK(oracle::pw(q, (311 - 1) / 2, 311) == 1);

    auto scan = pgl2_scan(8, 999999, 5);
    CHECK(scan.primes == 78494);
    CHECK(scan.passing == 73663);
    CHECK(scan.failing == std::vector<std::uint64_t>{311, 479, 719, 839, 1009});
}

TEST_CASE("krasner constraints") {
    using arith::CongruenceConstraint;
    auto a = krasner_constraints({3}, {0, 1}, 2);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == CongruenceConstraint(9, {0}));
    auto b = krasner_constraints({3, 5}, {1, 1}, 1);
    CHECK(b[0] == CongruenceConstraint(15, {1}));
    auto c = krasner_constraints({7}, {1, 2}, 1);
    CHECK(c[0] == CongruenceConstraint(7, {4}));
    CHECK_THROWS_AS(krasner_constraints({2}, {1, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(krasner_constraints({3}, families::ProjectivePoint::infinity(), 1), std::invalid_argument);
    CHECK_THROWS_AS(krasner_constraints({3}, {0, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(krasner_constraints({4}, {0, 1}, 1), std::invalid_argument);
}
