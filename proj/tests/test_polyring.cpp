#include <algorithm>
#include <random>

#include "doctest.h"
#include "locyc/arith/factor.hpp"
#include "locyc/arith/sieve.hpp"
#include "locyc/families/builtin.hpp"
#include "locyc/polyring/discriminant.hpp"
#include "locyc/polyring/mod_poly.hpp"
#include "oracles.hpp"

using namespace locyc;
using namespace locyc::polyring;

namespace {

IntPoly ip(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    for (auto x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

BivarPoly serre(unsigned n) { return families::serre_family(n).f; }

bool same_up_to_sign(const HomogeneousForm& a, const HomogeneousForm& b) { return a.same_primitive(b); }

bool contains_form(const std::vector<HomogeneousForm>& fs, const HomogeneousForm& f) {
    return std::any_of(fs.begin(), fs.end(), [&](const auto& g) { return same_up_to_sign(g, f); });
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    IntPoly f = ip({1, 2, 3});
    CHECK(f.degree() == 2);
    CHECK(f(BigInt(2)) == 17);
    CHECK(f.derivative() == ip({2, 6}));
    CHECK((f * ip({-1, 1})) == ip({-1, -1, -1, 3}));
    CHECK(IntPoly().is_zero());
    CHECK(to_string(ip({1, 0, 1})) == "X^2 + 1");
}

TEST_CASE("disc_in_t examples") {
    // X^5 - t(X - 1)
    IntPoly d5 = disc_in_t(serre(5));
    CHECK(d5 == ip({0, 0, 0, 0, 3125, -256}));
    // X^2 - t
    BivarPoly q = bivar_from({{0, -1}, {0}, {1}});
    CHECK(disc_in_t(q) == ip({0, 4}));
    BivarPoly lin = bivar_from({{0, -1}, {1}});
    CHECK_THROWS_AS(disc_in_t(lin), std::invalid_argument);
}

TEST_CASE("serre discriminant is t^(n-1) ((n-1)^(n-1) t - n^n) up to sign") {
    for (unsigned n = 5; n <= 10; ++n) {
        IntPoly d = disc_in_t(serre(n));
        std::vector<BigInt> c(n + 1, 0);
        c[n - 1] = -big_pow(BigInt(n), n);
        c[n] = big_pow(BigInt(n - 1), n - 1);
        IntPoly expect(c);
        CHECK((d == expect || d == -expect));
    }
}

TEST_CASE("radical_branch_forms examples") {
    auto serre5 = serre(5);
    auto locus = radical_branch_forms(disc_in_t(serre5), homogenized_disc_degree(serre5));
    REQUIRE(locus.forms.size() == 3);
    CHECK(contains_form(locus.forms, HomogeneousForm::T()));
    CHECK(contains_form(locus.forms, HomogeneousForm::S()));
    CHECK(contains_form(locus.forms, HomogeneousForm::linear(256, -3125)));
    for (std::size_t i = 0; i < locus.forms.size(); ++i) {
        if (locus.forms[i].same_primitive(HomogeneousForm::T())) CHECK(locus.multiplicities[i] == 4);
        if (locus.forms[i].same_primitive(HomogeneousForm::S())) CHECK(locus.multiplicities[i] == 3);
    }

    auto pgl = families::pgl27_family().f;
    auto lp = radical_branch_forms(disc_in_t(pgl), homogenized_disc_degree(pgl));
    REQUIRE(lp.forms.size() == 3);
    std::vector<unsigned> mult(3);
    for (std::size_t i = 0; i < 3; ++i) {
        if (lp.forms[i].same_primitive(HomogeneousForm::T())) mult[0] = lp.multiplicities[i];
        if (lp.forms[i].same_primitive(HomogeneousForm::linear(108, 823543))) mult[1] = lp.multiplicities[i];
        if (lp.forms[i].same_primitive(HomogeneousForm::S())) mult[2] = lp.multiplicities[i];
    }
    CHECK(mult == std::vector<unsigned>{6, 3, 5});

    auto lt = radical_branch_forms(ip({0, 1}), 1);
    REQUIRE(lt.forms.size() == 1);
    CHECK(lt.forms[0].same_primitive(HomogeneousForm::T()));
    auto lt2 = radical_branch_forms(ip({0, 1}), 2);
    CHECK(lt2.forms.size() == 2);
    CHECK_THROWS_AS(radical_branch_forms(IntPoly(), 3), std::invalid_argument);
}

TEST_CASE("eval_form examples") {
    auto f = HomogeneousForm::linear(256, -3125);
    CHECK(f.eval(7, 1) == -1333);
    CHECK(HomogeneousForm::S().eval(7, 1) == 1);
    CHECK(HomogeneousForm::T().eval(0, 1) == 0);
    CHECK_THROWS_AS(f.eval(0, 0), std::invalid_argument);
    HomogeneousForm g({BigInt(-6), BigInt(4)});  // 4T - 6S = -2 * (-2T + 3S) -> stored 2T - 3S, content 2
    CHECK(g.content() == 2);
    CHECK(g.eval(3, 1) == 6);
    CHECK(g.to_string() == "2*(2T - 3S)");
}

TEST_CASE("count_distinct_roots_mod_p examples") {
    CHECK(count_distinct_roots_mod_p(ip({1, 0, 1}), 5) == 2);
    CHECK(count_distinct_roots_mod_p(ip({1, 0, 1}), 7) == 0);
    auto r5 = families::serre_residue_poly(5);
    CHECK(r5 == ip({3125, -3125, 0, 0, 0, 256}));
    CHECK(count_distinct_roots_mod_p(r5, 43441) == 4);
    CHECK(oracle::brute_root_count(r5.coeffs(), 43441) == 4);
    CHECK_THROWS_AS(count_distinct_roots_mod_p(ip({7, 14}), 7), DegenerateReduction);
}

TEST_CASE("degree_pattern_mod_p examples") {
    CHECK(degree_pattern_mod_p(ip({1, 0, 1}), 5) == std::vector<unsigned>{1, 1});
    CHECK(degree_pattern_mod_p(ip({1, 0, 1}), 7) == std::vector<unsigned>{2});
    CHECK(degree_pattern_mod_p(ip({-2, 0, 0, 1}), 7) == std::vector<unsigned>{3});
    CHECK_THROWS_AS(degree_pattern_mod_p(ip({1, 2, 1}), 5), DegenerateReduction);
    CHECK_THROWS_AS(degree_pattern_mod_p(ip({1, 0, 5}), 5), DegenerateReduction);
}

TEST_CASE("root counts match brute force for p <= 10^4, degree <= 10") {
    std::mt19937_64 rng(17);
    auto primes = arith::sieve_primes(2, 10000);
    for (int trial = 0; trial < 400; ++trial) {
        unsigned p = static_cast<unsigned>(primes[rng() % primes.size()]);
        int deg = 1 + static_cast<int>(rng() % 10);
        std::vector<BigInt> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long long>(rng() % 2001) - 1000);
        IntPoly f(c);
        if (f.is_zero()) continue;
        unsigned brute = oracle::brute_root_count(f.coeffs(), p);
        bool vanishes = std::all_of(f.coeffs().begin(), f.coeffs().end(),
                                    [&](const BigInt& x) { return oracle::reduce(x, p) == 0; });
        if (vanishes) {
            CHECK_THROWS_AS(count_distinct_roots_mod_p(f, p), DegenerateReduction);
            continue;
        }
        CHECK(count_distinct_roots_mod_p(f, p) == brute);
        CHECK(roots_mod_p(f, p).size() == brute);
    }
}

TEST_CASE("degree patterns sum to the degree and factors multiply back") {
    std::mt19937_64 rng(23);
    auto primes = arith::sieve_primes(3, 2000);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uint64_t p = primes[rng() % primes.size()];
        int deg = 1 + static_cast<int>(rng() % 9);
        std::vector<BigInt> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long long>(rng() % 201) - 100);
        c.back() = 1 + rng() % 50;
        IntPoly f(c);
        std::vector<unsigned> pattern;
        try {
            pattern = degree_pattern_mod_p(f, p);
        } catch (const DegenerateReduction&) {
            continue;
        }
        unsigned sum = 0;
        for (unsigned d : pattern) sum += d;
        CHECK(sum == static_cast<unsigned>(f.degree()));
        auto factors = factor_mod_p(f, p);
        ModPoly prod = ModPoly::constant(p, 1);
        for (const auto& g : factors) prod = prod * g;
        CHECK(prod == ModPoly::reduce(f, p).monic());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("subresultant and Sylvester discriminants agree") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int deg = 2 + static_cast<int>(rng() % 7);
        std::vector<BigInt> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long long>(rng() % 41) - 20);
        if (c.back() == 0) c.back() = 3;
        IntPoly f(c);
        CHECK(discriminant(f) == sylvester_discriminant(f));
    }
}

TEST_CASE("disc_in_t specializes to the univariate discriminant") {
    std::vector<BivarPoly> fams;
    for (unsigned n = 5; n <= 10; ++n) fams.push_back(serre(n));
    fams.push_back(families::pgl27_family().f);
    std::mt19937_64 rng(31);
    for (const auto& f : fams) {
        IntPoly d = disc_in_t(f);
        unsigned hdeg = homogenized_disc_degree(f);
        for (int trial = 0; trial < 100; ++trial) {
            BigInt x = static_cast<long long>(rng() % 2001) - 1000, y = 1 + static_cast<long long>(rng() % 500);
            if (big_gcd(x, y) != 1) continue;
            IntPoly g = specialize(f, x, y);
            if (g.degree() < 2) continue;
            BigInt direct = discriminant(g);
            CHECK(direct == sylvester_discriminant(g));
            // disc(y^k f(x/y, X)) = y^(k (2d - 2)) disc(f(x/y, X))
            CHECK(direct == eval_homogeneous(d, hdeg, x, y));
        }
    }
}

TEST_CASE("branch forms carry the prime support of the discriminant") {
    std::mt19937_64 rng(37);
    for (unsigned n : {5u, 7u}) {
        auto f = serre(n);
        IntPoly d = disc_in_t(f);
        auto locus = radical_branch_forms(d, homogenized_disc_degree(f));
        for (int trial = 0; trial < 100; ++trial) {
            BigInt x = static_cast<long long>(rng() % 20001) - 10000, y = 1 + static_cast<long long>(rng() % 10000);
            if (big_gcd(x, y) != 1) continue;
            BigInt prod = 1;
            for (const auto& form : locus.forms) prod *= form.eval_primitive(x, y);
            if (prod == 0) continue;
            BigInt dv = eval_homogeneous(d, homogenized_disc_degree(f), x, y);
            auto strip = [&](BigInt v) {
                for (const auto& p : arith::prime_support(locus.content)) v = exact_div(v, big_pow(p, valuation(v, p)));
                return arith::prime_support(v);
            };
            CHECK(strip(prod) == strip(dv));
        }
    }
}

TEST_CASE("gcd, squarefree parts and rational roots") {
    IntPoly a = ip({-1, 0, 1}), b = ip({1, 2, 1});
    CHECK(polyring::gcd(a, b) == ip({1, 1}));
    CHECK_FALSE(is_squarefree(b));
    CHECK(is_squarefree(a));
    auto roots = rational_roots(ip({-3125, 256}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].num == 3125);
    CHECK(roots[0].den == 256);
    CHECK(form_resultant(HomogeneousForm::T(), HomogeneousForm::linear(256, -3125)) != 0);
    CHECK(big_abs(form_resultant(HomogeneousForm::T(), HomogeneousForm::S())) == 1);
}
