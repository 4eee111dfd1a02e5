#include <optional>
#include <random>

#include "doctest.h"
#include "locyc/arith/congruence.hpp"
#include "locyc/arith/factor.hpp"
#include "locyc/arith/jacobi.hpp"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"
#include "oracles.hpp"

using namespace locyc;
using namespace locyc::arith;

TEST_CASE("is_prime examples") {
    CHECK_FALSE(is_prime(std::int64_t{1}));
    CHECK(is_prime(std::int64_t{43441}));
    CHECK(is_prime(std::int64_t{-17}));
    CHECK_FALSE(is_prime(std::int64_t{0}));
    CHECK_FALSE(is_prime(std::int64_t{-1}));
    CHECK(is_prime(BigInt(-17)));
}

TEST_CASE("is_prime agrees with a sieve up to 10^7") {
    const std::uint64_t limit = 10000000;
    auto sieve = oracle::eratosthenes(limit);
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n <= limit; ++n)
        if (is_prime_u64(n) != static_cast<bool>(sieve[n])) ++mismatches;
    CHECK(mismatches == 0);
    for (std::int64_t n = -1000; n < 0; ++n) CHECK(is_prime(n) == static_cast<bool>(sieve[static_cast<std::uint64_t>(-n)]));
}

TEST_CASE("is_prime near and above 2^64") {
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest prime below 2^64
    CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime_u64(3825123056546413051ULL));

    auto mersenne89 = primality((BigInt(1) << 89) - 1);
    CHECK(mersenne89.prime);
    CHECK(mersenne89.probabilistic);
    auto composite = primality(((BigInt(1) << 89) - 1) * 3);
    CHECK_FALSE(composite.prime);
    auto small = primality(BigInt(43441));
    CHECK(small.prime);
    CHECK_FALSE(small.probabilistic);
}

TEST_CASE("jacobi examples and errors") {
    CHECK(jacobi(1, 3) == 1);
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(3, 7) == -1);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(6, 9) == 0);
    CHECK_THROWS_AS(jacobi(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(1, -3), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(1, 0), std::invalid_argument);
    CHECK(jacobi(BigInt(2), BigInt(5)) == -1);
}

TEST_CASE("jacobi matches Euler's criterion and is multiplicative") {
    std::mt19937_64 rng(7);
    auto primes = sieve_primes(3, 3000);
    for (auto p : primes) {
        auto pp = static_cast<std::int64_t>(p);
        for (std::int64_t a = -5; a < 40; ++a) {
            std::uint64_t r = static_cast<std::uint64_t>(((a % pp) + pp) % pp);
            std::uint64_t e = oracle::pw(r, (p - 1) / 2, p);
            int euler = e == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(jacobi(a, pp) == euler);
        }
        for (int k = 0; k < 5; ++k) {
            std::int64_t a = static_cast<std::int64_t>(rng() % 100000), b = static_cast<std::int64_t>(rng() % 100000);
            CHECK(jacobi(a, pp) * jacobi(b, pp) == jacobi(a * b, pp));
        }
    }
}

TEST_CASE("congruence constraint invariants") {
    CongruenceConstraint c(10, {3, 1, 3});
    CHECK(c.residues() == std::vector<std::uint64_t>{1, 3});
    CHECK(c.allows(std::int64_t{11}));
    CHECK(c.allows(std::int64_t{-7}));
    CHECK_FALSE(c.allows(std::int64_t{2}));
    CHECK(c.to_string() == "{mod 10, {1,3}}");
    CHECK_THROWS_AS(CongruenceConstraint(0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceConstraint(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceConstraint(5, {5}), std::invalid_argument);
}

TEST_CASE("merge_constraints examples") {
    std::vector<CongruenceConstraint> a{{5, {1}}, {8, {1}}};
    CHECK(merge_constraints(a) == CongruenceConstraint(40, {1}));
    std::vector<CongruenceConstraint> b{{4, {1}}, {2, {0}}};
    CHECK_THROWS_AS(merge_constraints(b), UnsatisfiableConstraints);
    std::vector<CongruenceConstraint> c{{3, {0, 1, 2}}};
    CHECK(merge_constraints(c) == CongruenceConstraint(3, {0, 1, 2}));
    CHECK(merge_constraints(std::vector<CongruenceConstraint>{}) == CongruenceConstraint::unconstrained());
}

TEST_CASE("merge_constraints matches enumeration and is associative and commutative") {
    std::mt19937_64 rng(11);
    auto random_constraint = [&] {
        std::uint64_t m = 1 + rng() % 12;
        std::vector<std::uint64_t> rs;
        for (std::uint64_t r = 0; r < m; ++r)
            if (rng() % 2) rs.push_back(r);
        if (rs.empty()) rs.push_back(rng() % m);
        return CongruenceConstraint(m, rs);
    };
    auto merged = [](const CongruenceConstraint& x, const CongruenceConstraint& y) -> std::optional<CongruenceConstraint> {
        try {
            return merge_constraints(x, y);
        } catch (const UnsatisfiableConstraints&) {
            return std::nullopt;
        }
    };
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_constraint(), y = random_constraint(), z = random_constraint();
        auto xy = merged(x, y), yx = merged(y, x);
        REQUIRE(xy.has_value() == yx.has_value());
        if (xy) {
            CHECK(*xy == *yx);
            std::uint64_t m = xy->modulus();
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(m); ++t)
                CHECK(xy->allows(t) == (x.allows(t) && y.allows(t)));
        } else {
            for (std::int64_t t = 0; t < 200; ++t) CHECK_FALSE((x.allows(t) && y.allows(t)));
        }
        std::optional<CongruenceConstraint> left = xy ? merged(*xy, z) : std::nullopt;
        auto yz = merged(y, z);
        std::optional<CongruenceConstraint> right = yz ? merged(x, *yz) : std::nullopt;
        CHECK(left.has_value() == right.has_value());
        if (left && right) CHECK(*left == *right);
    }
}

TEST_CASE("sieve_primes examples") {
    CHECK(sieve_primes(2, 20, {4, {1}}) == std::vector<std::uint64_t>{5, 13, 17});
    CHECK(sieve_primes(2, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(14, 16, {4, {1}}).empty());
    CHECK(sieve_primes(10, 5).empty());
}

TEST_CASE("sieve_primes equals filtered primality and splits over subranges") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        std::int64_t lo = static_cast<std::int64_t>(rng() % 100000000000ULL);
        std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 1000000);
        CongruenceConstraint c(1 + rng() % 30, {0});
        c = CongruenceConstraint(c.modulus(), {rng() % c.modulus(), rng() % c.modulus()});
        std::vector<std::uint64_t> expect;
        for (std::int64_t n = lo; n <= hi; ++n)
            if (c.allows(n) && is_prime(n)) expect.push_back(static_cast<std::uint64_t>(n));
        CHECK(sieve_primes(lo, hi, c) == expect);
        std::int64_t mid = lo + (hi - lo) / 3;
        auto left = sieve_primes(lo, mid, c), right = sieve_primes(mid + 1, hi, c);
        left.insert(left.end(), right.begin(), right.end());
        CHECK(left == expect);
    }
    CHECK(primes_from(10, 4) == std::vector<std::uint64_t>{11, 13, 17, 19});
}

TEST_CASE("factor") {
    auto f = factor(BigInt(-2869));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 19);
    CHECK(f.factors[1].prime == 151);
    CHECK(prime_support(BigInt(150)) == std::vector<BigInt>{2, 3, 5});
    CHECK(prime_support(BigInt(1)).empty());
    CHECK(positive_divisors(BigInt(-12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(factor(BigInt(0)), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        BigInt n = 1;
        for (int k = 0; k < 3; ++k) n *= BigInt(rng() % 2000000000ULL + 2);
        auto fa = factor(n);
        BigInt prod = 1;
        for (const auto& pp : fa.factors) {
            CHECK(is_prime(pp.prime));
            for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == n);
    }
}
