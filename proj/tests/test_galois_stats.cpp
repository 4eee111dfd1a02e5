#include <set>

#include "doctest.h"
#include "locyc/galois_stats/frobenius.hpp"
#include "locyc/galois_stats/reference.hpp"

using namespace locyc;
using namespace locyc::galois_stats;

namespace {

polyring::IntPoly ip(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    for (auto x : c) v.emplace_back(x);
    return polyring::IntPoly(std::move(v));
}

Rational q(long long a, long long b) { return Rational(a, b); }

}  // namespace

TEST_CASE("partitions and cycle types") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(12).size() == 77);
    CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(cycle_type({1, 2, 0, 4, 3, 5}) == Partition{3, 2, 1});
    CHECK(to_string(Partition{2, 1, 1}) == "[2,1,1]");
}

TEST_CASE("reference distributions") {
    auto s2 = symmetric_distribution(2);
    CHECK(s2.probability({1, 1}) == q(1, 2));
    CHECK(s2.probability({2}) == q(1, 2));
    auto s3 = symmetric_distribution(3);
    CHECK(s3.probability({1, 1, 1}) == q(1, 6));
    CHECK(s3.probability({2, 1}) == q(1, 2));
    CHECK(s3.probability({3}) == q(1, 3));
    auto a3 = alternating_distribution(3);
    CHECK(a3.probability({1, 1, 1}) == q(1, 3));
    CHECK(a3.probability({3}) == q(2, 3));
    CHECK(a3.entries.size() == 2);
    for (unsigned m = 1; m <= 12; ++m) {
        CHECK(symmetric_distribution(m).total() == 1);
        CHECK(alternating_distribution(m).total() == 1);
        symmetric_distribution(m).validate();
    }
    CHECK_THROWS_AS(symmetric_distribution(13), std::invalid_argument);
    CHECK_THROWS_AS(alternating_distribution(0), std::invalid_argument);
    CHECK(reference_distribution("S3") == s3);
    CHECK(reference_distribution("symmetric 3") == s3);
    CHECK(reference_distribution("A3") == a3);
    CHECK_THROWS_AS(reference_distribution("symmetric 13"), std::invalid_argument);
    CHECK_THROWS_AS(reference_distribution("M11"), std::invalid_argument);
}

TEST_CASE("PGL2(5) on the projective line over F5") {
    auto perms = pgl2_5_permutations();
    CHECK(perms.size() == 120);
    std::set<unsigned> orbit;
    for (const auto& p : perms) orbit.insert(p[0]);
    CHECK(orbit.size() == 6);
    auto d = pgl2_5_distribution();
    CHECK(d.degree == 6);
    CHECK(d.total() == 1);
    CHECK(d.probability({1, 1, 1, 1, 1, 1}) == q(1, 120));
    // class sizes of PGL2(5) = S5 acting on six points
    CHECK(d.probability({2, 2, 2}) == q(10, 120));
    CHECK(d.probability({2, 2, 1, 1}) == q(15, 120));
    CHECK(d.probability({3, 3}) == q(20, 120));
    CHECK(d.probability({4, 1, 1}) == q(30, 120));
    CHECK(d.probability({5, 1}) == q(24, 120));
    CHECK(d.probability({6}) == q(20, 120));
    CHECK(d.entries.size() == 7);
    auto explicit_group = permutation_distribution({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(explicit_group == alternating_distribution(3));
    CHECK_THROWS_AS(permutation_distribution({}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_distribution({{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("total variation") {
    auto s3 = symmetric_distribution(3);
    CHECK(total_variation(s3, s3) == 0);
    CycleTypeDistribution a{2, {{{2}, 1}}}, b{2, {{{1, 1}, 1}}};
    CHECK(total_variation(a, b) == 1);
    CHECK(total_variation(s3, alternating_distribution(3)) == q(1, 2));
    CHECK_THROWS_AS(total_variation(s3, symmetric_distribution(4)), std::invalid_argument);
}

TEST_CASE("frobenius sampling") {
    auto x2 = sample_frobenius(ip({1, 0, 1}), 1000);
    CHECK(x2.primes_used == 1000);
    CHECK(x2.skipped == 1);  // p = 2 divides disc = -4
    CHECK(total_variation(x2.distribution, symmetric_distribution(2)) <= q(5, 100));
    CHECK_FALSE(x2.disc_is_square);

    auto lin = sample_frobenius(ip({-1, 1}), 50);
    CHECK(lin.distribution.entries.size() == 1);
    CHECK(lin.distribution.probability({1}) == 1);

    CHECK_THROWS_AS(sample_frobenius(ip({1, 2, 1}), 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_frobenius(ip({3}), 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_frobenius(ip({1, 1}), 0), std::invalid_argument);

    // X^3 - 3X + 1 is cyclic of degree 3: discriminant 81
    auto c3 = sample_frobenius(ip({1, -3, 0, 1}), 2000);
    CHECK(c3.disc_is_square);
    CHECK(c3.distribution.probability({2, 1}) == 0);
    CHECK(total_variation(c3.distribution, alternating_distribution(3)) < q(5, 100));
}

TEST_CASE("frobenius sampling is reproducible and thread independent") {
    auto f = ip({1, 2, 3, 4, 5, 6, 7});
    auto a = sample_frobenius(f, 3000);
    auto b = sample_frobenius(f, 3000);
    auto c = sample_frobenius(f, 3000, 4);
    CHECK(a.counts == b.counts);
    CHECK(a.counts == c.counts);
    CHECK(a.distribution == c.distribution);
    CHECK(a.largest_prime == c.largest_prime);
    auto ranked = rank_references(a.distribution, {"symmetric 6", "pgl2_5", "alternating 6"});
    CHECK(ranked.front().group == "pgl2_5");
}
