#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locyc/bigint.hpp"

namespace locyc::searches {

/// c = n^n b + (n-1)^(n-1) a with |a|, |b|, c distinct primes, |a| = 1 mod n,
/// |b| = 1 mod (n-1), and (n-1)^(n-1) X^n - n^n (X - 1) having n-1 distinct
/// roots mod c.
struct PrimeTriple {
    unsigned n = 0;
    BigInt a, b, c;
    /// Offset from the centered solution of n^n b + (n-1)^(n-1) a = c:
    /// a = a0 + l n^n, b = b0 - l (n-1)^(n-1), |a0| <= n^n / 2.
    BigInt l;

    friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
};

struct TripleQuery {
    unsigned n = 5;
    BigInt l_bound = 10000;
    BigInt c_bound = BigInt(1) << 62;
    std::uint64_t height_bound = 100000;  // largest max(|a|, |b|) visited
    std::size_t limit = 10;
    unsigned threads = 1;
};

struct TripleSearchResult {
    std::vector<PrimeTriple> triples;
    bool budget_exhausted = false;  // height bound reached before `limit` triples
};

/// Pairs (a, b) are visited by increasing max(|a|, |b|), then c, a, b; the
/// output does not depend on the thread count. Requires |a|, |b|, c > n and
/// c <= c_bound, |l| <= l_bound. Throws std::invalid_argument unless 5 <= n <= 10.
TripleSearchResult find_triples(const TripleQuery& query);

/// Centered ext-gcd offset l of (a, b) for degree n.
BigInt triple_offset(unsigned n, const BigInt& a, const BigInt& b);

}  // namespace locyc::searches
