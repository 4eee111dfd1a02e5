#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "locyc/galois_stats/distribution.hpp"
#include "locyc/polyring/int_poly.hpp"

namespace locyc::galois_stats {

struct FrobeniusSample {
    CycleTypeDistribution distribution;
    std::map<Partition, std::uint64_t> counts;
    std::uint64_t primes_used = 0;
    std::uint64_t skipped = 0;  // primes dividing disc(f) * lc(f), or degenerate reductions
    std::uint64_t largest_prime = 0;
    BigInt discriminant;
    bool disc_is_square = false;
};

/// Factorization patterns of f mod p over the first `prime_budget` primes not
/// dividing disc(f) * lc(f). Throws std::invalid_argument if deg f < 1,
/// f is not squarefree, or the budget is 0. Counts do not depend on `threads`.
FrobeniusSample sample_frobenius(const polyring::IntPoly& f, std::uint64_t prime_budget, unsigned threads = 1);

struct RankedReference {
    std::string group;
    Rational tv;
};

/// TV distance from `sample` to each named reference, ascending.
std::vector<RankedReference> rank_references(const CycleTypeDistribution& sample,
                                             const std::vector<std::string>& groups);

}  // namespace locyc::galois_stats
