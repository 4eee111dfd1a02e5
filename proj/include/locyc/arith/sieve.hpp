#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "locyc/arith/congruence.hpp"

namespace locyc::arith {

/// Calls `visit` for every prime p in [lo, hi] (inclusive) whose residue is
/// allowed by `filter`, in ascending order. Memory is O(sqrt(hi) + segment).
/// Disjoint subranges can be sieved independently; concatenating their
/// outputs in range order reproduces the single-range output.
void for_each_prime(std::int64_t lo, std::int64_t hi, const CongruenceConstraint& filter,
                    const std::function<void(std::uint64_t)>& visit);

std::vector<std::uint64_t> sieve_primes(std::int64_t lo, std::int64_t hi,
                                        const CongruenceConstraint& filter = CongruenceConstraint::unconstrained());

/// The first `count` primes that are >= start.
std::vector<std::uint64_t> primes_from(std::uint64_t start, std::size_t count);

}  // namespace locyc::arith
