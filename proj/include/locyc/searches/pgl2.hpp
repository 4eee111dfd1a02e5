#pragma once

#include <cstdint>
#include <vector>

namespace locyc::searches {

/// True iff at least one of 2, 3, 5, 7 is a non-square mod p.
/// Throws std::invalid_argument unless p is a prime > 7.
bool pgl2_prime_filter(std::uint64_t p);

struct Pgl2Scan {
    std::uint64_t lo = 0, hi = 0;  // primes p with lo <= p <= hi
    std::uint64_t primes = 0;
    std::uint64_t passing = 0;
    std::vector<std::uint64_t> failing;  // ascending, at most `keep_failing`

    double density() const { return primes ? static_cast<double>(passing) / static_cast<double>(primes) : 0.0; }
};

/// Applies pgl2_prime_filter to every prime in [max(lo, 8), hi].
Pgl2Scan pgl2_scan(std::uint64_t lo, std::uint64_t hi, std::size_t keep_failing = 100);

}  // namespace locyc::searches
