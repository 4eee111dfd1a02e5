#pragma once

#include <vector>

#include "locyc/bigint.hpp"

namespace locyc::arith {

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending primes
    /// Set when some prime factor above 2^64 was only shown probably prime.
    bool probabilistic = false;
};

/// Complete factorization of a nonzero integer (trial division, then
/// Pollard-Brent). Throws std::invalid_argument for zero.
Factorization factor(const BigInt& n);

/// Distinct primes dividing n, ascending. Empty for n = ±1.
std::vector<BigInt> prime_support(const BigInt& n);

/// Positive divisors of a nonzero integer, ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace locyc::arith
