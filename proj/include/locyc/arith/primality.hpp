#pragma once

#include <cstdint>

#include "locyc/bigint.hpp"

namespace locyc::arith {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Primality of |n|.
bool is_prime(std::int64_t n);

/// Primality of |n|. Exact below 2^64; above it the verdict is probabilistic
/// (64 Miller-Rabin rounds, error at most 2^-128).
bool is_prime(const BigInt& n);

struct PrimalityVerdict {
    bool prime = false;
    bool probabilistic = false;
};

PrimalityVerdict primality(const BigInt& n);

/// Bit length at and above which primality verdicts are probabilistic.
inline constexpr unsigned deterministic_bits = 64;

}  // namespace locyc::arith
