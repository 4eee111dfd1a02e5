#pragma once

#include <cstdint>

#include "locyc/bigint.hpp"

namespace locyc::arith {

/// Jacobi symbol (a|n) for odd n >= 1; throws std::invalid_argument otherwise.
int jacobi(std::int64_t a, std::int64_t n);
int jacobi(const BigInt& a, const BigInt& n);

}  // namespace locyc::arith
