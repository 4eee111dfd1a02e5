#pragma once

#include <cstdint>
#include <vector>

#include "locyc/arith/congruence.hpp"
#include "locyc/families/types.hpp"

namespace locyc::searches {

/// Integer values t with t = t_ref mod p^k for every p in `primes`, merged
/// into a single constraint. Throws std::invalid_argument if k = 0, a listed
/// number is not prime, or the denominator of t_ref is divisible by some p
/// (infinity included).
std::vector<arith::CongruenceConstraint> krasner_constraints(const std::vector<std::uint64_t>& primes,
                                                             const families::ProjectivePoint& t_ref, unsigned k);

}  // namespace locyc::searches
