#pragma once

#include <string>
#include <vector>

#include "locyc/galois_stats/distribution.hpp"

namespace locyc::galois_stats {

/// Exact cycle-type law of S_m. Throws std::invalid_argument unless 1 <= m <= 12.
CycleTypeDistribution symmetric_distribution(unsigned m);

/// Exact cycle-type law of A_m, 1 <= m <= 12.
CycleTypeDistribution alternating_distribution(unsigned m);

/// PGL2(F_5) acting on the six points of P^1(F_5), by enumeration.
CycleTypeDistribution pgl2_5_distribution();

/// The permutations of PGL2(F_5) on P^1(F_5); points are 0..4 and 5 = infinity.
std::vector<std::vector<unsigned>> pgl2_5_permutations();

/// Uniform law over an explicit list of permutations of 0..k-1 (duplicates
/// are dropped). Throws std::invalid_argument on an empty list or mixed sizes.
CycleTypeDistribution permutation_distribution(const std::vector<std::vector<unsigned>>& perms);

/// "symmetric 6", "S6", "alternating 5", "A5", "pgl2_5".
CycleTypeDistribution reference_distribution(const std::string& group);

}  // namespace locyc::galois_stats
