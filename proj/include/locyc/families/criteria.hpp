#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locyc/families/types.hpp"

namespace locyc::families {

struct ConditionResult {
    std::string name;  // "a", "b", "c"
    bool passed = false;
    std::string detail;
};

struct CriteriaReport {
    std::vector<ConditionResult> conditions;
    bool passed = false;
};

/// Ramification-type criteria for a locally abelian realization, on the
/// indices e_1, ..., e_r (r >= 2):
///  a) e_3 = ... = e_r = 2;
///  b) e_1 not in {2, e_2}, and gcd(e_1, e_2) = 1 or the group is perfect;
///  c) N_G(I_1)/I_1 is abelian and the extension by I_1 splits.
/// Group data is taken as given. Throws std::invalid_argument for r < 2 or
/// some e_i = 0.
CriteriaReport check_locally_abelian_criteria(const std::vector<unsigned>& e,
                                              const std::optional<NormalizerQuotient>& normalizer, bool perfect);

}  // namespace locyc::families
