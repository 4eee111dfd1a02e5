#include "locyc/families/criteria.hpp"

#include <numeric>
#include <stdexcept>

namespace locyc::families {

CriteriaReport check_locally_abelian_criteria(const std::vector<unsigned>& e,
                                              const std::optional<NormalizerQuotient>& normalizer, bool perfect) {
    if (e.size() < 2) throw std::invalid_argument("ramification type needs at least two entries");
    for (unsigned v : e)
        if (v == 0) throw std::invalid_argument("ramification indices must be positive");

    CriteriaReport report;

    ConditionResult a{"a", true, "e_3 = ... = e_r = 2"};
    for (std::size_t i = 2; i < e.size(); ++i) {
        if (e[i] != 2) {
            a.passed = false;
            a.detail = "e_" + std::to_string(i + 1) + " = " + std::to_string(e[i]) + " != 2";
            break;
        }
    }
    report.conditions.push_back(a);

    ConditionResult b{"b", true, ""};
    unsigned g = std::gcd(e[0], e[1]);
    if (e[0] == 2) {
        b = {"b", false, "e_1 = 2"};
    } else if (e[0] == e[1]) {
        b = {"b", false, "e_1 = e_2 = " + std::to_string(e[0])};
    } else if (g != 1 && !perfect) {
        b = {"b", false, "gcd(e_1, e_2) = " + std::to_string(g) + " and the group is not perfect"};
    } else {
        b.detail = g == 1 ? "gcd(e_1, e_2) = 1" : "group is perfect";
    }
    report.conditions.push_back(b);

    ConditionResult c{"c", false, ""};
    if (!normalizer) {
        c.detail = "normalizer quotient not given";
    } else if (!normalizer->abelian) {
        c.detail = "N_G(I_1)/I_1 of order " + std::to_string(normalizer->order) + " is not abelian";
    } else if (!normalizer->split) {
        c.detail = "extension of N_G(I_1)/I_1 by I_1 does not split";
    } else {
        c.passed = true;
        c.detail = "N_G(I_1)/I_1 abelian of order " + std::to_string(normalizer->order) + ", split";
    }
    report.conditions.push_back(c);

    report.passed = a.passed && b.passed && c.passed;
    return report;
}

}  // namespace locyc::families
