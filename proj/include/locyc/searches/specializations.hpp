#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "locyc/families/ramification.hpp"
#include "locyc/searches/green_tao.hpp"

namespace locyc::searches {

using families::CurveFamily;
using families::ProjectivePoint;
using families::RuleMode;
using families::SpecializationCertificate;

/// check_green_tao rejected every admissible residue class of the search.
class HypothesisViolation : public std::runtime_error {
public:
    HypothesisViolation(const std::string& what, GreenTaoResult detail)
        : std::runtime_error(what), detail_(std::move(detail)) {}
    const GreenTaoResult& detail() const { return detail_; }

private:
    GreenTaoResult detail_;
};

/// Extra conditions x0 in t, y0 in s on the coordinates of (x0 : y0).
struct CongruencePair {
    CongruenceConstraint t = CongruenceConstraint::unconstrained();
    CongruenceConstraint s = CongruenceConstraint::unconstrained();
};

struct SpecializationQuery {
    RuleMode mode = RuleMode::StrongSplit;
    std::vector<CongruencePair> extra;
    std::optional<RatioInterval> ratio;
    std::uint64_t budget = 1000;  // largest max(|x0|, y0) visited
    std::size_t limit = 10;
    unsigned threads = 1;
};

struct Specialization {
    ProjectivePoint point;
    SpecializationCertificate certificate;
};

struct SpecializationSearchResult {
    std::vector<Specialization> hits;
    bool budget_exhausted = false;     // fewer than `limit` hits within the budget
    std::uint64_t class_modulus = 1;   // residue classes of (x0, y0) are taken mod this
    std::size_t admissible_classes = 0;
    std::size_t rejected_classes = 0;  // admissible by congruence but failing check_green_tao
};

/// Points (x0 : y0), y0 >= 1, gcd 1, at which every branch form takes a
/// prime value outside the bad-prime superset whose absolute value meets the
/// branch's congruences for `mode`, and whose certificate is
/// locally-cyclic-certified. Visited by increasing max(|x0|, y0), then x0,
/// then y0; the output does not depend on the thread count.
/// Throws std::invalid_argument if a branch form has degree > 1 or lacks a
/// rule for `mode`, and HypothesisViolation if no residue class passes
/// check_green_tao.
SpecializationSearchResult find_specializations(const CurveFamily& fam, const SpecializationQuery& query);

/// The forms of `fam` in the class x0 = M*T + u, y0 = M*S + v.
FormSystem induced_system(const CurveFamily& fam, std::uint64_t modulus, std::uint64_t u, std::uint64_t v);

}  // namespace locyc::searches
