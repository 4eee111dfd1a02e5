#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locyc/arith/congruence.hpp"
#include "locyc/bigint.hpp"
#include "locyc/polyring/forms.hpp"

namespace locyc::families {

using arith::CongruenceConstraint;
using polyring::BivarPoly;
using polyring::HomogeneousForm;
using polyring::IntPoly;

/// Inconsistent family data (bad-prime superset violated, missing rules, ...).
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point (num : den) of the projective line: gcd(num, den) = 1, den >= 0,
/// infinity is (1 : 0).
class ProjectivePoint {
public:
    ProjectivePoint() = default;
    /// Reduces and normalizes; throws std::invalid_argument for (0, 0).
    ProjectivePoint(const BigInt& num, const BigInt& den);

    static ProjectivePoint infinity() { return {1, 0}; }
    /// Accepts "a/b", "a" and "inf".
    static ProjectivePoint parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

enum class RuleMode { StrongSplit, QuotientCyclic };

std::string to_string(RuleMode mode);
/// "strong-split"/"strong" and "quotient-cyclic"/"quotient".
RuleMode parse_rule_mode(std::string_view text);

struct RootCheck {
    IntPoly poly;
    unsigned required_roots = 0;  // distinct roots mod p that must be attained
};

/// Local predicates at a prime p under which the decomposition group at p is
/// cyclic (equal to inertia), for a given certification mode.
struct CyclicityRule {
    std::vector<CongruenceConstraint> congruences;  // on |p|
    std::vector<RootCheck> root_checks;
    RuleMode mode = RuleMode::StrongSplit;

    bool empty() const { return congruences.empty() && root_checks.empty(); }
};

struct BranchPoint {
    HomogeneousForm form;
    unsigned e = 1;
    std::string inertia;
    std::vector<CyclicityRule> rules;  // at most one per mode
    std::optional<IntPoly> residue_poly;

    const CyclicityRule* rule_for(RuleMode mode) const;
};

struct NormalizerQuotient {
    std::uint64_t order = 1;
    bool abelian = true;
    bool cyclic = true;
    bool split = true;
};

}  // namespace locyc::families
