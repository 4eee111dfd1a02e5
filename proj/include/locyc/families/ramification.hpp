#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locyc/families/family.hpp"

namespace locyc::families {

enum class Verdict { CertifiedCyclic, CertifiedAbelian, BadPrime, Uncertified };

std::string to_string(Verdict v);

/// v_p(content * F(num, den)) for the branch form F. Throws
/// std::invalid_argument when t0 is a zero of F.
unsigned intersection_multiplicity(const ProjectivePoint& t0, const BranchPoint& b, const BigInt& p);

struct RamifiedPrime {
    BigInt prime;
    std::size_t branch = 0;
    unsigned nu = 0;             // intersection multiplicity
    unsigned inertia_order = 0;  // e / gcd(e, nu)
};

struct RamificationData {
    std::vector<BigInt> form_values;
    std::vector<RamifiedPrime> good;  // primes outside the bad superset, ascending
    std::vector<RamifiedPrime> bad;   // superset primes meeting a form, by (prime, branch)
    bool probabilistic = false;       // a factor was only shown probably prime
};

/// Primes meeting the branch forms at t0. A prime outside the superset that
/// meets two forms raises ConfigurationError; a point on a branch form raises
/// std::invalid_argument.
RamificationData enumerate_ramified(const CurveFamily& fam, const ProjectivePoint& t0);

struct PredicateResult {
    std::string predicate;
    bool passed = false;
};

struct CertificateRecord {
    BigInt prime;
    std::size_t branch = 0;
    unsigned nu = 0;
    unsigned inertia_order = 0;
    Verdict verdict = Verdict::Uncertified;
    std::vector<PredicateResult> evidence;
};

struct SpecializationCertificate {
    std::string family;
    ProjectivePoint t0;
    std::optional<RuleMode> mode;  // empty: a record passes under any of its rules
    std::vector<BigInt> form_values;
    std::vector<CertificateRecord> records;  // by (prime, branch)
    std::vector<BigInt> bad_primes_touched;
    BigInt cyclic_base_degree = 1;
    bool degree_lower_bound_only = false;
    bool probabilistic_primality = false;
    std::string status;  // locally-cyclic-certified, locally-abelian-certified, bad-primes-unresolved, uncertified

    bool locally_cyclic() const { return status == "locally-cyclic-certified"; }
    /// No uncertified record (bad-prime records allowed).
    bool certified_outside_bad_primes() const;
};

/// Certifies the decomposition groups at the primes meeting the branch
/// forms. A record with nu = 1 passing its rule is certified-cyclic; a failing
/// record of inertia order 2 is still certified-abelian (the order-2 inertia
/// group is central in the decomposition group, whose quotient by it is
/// cyclic); nu > 1 is uncertified.
SpecializationCertificate certify(const CurveFamily& fam, const ProjectivePoint& t0,
                                  std::optional<RuleMode> mode = std::nullopt);

struct BaseDegree {
    BigInt m = 1;
    bool lower_bound_only = false;
};

/// lcm of the inertia orders of the records that are not bad primes.
BaseDegree cyclic_base_degree(const SpecializationCertificate& cert);

}  // namespace locyc::families
