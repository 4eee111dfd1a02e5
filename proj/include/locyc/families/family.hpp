#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locyc/families/types.hpp"

namespace locyc::families {

struct CurveFamily {
    std::string name;
    BivarPoly f;
    std::string group_label;
    std::vector<BranchPoint> branch_points;
    std::vector<BigInt> declared_bad_primes;
    bool perfect_group = false;
    std::optional<NormalizerQuotient> normalizer_quotient;

    // Derived by complete_family.
    IntPoly discriminant;
    std::vector<BigInt> bad_prime_superset;  // ascending

    bool is_bad_prime(const BigInt& p) const;
    bool infinity_is_branch_point() const;
    std::vector<HomogeneousForm> forms() const;
};

/// Validates a family and derives its discriminant and bad-prime superset
/// (declared primes, primes <= deg_X, content primes of the discriminant,
/// primes of pairwise branch-form resultants, and 2, 3). At `random_points`
/// coprime points the homogenized discriminant must factor over the
/// superset and the branch-form values. Throws ConfigurationError.
CurveFamily complete_family(CurveFamily family, unsigned random_points = 50);

/// n with every prime in `primes` removed, and every prime shared with one
/// of `values` removed.
BigInt strip_known_primes(BigInt n, const std::vector<BigInt>& primes, const std::vector<BigInt>& values);

/// Families by name. Built-ins are always present; names of the form
/// serre-tilde-<n>:<a>:<b> are constructed on request.
class FamilyRegistry {
public:
    static FamilyRegistry builtin();

    /// Completes and inserts, replacing an existing family of the same name.
    void add(CurveFamily family);

    bool contains(std::string_view name) const;
    /// Throws std::out_of_range for an unknown name.
    CurveFamily get(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::vector<CurveFamily> families_;
};

}  // namespace locyc::families
