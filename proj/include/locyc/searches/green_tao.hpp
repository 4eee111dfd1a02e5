#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locyc/arith/congruence.hpp"
#include "locyc/bigint.hpp"

namespace locyc::searches {

using arith::CongruenceConstraint;

/// a*T + b*S + c with (a, b) != (0, 0).
struct AffineForm {
    BigInt a, b, c;

    BigInt eval(const BigInt& t, const BigInt& s) const { return a * t + b * s + c; }
    std::string to_string() const;
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Closed interval [lo_num/lo_den, hi_num/hi_den] for the ratio T/S, positive denominators.
struct RatioInterval {
    BigInt lo_num, lo_den = 1, hi_num, hi_den = 1;

    /// Whether x/y (y > 0) lies in the interval.
    bool contains(const BigInt& x, const BigInt& y) const;
};

struct FormSystem {
    std::vector<AffineForm> forms;
    /// Empty, or one constraint per form on |value|.
    std::vector<CongruenceConstraint> congruences;
    std::optional<RatioInterval> ratio;
};

struct GreenTaoResult {
    bool pass = false;
    std::string reason;
    /// Dependent pair (i, j) with alpha*f_i + beta*f_j + gamma = 0.
    std::optional<std::pair<std::size_t, std::size_t>> dependent_pair;
    std::array<BigInt, 3> relation{};
    std::optional<BigInt> fixed_prime;
};

/// Hypotheses of the Green-Tao theorem for a system of affine forms:
/// pairwise affine independence, and no fixed prime divisor of the product.
/// Only primes p <= k (k forms) can be fixed unless a form has nontrivial
/// content, since k lines cover at most kp < p^2 points of F_p^2 otherwise;
/// those primes are decided by scanning all p^2 residue pairs.
/// A failing system reports every witness found: the first dependent pair
/// and the smallest fixed prime.
/// Throws std::invalid_argument for an empty system or a form with a = b = 0,
/// or a ratio interval of nonpositive length.
GreenTaoResult check_green_tao(const FormSystem& sys);

}  // namespace locyc::searches
