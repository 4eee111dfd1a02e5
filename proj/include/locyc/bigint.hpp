#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace locyc {

/// Exact integer used throughout: coefficients, form values, discriminants.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.str(); }

inline bool fits_int64(const BigInt& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

inline bool fits_uint64(const BigInt& x) {
    return x >= 0 && x <= std::numeric_limits<std::uint64_t>::max();
}

inline BigInt big_pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(big_abs(a), big_abs(b));
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return big_abs(a) / big_gcd(a, b) * big_abs(b);
}

/// p-adic valuation of a nonzero integer; p must be at least 2.
unsigned valuation(const BigInt& n, const BigInt& p);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// Inverse of a modulo m (m >= 1), if gcd(a, m) = 1.
std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m);

/// Floor-mod: result in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// True iff n >= 0 is a perfect square.
bool is_perfect_square(const BigInt& n);

}  // namespace locyc
