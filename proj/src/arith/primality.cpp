#include "locyc/arith/primality.hpp"

#include <array>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "locyc/arith/modular.hpp"

namespace locyc::arith {

namespace {

constexpr std::array<u64, 12> small_primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Bases 2..37 are a deterministic witness set for n < 3.3e24.
bool strong_probable_prime(u64 n, u64 d, unsigned s, u64 base) {
    u64 x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : small_primes)
        if (!strong_probable_prime(n, d, s, base)) return false;
    return true;
}

bool is_prime(std::int64_t n) {
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    return is_prime_u64(m);
}

PrimalityVerdict primality(const BigInt& n) {
    BigInt m = big_abs(n);
    if (fits_uint64(m)) return {is_prime_u64(static_cast<std::uint64_t>(m)), false};
    // Fixed seed keeps verdicts reproducible across runs.
    std::mt19937_64 engine(0x6c6f637963ULL);
    bool prime = boost::multiprecision::miller_rabin_test(m, 64, engine);
    return {prime, prime};
}

bool is_prime(const BigInt& n) { return primality(n).prime; }

}  // namespace locyc::arith
