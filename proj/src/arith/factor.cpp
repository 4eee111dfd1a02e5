#include "locyc/arith/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "locyc/arith/modular.hpp"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"

namespace locyc::arith {

namespace {

using boost::multiprecision::uint128_t;
using boost::multiprecision::uint256_t;

constexpr std::uint64_t trial_limit = 4096;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = sieve_primes(2, trial_limit);
    return primes;
}

struct U64Ring {
    using T = std::uint64_t;
    T n;
    T mul(T a, T b) const { return mul_mod(a, b, n); }
    T add(T a, T b) const { return add_mod(a, b, n); }
    T dist(T a, T b) const { return a > b ? a - b : b - a; }
    T gcd(T a, T b) const { return std::gcd(a, b); }
};

struct U128Ring {
    using T = uint128_t;
    T n;
    T mul(const T& a, const T& b) const {
        uint256_t p = uint256_t(a) * uint256_t(b);
        return static_cast<T>(p % uint256_t(n));
    }
    T add(const T& a, const T& b) const {
        uint256_t s = uint256_t(a) + uint256_t(b);
        if (s >= uint256_t(n)) s -= uint256_t(n);
        return static_cast<T>(s);
    }
    T dist(const T& a, const T& b) const { return a > b ? T(a - b) : T(b - a); }
    T gcd(const T& a, const T& b) const { return boost::multiprecision::gcd(a, b); }
};

struct BigRing {
    using T = BigInt;
    T n;
    T mul(const T& a, const T& b) const { return a * b % n; }
    T add(const T& a, const T& b) const {
        T s = a + b;
        if (s >= n) s -= n;
        return s;
    }
    T dist(const T& a, const T& b) const { return a > b ? T(a - b) : T(b - a); }
    T gcd(const T& a, const T& b) const { return boost::multiprecision::gcd(a, b); }
};

// Brent's variant of Pollard rho; n must be odd and composite.
template <class Ring>
typename Ring::T pollard_brent(const Ring& ring) {
    using T = typename Ring::T;
    const T& n = ring.n;
    for (unsigned c_seed = 1;; ++c_seed) {
        T c = T(c_seed);
        auto f = [&](const T& x) { return ring.add(ring.mul(x, x), c); };
        T y = T(2), x, ys, q = T(1), g = T(1);
        const unsigned block = 128;
        for (unsigned long long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long long i = 0; i < r; ++i) y = f(y);
            for (unsigned long long k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (unsigned long long i = 0; i < std::min<unsigned long long>(block, r - k); ++i) {
                    y = f(y);
                    q = ring.mul(q, ring.dist(x, y));
                }
                g = ring.gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = ring.gcd(ring.dist(x, ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

BigInt find_factor(const BigInt& n) {
    if (n % 2 == 0) return 2;
    if (fits_uint64(n)) return BigInt(pollard_brent(U64Ring{static_cast<std::uint64_t>(n)}));
    if (n < (BigInt(1) << 127)) return BigInt(pollard_brent(U128Ring{static_cast<uint128_t>(n)}));
    return pollard_brent(BigRing{n});
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out, bool& probabilistic) {
    if (n == 1) return;
    PrimalityVerdict v = primality(n);
    if (v.prime) {
        out[n] += 1;
        probabilistic = probabilistic || v.probabilistic;
        return;
    }
    BigInt d = find_factor(n);
    split(d, out, probabilistic);
    split(n / d, out, probabilistic);
}

}  // namespace

Factorization factor(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    BigInt m = big_abs(n);
    std::map<BigInt, unsigned> powers;
    for (std::uint64_t p : trial_primes()) {
        if (BigInt(p) * p > m) break;
        while (m % p == 0) {
            powers[BigInt(p)] += 1;
            m /= p;
        }
    }
    if (m > 1 && m < BigInt(trial_limit) * trial_limit) {
        powers[m] += 1;
        m = 1;
    }
    split(m, powers, result.probabilistic);
    for (auto& [p, e] : powers) result.factors.push_back({p, e});
    return result;
}

std::vector<BigInt> prime_support(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& pp : factor(n).factors) out.push_back(pp.prime);
    return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    std::vector<BigInt> divs{1};
    for (const auto& pp : factor(n).factors) {
        std::size_t base = divs.size();
        BigInt power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace locyc::arith
