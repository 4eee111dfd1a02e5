#include "locyc/arith/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "locyc/arith/primality.hpp"

namespace locyc::arith {

namespace {

constexpr std::uint64_t segment_length = 1u << 18;

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

void for_each_prime(std::int64_t lo, std::int64_t hi, const CongruenceConstraint& filter,
                    const std::function<void(std::uint64_t)>& visit) {
    if (hi < 2 || hi < lo) return;
    std::uint64_t first = static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2));
    std::uint64_t last = static_cast<std::uint64_t>(hi);
    const auto primes = base_primes(isqrt(last));
    std::vector<char> sieve(segment_length);

    for (std::uint64_t seg_lo = first; seg_lo <= last;) {
        std::uint64_t seg_hi = std::min(last, seg_lo + segment_length - 1);
        std::fill(sieve.begin(), sieve.end(), 1);
        for (std::uint64_t p : primes) {
            if (p * p > seg_hi) break;
            std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= seg_hi; j += p) sieve[j - seg_lo] = 0;
        }
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
            if (sieve[n - seg_lo] && filter.allows_residue(n % filter.modulus())) visit(n);
        if (seg_hi == last) break;
        seg_lo = seg_hi + 1;
    }
}

std::vector<std::uint64_t> sieve_primes(std::int64_t lo, std::int64_t hi, const CongruenceConstraint& filter) {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, filter, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::vector<std::uint64_t> primes_from(std::uint64_t start, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t lo = std::max<std::uint64_t>(start, 2);
    std::uint64_t width = std::max<std::uint64_t>(count * 16, 1024);
    while (out.size() < count) {
        for_each_prime(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(lo + width - 1),
                       CongruenceConstraint::unconstrained(), [&](std::uint64_t p) {
                           if (out.size() < count) out.push_back(p);
                       });
        lo += width;
    }
    return out;
}

}  // namespace locyc::arith
