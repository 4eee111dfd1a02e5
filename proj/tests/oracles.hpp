#pragma once

// Slow reference implementations that share no code with the library.

#include <cstdint>
#include <string>
#include <vector>

#include "locyc/bigint.hpp"
#include "locyc/searches/triples.hpp"

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<char> eratosthenes(u64 limit) {
    std::vector<char> is(limit + 1, 1);
    is[0] = 0;
    if (limit >= 1) is[1] = 0;
    for (u64 i = 2; i * i <= limit; ++i)
        if (is[i])
            for (u64 j = i * i; j <= limit; j += i) is[j] = 0;
    return is;
}

inline u64 reduce(const locyc::BigInt& c, u64 p) {
    locyc::BigInt r = c % p;
    if (r < 0) r += p;
    return static_cast<u64>(r);
}

/// Roots of sum c_i X^i in F_p by evaluating at every residue.
inline unsigned brute_root_count(const std::vector<locyc::BigInt>& coeffs, u64 p) {
    std::vector<u64> c;
    for (const auto& x : coeffs) c.push_back(reduce(x, p));
    unsigned count = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = static_cast<u64>((static_cast<u128>(acc) * x + c[i]) % p);
        if (acc == 0) ++count;
    }
    return count;
}

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Vec = std::vector<u64>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 pw(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    for (b %= p; e; e >>= 1, b = static_cast<u64>(static_cast<u128>(b) * b % p))
        if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    return r;
}

inline Vec rem(Vec a, const Vec& m, u64 p) {
    trim(a);
    u64 inv = pw(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        u64 q = static_cast<u64>(static_cast<u128>(a.back()) * inv % p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p - static_cast<u64>(static_cast<u128>(q) * m[i] % p)) % p;
        trim(a);
    }
    return a;
}

inline Vec mulmod(const Vec& a, const Vec& b, const Vec& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u64>((r[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
    return rem(r, m, p);
}

/// deg gcd(f, X^p - X) by schoolbook arithmetic.
inline unsigned gcd_root_count(const std::vector<locyc::BigInt>& coeffs, u64 p) {
    Vec f;
    for (const auto& x : coeffs) f.push_back(reduce(x, p));
    trim(f);
    if (f.size() <= 1) return 0;
    Vec x{0, 1}, acc{1};
    Vec base = rem(x, f, p);
    for (u64 e = p; e; e >>= 1) {
        if (e & 1) acc = mulmod(acc, base, f, p);
        base = mulmod(base, base, f, p);
    }
    acc.resize(std::max<std::size_t>(acc.size(), 2), 0);
    acc[1] = (acc[1] + p - 1) % p;
    trim(acc);
    Vec a = f, b = acc;
    while (!b.empty()) {
        Vec r = rem(a, b, p);
        a = b;
        b = r;
    }
    return static_cast<unsigned>(a.size() - 1);
}

/// Re-checks every defining property of a prime triple; returns "" or the failed property.
inline std::string check_triple(const locyc::searches::PrimeTriple& t) {
    using locyc::BigInt;
    const unsigned n = t.n;
    BigInt A = 1, B = 1;
    for (unsigned i = 0; i < n; ++i) A *= n;
    for (unsigned i = 0; i + 1 < n; ++i) B *= n - 1;
    if (t.c != A * t.b + B * t.a) return "c != n^n b + (n-1)^(n-1) a";
    BigInt a = t.a < 0 ? BigInt(-t.a) : t.a, b = t.b < 0 ? BigInt(-t.b) : t.b, c = t.c < 0 ? BigInt(-t.c) : t.c;
    if (a == b || a == c || b == c) return "not distinct";
    for (const auto* v : {&a, &b, &c})
        if (!trial_prime(static_cast<u64>(*v))) return v->str() + " not prime";
    if (a % n != 1) return "|a| != 1 mod n";
    if (b % (n - 1) != 1) return "|b| != 1 mod n-1";
    std::vector<BigInt> poly(n + 1, 0);
    poly[0] = A;
    poly[1] = -A;
    poly[n] = B;
    u64 cp = static_cast<u64>(c);
    unsigned roots = cp <= 2000000 ? brute_root_count(poly, cp) : gcd_root_count(poly, cp);
    if (roots != n - 1) return "root count " + std::to_string(roots);
    return "";
}

}  // namespace oracle
