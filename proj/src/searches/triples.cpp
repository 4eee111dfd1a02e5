#include "locyc/searches/triples.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "locyc/arith/modular.hpp"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"
#include "locyc/polyring/mod_poly.hpp"

namespace locyc::searches {

namespace {

using arith::u64;
using i128 = __int128;

constexpr std::uint64_t heights_per_block = 2048;
constexpr std::uint64_t max_height_bound = 100000000;

struct TriplePlan {
    unsigned n = 0;
    i128 A = 0, B = 0;  // n^n, (n-1)^(n-1)
    i128 c_bound = 0;
    BigInt l_bound;
    std::vector<u64> pa, pb;  // candidate |a|, |b|, ascending
};

// (n-1)^(n-1) X^n - n^n (X - 1) has n - 1 distinct roots mod c.
bool full_root_count(const TriplePlan& plan, u64 c) {
    std::vector<u64> coeffs(plan.n + 1, 0);
    u64 A = static_cast<u64>(plan.A % c), B = static_cast<u64>(plan.B % c);
    coeffs[0] = A;
    coeffs[1] = arith::sub_mod(0, A, c);
    coeffs[plan.n] = B;
    polyring::ModPoly f(c, std::move(coeffs));
    if (f.degree() < static_cast<int>(plan.n)) return false;
    polyring::ModPoly x = polyring::ModPoly::x(c);
    polyring::ModPoly g = polyring::gcd(f, polyring::pow_mod(x, c, f) - x);
    return g.degree() == static_cast<int>(plan.n) - 1;
}

BigInt to_big(i128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<u64>(m >> 64);
    out <<= 64;
    out += static_cast<u64>(m);
    return neg ? BigInt(-out) : out;
}

void consider(const TriplePlan& plan, u64 abs_a, u64 abs_b, std::vector<PrimeTriple>& out) {
    for (int sa : {-1, 1}) {
        for (int sb : {-1, 1}) {
            i128 a = sa * static_cast<i128>(abs_a), b = sb * static_cast<i128>(abs_b);
            i128 c = plan.A * b + plan.B * a;
            if (c <= static_cast<i128>(plan.n) || c > plan.c_bound) continue;
            u64 cu = static_cast<u64>(c);
            if (cu == abs_a || cu == abs_b) continue;
            if (!arith::is_prime_u64(cu)) continue;
            if (!full_root_count(plan, cu)) continue;
            BigInt ba = to_big(a), bb = to_big(b);
            BigInt l = triple_offset(plan.n, ba, bb);
            if (big_abs(l) > plan.l_bound) continue;
            out.push_back({plan.n, ba, bb, BigInt(cu), l});
        }
    }
}

std::vector<PrimeTriple> scan_block(const TriplePlan& plan, std::uint64_t h0, std::uint64_t h1, std::size_t limit) {
    std::vector<PrimeTriple> hits;
    auto lo = std::lower_bound(plan.pa.begin(), plan.pa.end(), h0);
    auto hi = std::upper_bound(plan.pa.begin(), plan.pa.end(), h1);
    // heights in the block that occur as |a| or |b|
    std::vector<u64> heights(lo, hi);
    heights.insert(heights.end(), std::lower_bound(plan.pb.begin(), plan.pb.end(), h0),
                   std::upper_bound(plan.pb.begin(), plan.pb.end(), h1));
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    for (u64 h : heights) {
        if (hits.size() >= limit) break;
        std::vector<PrimeTriple> at_height;
        if (std::binary_search(plan.pa.begin(), plan.pa.end(), h)) {
            for (u64 b : plan.pb) {
                if (b >= h) break;
                consider(plan, h, b, at_height);
            }
        }
        if (std::binary_search(plan.pb.begin(), plan.pb.end(), h)) {
            for (u64 a : plan.pa) {
                if (a >= h) break;
                consider(plan, a, h, at_height);
            }
        }
        std::sort(at_height.begin(), at_height.end(), [](const PrimeTriple& x, const PrimeTriple& y) {
            if (x.c != y.c) return x.c < y.c;
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        });
        for (auto& t : at_height) hits.push_back(std::move(t));
    }
    if (hits.size() > limit) hits.resize(limit);
    return hits;
}

}  // namespace

BigInt triple_offset(unsigned n, const BigInt& a, const BigInt& b) {
    BigInt A = big_pow(BigInt(n), n), B = big_pow(BigInt(n - 1), n - 1);
    BigInt c = A * b + B * a;
    auto inv = inverse_mod(B, A);
    if (!inv) throw std::logic_error("n^n and (n-1)^(n-1) are not coprime");
    BigInt a0 = mod_floor(*inv * c, A);
    if (2 * a0 > A) a0 -= A;
    return exact_div(a - a0, A);
}

TripleSearchResult find_triples(const TripleQuery& query) {
    if (query.n < 5 || query.n > 10) throw std::invalid_argument("n must lie in [5, 10]");
    if (query.l_bound < 0) throw std::invalid_argument("l bound must be nonnegative");
    if (query.height_bound > max_height_bound)
        throw std::invalid_argument("height bound above " + std::to_string(max_height_bound));
    TriplePlan plan;
    plan.n = query.n;
    plan.A = 1;
    plan.B = 1;
    for (unsigned i = 0; i < query.n; ++i) plan.A *= query.n;
    for (unsigned i = 0; i + 1 < query.n; ++i) plan.B *= query.n - 1;
    if (std::gcd(static_cast<u64>(plan.A), static_cast<u64>(plan.B)) != 1)
        throw std::logic_error("n^n and (n-1)^(n-1) are not coprime");
    BigInt cap = BigInt(1) << 62;
    plan.c_bound = static_cast<long long>(std::min(query.c_bound, cap));
    plan.l_bound = query.l_bound;
    auto lo = static_cast<std::int64_t>(query.n) + 1, hi = static_cast<std::int64_t>(query.height_bound);
    plan.pa = arith::sieve_primes(lo, hi, arith::CongruenceConstraint(query.n, {1}));
    plan.pb = arith::sieve_primes(lo, hi, arith::CongruenceConstraint(query.n - 1, {1}));

    TripleSearchResult result;
    const unsigned threads = std::max(1u, query.threads);
    for (std::uint64_t h = query.n + 1; h <= query.height_bound && result.triples.size() < query.limit;) {
        std::vector<std::vector<PrimeTriple>> found(threads);
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) {
            std::uint64_t h0 = h + k * heights_per_block;
            if (h0 > query.height_bound) break;
            std::uint64_t h1 = std::min(query.height_bound, h0 + heights_per_block - 1);
            auto job = [&, k, h0, h1] {
                try {
                    found[k] = scan_block(plan, h0, h1, query.limit);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            };
            if (threads == 1)
                job();
            else
                pool.emplace_back(job);
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& block : found)
            for (auto& t : block) result.triples.push_back(std::move(t));
        h += threads * heights_per_block;
    }
    if (result.triples.size() > query.limit) result.triples.resize(query.limit);
    result.budget_exhausted = result.triples.size() < query.limit;
    return result;
}

}  // namespace locyc::searches
