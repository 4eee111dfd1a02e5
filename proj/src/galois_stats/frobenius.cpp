#include "locyc/galois_stats/frobenius.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "locyc/arith/sieve.hpp"
#include "locyc/galois_stats/reference.hpp"
#include "locyc/polyring/mod_poly.hpp"

namespace locyc::galois_stats {

namespace {

using polyring::IntPoly;

struct Tally {
    std::map<Partition, std::uint64_t> counts;
    std::uint64_t degenerate = 0;
};

Tally tally(const IntPoly& f, const std::vector<std::uint64_t>& primes, std::size_t lo, std::size_t hi) {
    Tally t;
    for (std::size_t i = lo; i < hi; ++i) {
        try {
            auto pattern = polyring::degree_pattern_mod_p(f, primes[i]);
            ++t.counts[Partition(pattern.begin(), pattern.end())];
        } catch (const polyring::DegenerateReduction&) {
            ++t.degenerate;
        }
    }
    return t;
}

}  // namespace

FrobeniusSample sample_frobenius(const IntPoly& f, std::uint64_t prime_budget, unsigned threads) {
    if (f.degree() < 1) throw std::invalid_argument("polynomial must have degree at least 1");
    if (prime_budget == 0) throw std::invalid_argument("prime budget must be positive");
    if (!polyring::is_squarefree(f)) throw std::invalid_argument("polynomial is not squarefree");

    FrobeniusSample out;
    out.discriminant = polyring::discriminant(f);
    out.disc_is_square = out.discriminant >= 0 && is_perfect_square(out.discriminant);
    const BigInt bad = out.discriminant * f.lead();

    std::vector<std::uint64_t> primes;
    std::int64_t lo = 2;
    for (std::int64_t span = 1 << 16; primes.size() < prime_budget; lo += span) {
        arith::for_each_prime(lo, lo + span - 1, arith::CongruenceConstraint::unconstrained(), [&](std::uint64_t p) {
            if (primes.size() >= prime_budget) return;
            if (mod_floor(bad, BigInt(p)) == 0)
                ++out.skipped;
            else
                primes.push_back(p);
        });
    }

    threads = std::max(1u, threads);
    std::vector<Tally> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (primes.size() + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
        std::size_t a = std::min(primes.size(), k * chunk), b = std::min(primes.size(), a + chunk);
        auto job = [&, k, a, b] {
            try {
                parts[k] = tally(f, primes, a, b);
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
    for (const auto& part : parts) {
        for (const auto& [lambda, n] : part.counts) out.counts[lambda] += n;
        out.skipped += part.degenerate;
    }

    out.largest_prime = primes.empty() ? 0 : primes.back();
    std::uint64_t used = 0;
    for (const auto& [lambda, n] : out.counts) used += n;
    out.primes_used = used;
    out.distribution.degree = static_cast<unsigned>(f.degree());
    if (used == 0) return out;
    for (const auto& [lambda, n] : out.counts)
        out.distribution.entries[lambda] = Rational(static_cast<long long>(n), static_cast<long long>(used));
    return out;
}

std::vector<RankedReference> rank_references(const CycleTypeDistribution& sample,
                                             const std::vector<std::string>& groups) {
    std::vector<RankedReference> out;
    for (const auto& g : groups) out.push_back({g, total_variation(sample, reference_distribution(g))});
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.tv < y.tv; });
    return out;
}

}  // namespace locyc::galois_stats
