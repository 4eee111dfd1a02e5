#include "locyc/searches/krasner.hpp"

#include <stdexcept>
#include <string>

#include "locyc/arith/primality.hpp"

namespace locyc::searches {

std::vector<arith::CongruenceConstraint> krasner_constraints(const std::vector<std::uint64_t>& primes,
                                                             const families::ProjectivePoint& t_ref, unsigned k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    std::vector<arith::CongruenceConstraint> parts;
    for (auto p : primes) {
        if (!arith::is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        BigInt pk = big_pow(BigInt(p), k);
        if (pk > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw std::invalid_argument(std::to_string(p) + "^" + std::to_string(k) + " exceeds 64 bits");
        if (mod_floor(t_ref.den(), BigInt(p)) == 0)
            throw std::invalid_argument(t_ref.to_string() + " is not a " + std::to_string(p) + "-adic integer");
        auto inv = inverse_mod(t_ref.den(), pk);
        BigInt r = mod_floor(t_ref.num() * *inv, pk);
        parts.emplace_back(static_cast<std::uint64_t>(pk), std::vector<std::uint64_t>{static_cast<std::uint64_t>(r)});
    }
    return {arith::merge_constraints(parts)};
}

}  // namespace locyc::searches
