#include "locyc/searches/pgl2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "locyc/arith/jacobi.hpp"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"

namespace locyc::searches {

namespace {

bool some_non_square(std::uint64_t p) {
    auto n = static_cast<std::int64_t>(p);
    for (std::int64_t q : {2, 3, 5, 7})
        if (arith::jacobi(q, n) == -1) return true;
    return false;
}

}  // namespace

bool pgl2_prime_filter(std::uint64_t p) {
    if (p <= 7 || !arith::is_prime_u64(p))
        throw std::invalid_argument("pgl2 filter needs a prime > 7, got " + std::to_string(p));
    return some_non_square(p);
}

Pgl2Scan pgl2_scan(std::uint64_t lo, std::uint64_t hi, std::size_t keep_failing) {
    Pgl2Scan out;
    out.lo = lo;
    out.hi = hi;
    lo = std::max<std::uint64_t>(lo, 8);
    if (hi < lo) return out;
    if (hi > (std::uint64_t{1} << 62)) throw std::invalid_argument("pgl2 scan range too large");
    arith::for_each_prime(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi),
                          arith::CongruenceConstraint::unconstrained(), [&](std::uint64_t p) {
                              ++out.primes;
                              if (some_non_square(p))
                                  ++out.passing;
                              else if (out.failing.size() < keep_failing)
                                  out.failing.push_back(p);
                          });
    return out;
}

}  // namespace locyc::searches
