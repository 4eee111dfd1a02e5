#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locyc::galois_stats {

using Rational = boost::multiprecision::cpp_rational;

/// Cycle lengths, descending.
using Partition = std::vector<unsigned>;

std::string to_string(const Partition& lambda);  // "[2,1,1]"

struct CycleTypeDistribution {
    unsigned degree = 0;
    std::map<Partition, Rational> entries;

    Rational total() const;
    Rational probability(const Partition& lambda) const;
    /// Throws std::invalid_argument if a key does not sum to `degree`, is not
    /// descending, or a probability is negative.
    void validate() const;

    friend bool operator==(const CycleTypeDistribution&, const CycleTypeDistribution&) = default;
};

/// Half the L1 distance over the union of supports. Throws
/// std::invalid_argument on a degree mismatch.
Rational total_variation(const CycleTypeDistribution& d1, const CycleTypeDistribution& d2);

/// All partitions of m, each descending, in reverse lexicographic order.
std::vector<Partition> partitions(unsigned m);

/// Cycle type of a permutation given as images of 0..k-1.
Partition cycle_type(const std::vector<unsigned>& perm);

}  // namespace locyc::galois_stats
