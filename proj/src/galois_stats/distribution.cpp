#include "locyc/galois_stats/distribution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace locyc::galois_stats {

std::string to_string(const Partition& lambda) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
    os << ']';
    return os.str();
}

Rational CycleTypeDistribution::total() const {
    Rational sum = 0;
    for (const auto& [lambda, p] : entries) sum += p;
    return sum;
}

Rational CycleTypeDistribution::probability(const Partition& lambda) const {
    auto it = entries.find(lambda);
    return it == entries.end() ? Rational(0) : it->second;
}

void CycleTypeDistribution::validate() const {
    for (const auto& [lambda, p] : entries) {
        if (std::accumulate(lambda.begin(), lambda.end(), 0u) != degree)
            throw std::invalid_argument("partition " + to_string(lambda) + " does not sum to " + std::to_string(degree));
        if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()) ||
            std::find(lambda.begin(), lambda.end(), 0u) != lambda.end())
            throw std::invalid_argument("partition " + to_string(lambda) + " is not descending and positive");
        if (p < 0) throw std::invalid_argument("negative probability for " + to_string(lambda));
    }
}

Rational total_variation(const CycleTypeDistribution& d1, const CycleTypeDistribution& d2) {
    if (d1.degree != d2.degree)
        throw std::invalid_argument("degree mismatch: " + std::to_string(d1.degree) + " vs " + std::to_string(d2.degree));
    Rational sum = 0;
    for (const auto& [lambda, p] : d1.entries) sum += abs(p - d2.probability(lambda));
    for (const auto& [lambda, p] : d2.entries)
        if (!d1.entries.count(lambda)) sum += abs(p);
    return sum / 2;
}

std::vector<Partition> partitions(unsigned m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

Partition cycle_type(const std::vector<unsigned>& perm) {
    std::vector<char> seen(perm.size(), 0);
    Partition out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            if (perm[j] >= perm.size()) throw std::invalid_argument("permutation image out of range");
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace locyc::galois_stats
