#include "locyc/galois_stats/reference.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace locyc::galois_stats {

namespace {

constexpr unsigned max_degree = 12;

void check_degree(unsigned m) {
    if (m < 1 || m > max_degree)
        throw std::invalid_argument("reference degree must lie in [1, 12], got " + std::to_string(m));
}

Rational symmetric_weight(const Partition& lambda) {
    std::map<unsigned, unsigned> mult;
    for (unsigned j : lambda) ++mult[j];
    boost::multiprecision::cpp_int den = 1;
    for (auto [j, m] : mult) {
        for (unsigned i = 0; i < m; ++i) den *= j;
        for (unsigned i = 2; i <= m; ++i) den *= i;
    }
    return Rational(1) / Rational(den);
}

bool is_even(const Partition& lambda) {
    unsigned transpositions = 0;
    for (unsigned j : lambda) transpositions += j - 1;
    return transpositions % 2 == 0;
}

}  // namespace

CycleTypeDistribution symmetric_distribution(unsigned m) {
    check_degree(m);
    CycleTypeDistribution d;
    d.degree = m;
    for (auto& lambda : partitions(m)) d.entries[lambda] = symmetric_weight(lambda);
    return d;
}

CycleTypeDistribution alternating_distribution(unsigned m) {
    check_degree(m);
    CycleTypeDistribution d;
    d.degree = m;
    Rational even_mass = 0;
    for (auto& lambda : partitions(m)) {
        if (!is_even(lambda)) continue;
        Rational w = symmetric_weight(lambda);
        d.entries[lambda] = w;
        even_mass += w;
    }
    for (auto& [lambda, p] : d.entries) p /= even_mass;
    return d;
}

std::vector<std::vector<unsigned>> pgl2_5_permutations() {
    constexpr unsigned q = 5, inf = q;
    // Image of the point x under (a b; c d): (a x + b) / (c x + d).
    auto apply = [](unsigned a, unsigned b, unsigned c, unsigned d, unsigned x) -> unsigned {
        unsigned num, den;
        if (x == inf) {
            num = a;
            den = c;
        } else {
            num = (a * x + b) % q;
            den = (c * x + d) % q;
        }
        if (den == 0) return inf;
        unsigned inv = 1;
        while (den * inv % q != 1) ++inv;
        return num * inv % q;
    };
    std::set<std::vector<unsigned>> perms;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    if ((a * d + q * q - b * c) % q == 0) continue;
                    std::vector<unsigned> perm(q + 1);
                    for (unsigned x = 0; x <= q; ++x) perm[x] = apply(a, b, c, d, x);
                    perms.insert(perm);
                }
    return {perms.begin(), perms.end()};
}

CycleTypeDistribution permutation_distribution(const std::vector<std::vector<unsigned>>& perms) {
    if (perms.empty()) throw std::invalid_argument("empty permutation list");
    std::set<std::vector<unsigned>> unique(perms.begin(), perms.end());
    const std::size_t k = perms.front().size();
    CycleTypeDistribution d;
    d.degree = static_cast<unsigned>(k);
    for (const auto& perm : unique) {
        if (perm.size() != k) throw std::invalid_argument("permutations act on different sets");
        std::vector<unsigned> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (unsigned i = 0; i < k; ++i)
            if (sorted[i] != i) throw std::invalid_argument("list entry is not a permutation");
        d.entries[cycle_type(perm)] += Rational(1, static_cast<long long>(unique.size()));
    }
    return d;
}

CycleTypeDistribution pgl2_5_distribution() { return permutation_distribution(pgl2_5_permutations()); }

CycleTypeDistribution reference_distribution(const std::string& group) {
    static const std::regex pattern(R"((symmetric|alternating|S|A)\s*(\d+))");
    std::smatch m;
    if (group == "pgl2_5" || group == "PGL2(5)") return pgl2_5_distribution();
    if (std::regex_match(group, m, pattern)) {
        unsigned long deg = std::stoul(m[2].str());
        if (deg > max_degree) throw std::invalid_argument("reference degree must lie in [1, 12], got " + m[2].str());
        auto d = static_cast<unsigned>(deg);
        return m[1] == "symmetric" || m[1] == "S" ? symmetric_distribution(d) : alternating_distribution(d);
    }
    throw std::invalid_argument("unknown reference group '" + group + "'");
}

}  // namespace locyc::galois_stats
