#include "locyc/arith/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "locyc/arith/modular.hpp"

namespace locyc::arith {

namespace {

constexpr std::size_t max_residue_count = std::size_t{1} << 24;

}  // namespace

CongruenceConstraint::CongruenceConstraint(std::uint64_t modulus, std::vector<std::uint64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
    if (modulus_ == 0) throw std::invalid_argument("congruence modulus must be positive");
    if (residues_.empty()) throw std::invalid_argument("congruence residue set must be nonempty");
    for (auto r : residues_)
        if (r >= modulus_)
            throw std::invalid_argument("residue " + std::to_string(r) + " outside [0, " + std::to_string(modulus_) +
                                        ")");
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

bool CongruenceConstraint::allows_residue(std::uint64_t r) const {
    return std::binary_search(residues_.begin(), residues_.end(), r);
}

bool CongruenceConstraint::allows(std::int64_t n) const {
    if (modulus_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return allows(BigInt(n));
    return allows_residue(static_cast<std::uint64_t>(floor_mod(n, static_cast<std::int64_t>(modulus_))));
}

bool CongruenceConstraint::allows(const BigInt& n) const {
    BigInt r = mod_floor(n, BigInt(modulus_));
    return allows_residue(static_cast<std::uint64_t>(r));
}

std::string CongruenceConstraint::to_string() const {
    std::ostringstream out;
    out << "{mod " << modulus_ << ", {";
    for (std::size_t i = 0; i < residues_.size(); ++i) out << (i ? "," : "") << residues_[i];
    out << "}}";
    return out.str();
}

CongruenceConstraint merge_constraints(const CongruenceConstraint& a, const CongruenceConstraint& b) {
    u64 m1 = a.modulus(), m2 = b.modulus();
    u64 g = std::gcd(m1, m2);
    u128 wide = static_cast<u128>(m1 / g) * m2;
    if (wide > std::numeric_limits<u64>::max()) throw std::overflow_error("merged modulus exceeds 64 bits");
    u64 lcm = static_cast<u64>(wide);
    if (a.residues().size() * b.residues().size() > max_residue_count)
        throw std::length_error("merged residue set too large");

    u64 m1g = m1 / g, m2g = m2 / g;
    u64 inv = m2g == 1 ? 0 : inv_mod(m1g % m2g, m2g);
    std::vector<u64> merged;
    for (u64 r1 : a.residues()) {
        for (u64 r2 : b.residues()) {
            if (r1 % g != r2 % g) continue;
            // x = r1 + m1 * k, with k = ((r2 - r1) / g) * inv mod m2/g
            u64 diff = sub_mod(r2 % m2, r1 % m2, m2) / g;
            u64 k = m2g == 1 ? 0 : mul_mod(diff % m2g, inv, m2g);
            u128 x = static_cast<u128>(m1) * k + r1;
            merged.push_back(static_cast<u64>(x % lcm));
        }
    }
    if (merged.empty())
        throw UnsatisfiableConstraints("no integer satisfies both " + a.to_string() + " and " + b.to_string());
    return {lcm, std::move(merged)};
}

CongruenceConstraint merge_constraints(std::span<const CongruenceConstraint> constraints) {
    CongruenceConstraint acc = CongruenceConstraint::unconstrained();
    for (const auto& c : constraints) acc = merge_constraints(acc, c);
    return acc;
}

}  // namespace locyc::arith
