#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locyc/bigint.hpp"

namespace locyc::arith {

/// Allowed residue classes modulo a fixed modulus, enumerated explicitly.
class CongruenceConstraint {
public:
    /// Throws std::invalid_argument for modulus 0, an empty residue set, or a
    /// residue outside [0, modulus). Duplicates are removed.
    CongruenceConstraint(std::uint64_t modulus, std::vector<std::uint64_t> residues);

    /// The trivial constraint {mod 1, {0}}.
    static CongruenceConstraint unconstrained() { return {1, {0}}; }

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& residues() const { return residues_; }

    bool allows_residue(std::uint64_t r) const;
    bool allows(std::int64_t n) const;
    bool allows(const BigInt& n) const;

    bool is_trivial() const { return modulus_ == 1; }

    std::string to_string() const;

    friend bool operator==(const CongruenceConstraint&, const CongruenceConstraint&) = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> residues_;  // sorted, unique
};

/// Raised when merged congruence conditions admit no integer.
class UnsatisfiableConstraints : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CRT intersection; modulus is the lcm of the inputs. The empty list yields
/// the unconstrained class. Throws UnsatisfiableConstraints on an empty
/// intersection and std::overflow_error if the lcm leaves 64 bits.
CongruenceConstraint merge_constraints(std::span<const CongruenceConstraint> constraints);

CongruenceConstraint merge_constraints(const CongruenceConstraint& a, const CongruenceConstraint& b);

}  // namespace locyc::arith
