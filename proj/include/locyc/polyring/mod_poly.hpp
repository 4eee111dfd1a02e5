#pragma once

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locyc/arith/modular.hpp"
#include "locyc/polyring/int_poly.hpp"

namespace locyc::polyring {

using arith::u64;

/// The reduction of a polynomial mod p vanishes, drops degree, or is not
/// squarefree; callers record p as a bad prime.
class DegenerateReduction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense polynomial over the field with p elements, p prime.
class ModPoly {
public:
    explicit ModPoly(u64 p) : p_(p) {}
    ModPoly(u64 p, std::vector<u64> coeffs);

    static ModPoly reduce(const IntPoly& f, u64 p);
    static ModPoly x(u64 p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(u64 p, u64 c) { return ModPoly(p, {c % p}); }

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u64 lead() const { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coeffs() const { return c_; }

    ModPoly monic() const;
    ModPoly derivative() const;
    u64 operator()(u64 at) const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Quotient and remainder; b must be nonzero.
    friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

private:
    void trim();

    u64 p_;
    std::vector<u64> c_;
};

/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(ModPoly a, ModPoly b);

/// base^e mod m.
ModPoly pow_mod(ModPoly base, u64 e, const ModPoly& m);

struct DdfComponent {
    unsigned degree = 0;  // every irreducible factor of `product` has this degree
    ModPoly product;
};

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<DdfComponent> distinct_degree_factorization(const ModPoly& f);

/// Cantor-Zassenhaus splitting of a monic squarefree product of degree-d
/// irreducibles into its monic irreducible factors.
std::vector<ModPoly> equal_degree_factorization(const ModPoly& g, unsigned d, std::mt19937_64& rng);

/// Number of distinct roots in F_p, via deg gcd(f, X^p - X).
/// Throws DegenerateReduction when f vanishes mod p.
unsigned count_distinct_roots_mod_p(const IntPoly& f, u64 p);

/// Degrees of the irreducible factors of f mod p, descending. Throws
/// DegenerateReduction when p divides lc(f) or f mod p is not squarefree.
std::vector<unsigned> degree_pattern_mod_p(const IntPoly& f, u64 p);

/// Monic irreducible factors of f mod p (same preconditions as
/// degree_pattern_mod_p), sorted by degree then coefficients.
std::vector<ModPoly> factor_mod_p(const IntPoly& f, u64 p);

/// Distinct roots of f in F_p, ascending. Throws DegenerateReduction when f vanishes mod p.
std::vector<u64> roots_mod_p(const IntPoly& f, u64 p);

}  // namespace locyc::polyring
