#pragma once

#include <string>
#include <vector>

#include "locyc/polyring/poly.hpp"

namespace locyc::polyring {

/// Polynomial over the integers.
using IntPoly = Poly<BigInt>;
/// f(t, X) in Z[t][X]: coefficients in X are polynomials in t.
using BivarPoly = Poly<IntPoly>;

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& f);

/// f / content(f), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// Greatest common divisor in Z[X], positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
    IntPoly factor;  // primitive, positive leading coefficient
    unsigned multiplicity = 0;
};

/// Yun-style decomposition of the primitive part: pp(f) = prod factor^multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

struct RationalRoot {
    BigInt num;
    BigInt den;  // positive, coprime to num
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<RationalRoot> rational_roots(const IntPoly& f);

/// sum c_i x^i y^(degree - i); degree must be at least deg f.
BigInt eval_homogeneous(const IntPoly& f, unsigned degree, const BigInt& x, const BigInt& y);

std::string to_string(const IntPoly& f, char var = 'X');

/// Builds f(t, X) from per-X-degree lists of t-coefficients (lowest first).
BivarPoly bivar_from(const std::vector<std::vector<BigInt>>& coeffs);

/// Maximal t-degree over all X-coefficients.
int deg_t(const BivarPoly& f);

/// y^deg_t(f) * f(x/y, X): the integral specialization at (x : y).
IntPoly specialize(const BivarPoly& f, const BigInt& x, const BigInt& y);

std::string to_string(const BivarPoly& f);

}  // namespace locyc::polyring
