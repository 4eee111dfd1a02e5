#pragma once

#include <vector>

#include "locyc/polyring/forms.hpp"
#include "locyc/polyring/int_poly.hpp"

namespace locyc::polyring {

/// Discriminant of f(t, X) with respect to X, an element of Z[t];
/// disc = (-1)^(d(d-1)/2) Res(f, f') / lc(f). Throws std::invalid_argument
/// when deg_X f < 2.
IntPoly disc_in_t(const BivarPoly& f);

/// Degree of the discriminant of f once each X-coefficient is homogenized
/// to degree deg_t f: deg_t(f) * (2 deg_X(f) - 2).
unsigned homogenized_disc_degree(const BivarPoly& f);

/// Univariate discriminant from the Sylvester determinant of f and f'.
BigInt sylvester_discriminant(const IntPoly& f);

struct BranchLocus {
    std::vector<HomogeneousForm> forms;   // primitive, pairwise distinct
    std::vector<unsigned> multiplicities; // exponent of each form in the homogenized discriminant
    BigInt content;                        // content of the discriminant, nonnegative
};

/// Distinct radical factors of d (rational roots split off as linear forms,
/// remaining squarefree pieces kept whole), homogenized inside degree
/// `homogenized_degree`; the deficit homogenized_degree - deg d becomes a
/// power of S. Throws std::invalid_argument for d = 0 or a degree below deg d.
BranchLocus radical_branch_forms(const IntPoly& d, unsigned homogenized_degree);

}  // namespace locyc::polyring
