#pragma once

#include "locyc/families/family.hpp"

namespace locyc::families {

/// X^n - t(X - 1), group S_n, n >= 3. Named "serre<n>".
CurveFamily serre_family(unsigned n);

/// ab(n^n b + a(n-1)^(n-1)) X^n - t(a(X - 1) + b X^n), the Serre family moved
/// by the Moebius map sending its branch points 0, inf, n^n/(n-1)^(n-1) to
/// 0, a c, a b n^n (c = n^n b + a(n-1)^(n-1)). Named "serre-tilde-<n>:<a>:<b>".
CurveFamily serre_tilde_family(unsigned n, const BigInt& a, const BigInt& b);

/// X^7(X + 7) - t(X^2 + X + 7), group PGL2(7). Named "pgl27".
CurveFamily pgl27_family();

/// (n-1)^(n-1) X^n - n^n (X - 1): its roots mod p govern the residue
/// extension at the finite branch point of serre<n>.
IntPoly serre_residue_poly(unsigned n);

}  // namespace locyc::families
