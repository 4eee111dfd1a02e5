#include "locyc/polyring/discriminant.hpp"

#include <stdexcept>

namespace locyc::polyring {

IntPoly disc_in_t(const BivarPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("discriminant needs degree at least 2 in X");
    return discriminant(f);
}

unsigned homogenized_disc_degree(const BivarPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("family polynomial has degree 0 in X");
    return static_cast<unsigned>(deg_t(f)) * static_cast<unsigned>(2 * f.degree() - 2);
}

BigInt sylvester_discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree at least 1");
    std::vector<BigInt> fh(f.coeffs().rbegin(), f.coeffs().rend());
    IntPoly df = f.derivative();
    std::vector<BigInt> gh(df.coeffs().rbegin(), df.coeffs().rend());
    if (gh.empty()) gh.push_back(0);
    BigInt res = exact_div(sylvester_determinant(fh, gh), f.lead());
    return (d * (d - 1) / 2) % 2 == 1 ? BigInt(-res) : res;
}

BranchLocus radical_branch_forms(const IntPoly& d, unsigned homogenized_degree) {
    if (d.is_zero()) throw std::invalid_argument("branch forms of the zero polynomial");
    if (static_cast<int>(homogenized_degree) < d.degree())
        throw std::invalid_argument("homogenization degree below the discriminant degree");
    BranchLocus out;
    out.content = content(d);
    for (const auto& sf : squarefree_decomposition(d)) {
        IntPoly rest = sf.factor;
        for (const auto& r : rational_roots(rest)) {
            out.forms.push_back(HomogeneousForm::linear(r.den, -r.num));
            out.multiplicities.push_back(sf.multiplicity);
            rest = exact_div(rest, IntPoly{-r.num, r.den});
        }
        if (rest.degree() >= 1) {
            out.forms.push_back(HomogeneousForm::homogenize(rest, static_cast<unsigned>(rest.degree())));
            out.multiplicities.push_back(sf.multiplicity);
        }
    }
    auto deficit = homogenized_degree - static_cast<unsigned>(d.degree());
    if (deficit > 0) {
        out.forms.push_back(HomogeneousForm::S());
        out.multiplicities.push_back(deficit);
    }
    return out;
}

}  // namespace locyc::polyring
