#pragma once

#include <string>
#include <vector>

#include "locyc/polyring/int_poly.hpp"

namespace locyc::polyring {

/// Binary form sum c_i T^i S^(d-i). The stored coefficients are primitive
/// with the highest nonzero T-coefficient positive; the removed factor
/// (sign included) is kept as content().
class HomogeneousForm {
public:
    HomogeneousForm() = default;
    /// coeffs[i] multiplies T^i S^(d-i), d = coeffs.size() - 1.
    explicit HomogeneousForm(std::vector<BigInt> coeffs);

    static HomogeneousForm T() { return HomogeneousForm({0, 1}); }
    static HomogeneousForm S() { return HomogeneousForm({1, 0}); }
    /// a*T + b*S
    static HomogeneousForm linear(const BigInt& a, const BigInt& b) { return HomogeneousForm({b, a}); }
    /// p(T/S) * S^degree; degree must be at least deg p.
    static HomogeneousForm homogenize(const IntPoly& p, unsigned degree);

    unsigned degree() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& content() const { return content_; }

    /// content * F(x, y); throws std::invalid_argument at (0, 0).
    BigInt eval(const BigInt& x, const BigInt& y) const;
    /// F(x, y) for the primitive part.
    BigInt eval_primitive(const BigInt& x, const BigInt& y) const;

    /// Primitive part at S = 1.
    IntPoly dehomogenize() const { return IntPoly(c_); }
    bool vanishes_at(const BigInt& x, const BigInt& y) const { return eval_primitive(x, y) == 0; }
    /// True for the form S (the point at infinity).
    bool is_infinity() const { return c_.size() == 2 && c_[0] == 1 && c_[1] == 0; }

    /// Same primitive part; content ignored.
    bool same_primitive(const HomogeneousForm& o) const { return c_ == o.c_; }

    std::string to_string() const;

    friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
        return a.c_ == b.c_ && a.content_ == b.content_;
    }

private:
    std::vector<BigInt> c_{1};
    BigInt content_ = 1;
};

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Determinant of the Sylvester matrix of two coefficient lists given
/// highest degree first (leading zeros allowed, as for binary forms).
BigInt sylvester_determinant(const std::vector<BigInt>& f_high, const std::vector<BigInt>& g_high);

/// Resultant of the primitive parts of two binary forms.
BigInt form_resultant(const HomogeneousForm& f, const HomogeneousForm& g);

}  // namespace locyc::polyring
