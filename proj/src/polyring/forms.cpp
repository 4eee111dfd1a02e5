#include "locyc/polyring/forms.hpp"

#include <sstream>
#include <stdexcept>

namespace locyc::polyring {

HomogeneousForm::HomogeneousForm(std::vector<BigInt> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
    BigInt g = 0;
    const BigInt* top = nullptr;
    for (const auto& c : coeffs) {
        g = big_gcd(g, c);
        if (c != 0) top = &c;
    }
    if (g == 0) throw std::invalid_argument("binary form is identically zero");
    if (*top < 0) g = -g;
    for (auto& c : coeffs) c = exact_div(c, g);
    c_ = std::move(coeffs);
    content_ = std::move(g);
}

HomogeneousForm HomogeneousForm::homogenize(const IntPoly& p, unsigned degree) {
    if (p.degree() > static_cast<int>(degree))
        throw std::invalid_argument("homogenization degree below polynomial degree");
    std::vector<BigInt> c(degree + 1, BigInt(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
    return HomogeneousForm(std::move(c));
}

BigInt HomogeneousForm::eval_primitive(const BigInt& x, const BigInt& y) const {
    if (x == 0 && y == 0) throw std::invalid_argument("binary form evaluated at (0, 0)");
    // sum c_i x^i y^(d-i), Horner in x with running powers of y
    std::size_t d = c_.size() - 1;
    BigInt acc = c_[d], ypow = 1;
    for (std::size_t k = d; k-- > 0;) {
        ypow *= y;
        acc = acc * x + c_[k] * ypow;
    }
    return acc;
}

BigInt HomogeneousForm::eval(const BigInt& x, const BigInt& y) const { return content_ * eval_primitive(x, y); }

std::string HomogeneousForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    std::size_t d = c_.size() - 1;
    for (std::size_t k = d + 1; k-- > 0;) {
        const BigInt& c = c_[k];
        if (c == 0) continue;
        std::string mono;
        if (k >= 1) mono += k == 1 ? "T" : "T^" + std::to_string(k);
        if (d - k >= 1) mono += d - k == 1 ? "S" : "S^" + std::to_string(d - k);
        BigInt mag = big_abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mono.empty() || mag != 1) os << mag;
        os << mono;
        first = false;
    }
    if (content_ == 1) return os.str();
    if (content_ == -1) return "-(" + os.str() + ")";
    return content_.str() + "*(" + os.str() + ")";
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt sylvester_determinant(const std::vector<BigInt>& f_high, const std::vector<BigInt>& g_high) {
    if (f_high.empty() || g_high.empty()) throw std::invalid_argument("empty coefficient list");
    const std::size_t m = f_high.size() - 1, n = g_high.size() - 1, size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<BigInt>> mat(size, std::vector<BigInt>(size, BigInt(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) mat[r][r + j] = f_high[j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) mat[n + r][r + j] = g_high[j];
    return bareiss_determinant(std::move(mat));
}

BigInt form_resultant(const HomogeneousForm& f, const HomogeneousForm& g) {
    std::vector<BigInt> fh(f.coeffs().rbegin(), f.coeffs().rend());
    std::vector<BigInt> gh(g.coeffs().rbegin(), g.coeffs().rend());
    return sylvester_determinant(fh, gh);
}

}  // namespace locyc::polyring
