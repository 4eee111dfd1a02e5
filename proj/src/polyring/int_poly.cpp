#include "locyc/polyring/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "locyc/arith/factor.hpp"

namespace locyc::polyring {

namespace {

IntPoly positive_lead(IntPoly f) {
    if (!f.is_zero() && f.lead() < 0) f = -f;
    return f;
}

IntPoly shift_down(const IntPoly& f, std::size_t k) {
    const auto& c = f.coeffs();
    return IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

void append_term(std::ostringstream& os, const BigInt& c, const std::string& mono, bool first) {
    BigInt mag = big_abs(c);
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        os << mag;
    } else {
        if (mag != 1) os << mag << '*';
        os << mono;
    }
}

}  // namespace

BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& c : f.coeffs()) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    BigInt c = content(f);
    if (f.lead() < 0) c = -c;
    return exact_div_scalar(f, c);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    BigInt c = big_gcd(content(a), content(b));
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.is_zero() ? r : primitive_part(r);
    }
    return scale(primitive_part(u), c);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    IntPoly p = primitive_part(f);
    if (p.degree() < 1) return out;
    IntPoly c = gcd(p, p.derivative());
    IntPoly w = exact_div(p, c);
    for (unsigned i = 1; w.degree() > 0; ++i) {
        IntPoly y = gcd(w, c);
        IntPoly z = exact_div(w, y);
        if (z.degree() > 0) out.push_back({primitive_part(z), i});
        w = y;
        c = exact_div(c, y);
    }
    return out;
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() <= 0;
}

std::vector<RationalRoot> rational_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<RationalRoot> roots;
    IntPoly g = f;
    std::size_t low = 0;
    while (g.coeff(low) == 0) ++low;
    if (low > 0) {
        roots.push_back({0, 1});
        g = shift_down(g, low);
    }
    if (g.degree() >= 1) {
        g = primitive_part(g);
        auto dens = arith::positive_divisors(g.lead());
        auto nums = arith::positive_divisors(g.coeff(0));
        for (const auto& q : dens) {
            for (const auto& p : nums) {
                if (big_gcd(p, q) != 1) continue;
                for (const BigInt& s : {BigInt(p), BigInt(-p)}) {
                    if (eval_homogeneous(g, static_cast<unsigned>(g.degree()), s, q) == 0) roots.push_back({s, q});
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) {
        return a.num * b.den < b.num * a.den;
    });
    return roots;
}

BigInt eval_homogeneous(const IntPoly& f, unsigned degree, const BigInt& x, const BigInt& y) {
    if (f.degree() > static_cast<int>(degree)) throw std::invalid_argument("homogenization degree below polynomial degree");
    if (x == 0 && y == 0) throw std::invalid_argument("homogeneous evaluation at (0, 0)");
    BigInt acc = f.coeff(degree), ypow = 1;
    for (unsigned i = degree; i-- > 0;) {
        ypow *= y;
        acc = acc * x + f.coeff(i) * ypow;
    }
    return acc;
}

std::string to_string(const IntPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const BigInt& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        std::string mono;
        if (k >= 1) mono = std::string(1, var);
        if (k >= 2) mono += "^" + std::to_string(k);
        append_term(os, c, mono, first);
        first = false;
    }
    return os.str();
}

BivarPoly bivar_from(const std::vector<std::vector<BigInt>>& coeffs) {
    std::vector<IntPoly> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.emplace_back(c);
    return BivarPoly(std::move(cs));
}

int deg_t(const BivarPoly& f) {
    int d = -1;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

IntPoly specialize(const BivarPoly& f, const BigInt& x, const BigInt& y) {
    int dt = deg_t(f);
    std::vector<BigInt> xp(static_cast<std::size_t>(dt + 1)), yp(static_cast<std::size_t>(dt + 1));
    xp[0] = yp[0] = 1;
    for (int j = 1; j <= dt; ++j) {
        xp[static_cast<std::size_t>(j)] = xp[static_cast<std::size_t>(j - 1)] * x;
        yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * y;
    }
    std::vector<BigInt> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        BigInt v = 0;
        for (int j = 0; j <= c.degree(); ++j)
            v += c.coeffs()[static_cast<std::size_t>(j)] * xp[static_cast<std::size_t>(j)] *
                 yp[static_cast<std::size_t>(dt - j)];
        out.push_back(std::move(v));
    }
    return IntPoly(std::move(out));
}

std::string to_string(const BivarPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const IntPoly& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string mono;
        if (k >= 1) mono = "X";
        if (k >= 2) mono += "^" + std::to_string(k);
        if (c.degree() == 0) {
            append_term(os, c.lead(), mono, first);
        } else {
            if (!first) os << " + ";
            os << '(' << to_string(c, 't') << ')';
            if (!mono.empty()) os << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace locyc::polyring
