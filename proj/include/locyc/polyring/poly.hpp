#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locyc/bigint.hpp"

namespace locyc::polyring {

using locyc::exact_div;

/// Dense univariate polynomial over an integral domain R, coefficients stored
/// lowest degree first. The zero polynomial has degree -1.
template <class R>
class Poly {
public:
    using Coeff = R;

    Poly() = default;
    Poly(R constant) {  // NOLINT(google-explicit-constructor)
        if (!(constant == R(0))) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(R c, std::size_t k) {
        if (c == R(0)) return {};
        std::vector<R> v(k + 1, R(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const R& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& v : r.c_) v = R(0) - v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly scale(const Poly& a, const R& s) {
        std::vector<R> out = a.c_;
        for (auto& v : out) v = v * s;
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Horner evaluation.
    R operator()(const R& at) const {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> out(c_.size() - 1, R(0));
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * R(BigInt(i));
        return Poly(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
R ring_pow(R base, unsigned exponent) {
    R result(1);
    while (exponent) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    if (a.degree() < b.degree()) return a;
    const R& lb = b.lead();
    int pending = a.degree() - b.degree() + 1;
    Poly<R> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        Poly<R> kill = Poly<R>::monomial(r.lead(), shift) * b;
        r = scale(r, lb) - kill;
        --pending;
    }
    if (pending > 0) r = scale(r, ring_pow(lb, static_cast<unsigned>(pending)));
    return r;
}

/// Exact division in R[X]; throws std::domain_error if b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly<R> r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        R c = exact_div(r.lead(), b.lead());
        Poly<R> term = Poly<R>::monomial(c, shift);
        q += term;
        r -= term * b;
    }
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& s) {
    std::vector<R> out = a.coeffs();
    for (auto& v : out) v = exact_div(v, s);
    return Poly<R>(std::move(out));
}

/// Resultant over an integral domain by the subresultant remainder sequence,
/// which keeps intermediate coefficients at the size of the true minors.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) return R(0);
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    R g(1), h(1);
    while (b.degree() > 0) {
        int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        Poly<R> rem = pseudo_remainder(a, b);
        a = std::move(b);
        if (rem.is_zero()) return R(0);
        b = exact_div_scalar(rem, g * ring_pow(h, static_cast<unsigned>(delta)));
        g = a.lead();
        if (delta > 0)
            h = exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    int da = a.degree();
    R result = da == 0 ? h
                       : exact_div(ring_pow(b.lead(), static_cast<unsigned>(da)),
                                   ring_pow(h, static_cast<unsigned>(da - 1)));
    return sign < 0 ? R(0) - result : result;
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), d = deg f >= 1.
template <class R>
R discriminant(const Poly<R>& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree at least 1");
    R res = exact_div(resultant(f, f.derivative()), f.lead());
    return (d * (d - 1) / 2) % 2 == 1 ? R(0) - res : res;
}

}  // namespace locyc::polyring
