#include "locyc/polyring/mod_poly.hpp"

#include <algorithm>

namespace locyc::polyring {

using arith::add_mod;
using arith::inv_mod;
using arith::mul_mod;
using arith::sub_mod;

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, u64 p) {
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    BigInt m = p;
    for (const auto& v : f.coeffs()) c.push_back(static_cast<u64>(mod_floor(v, m)));
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    u64 inv = inv_mod(lead(), p_);
    ModPoly r = *this;
    for (auto& v : r.c_) v = mul_mod(v, inv, p_);
    return r;
}

ModPoly ModPoly::derivative() const {
    std::vector<u64> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(mul_mod(c_[i], i % p_, p_));
    return ModPoly(p_, std::move(out));
}

u64 ModPoly::operator()(u64 at) const {
    u64 acc = 0;
    at %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, at, p_), *it, p_);
    return acc;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add_mod(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = add_mod(r.c_[i + j], mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    r.trim();
    return r;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero mod p");
    const u64 p = a.p_;
    if (a.degree() < b.degree()) return {ModPoly(p), a};
    std::vector<u64> rem = a.c_;
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<u64> quo(rem.size() - db, 0);
    u64 inv = inv_mod(b.lead(), p);
    for (std::size_t k = rem.size(); k-- > db;) {
        u64 q = mul_mod(rem[k], inv, p);
        if (q == 0) continue;
        std::size_t shift = k - db;
        quo[shift] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = sub_mod(rem[shift + j], mul_mod(q, b.c_[j], p), p);
    }
    rem.resize(db);
    return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly pow_mod(ModPoly base, u64 e, const ModPoly& m) {
    ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) result = result * base % m;
        e >>= 1;
        if (e) base = base * base % m;
    }
    return result;
}

std::vector<DdfComponent> distinct_degree_factorization(const ModPoly& f) {
    std::vector<DdfComponent> out;
    const u64 p = f.modulus();
    ModPoly rest = f.monic();
    ModPoly x = ModPoly::x(p);
    ModPoly h = x % rest;
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
        h = pow_mod(h, p, rest);
        ModPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.push_back({d, g});
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back({static_cast<unsigned>(rest.degree()), rest});
    return out;
}

namespace {

ModPoly random_below(const ModPoly& h, std::mt19937_64& rng) {
    const u64 p = h.modulus();
    std::uniform_int_distribution<u64> dist(0, p - 1);
    std::vector<u64> c(static_cast<std::size_t>(h.degree()));
    for (auto& v : c) v = dist(rng);
    return ModPoly(p, std::move(c));
}

// A polynomial whose gcd with h splits h with probability about 1/2.
ModPoly splitting_probe(const ModPoly& a, unsigned d, const ModPoly& h) {
    const u64 p = h.modulus();
    if (p == 2) {
        // absolute trace a + a^2 + ... + a^(2^(d-1))
        ModPoly u = a % h, acc = u;
        for (unsigned i = 1; i < d; ++i) {
            u = u * u % h;
            acc = acc + u;
        }
        return acc;
    }
    // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
    ModPoly u = a % h, norm = u;
    for (unsigned i = 1; i < d; ++i) {
        u = pow_mod(u, p, h);
        norm = norm * u % h;
    }
    return pow_mod(norm, (p - 1) / 2, h) - ModPoly::constant(p, 1);
}

bool factor_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
}

ModPoly checked_reduction(const IntPoly& f, u64 p) {
    ModPoly fr = ModPoly::reduce(f, p);
    if (fr.degree() != f.degree())
        throw DegenerateReduction("leading coefficient vanishes mod " + std::to_string(p));
    if (fr.degree() >= 1 && gcd(fr, fr.derivative()).degree() > 0)
        throw DegenerateReduction("reduction mod " + std::to_string(p) + " is not squarefree");
    return fr;
}

}  // namespace

std::vector<ModPoly> equal_degree_factorization(const ModPoly& g, unsigned d, std::mt19937_64& rng) {
    std::vector<ModPoly> out, pending{g.monic()};
    while (!pending.empty()) {
        ModPoly h = std::move(pending.back());
        pending.pop_back();
        if (h.degree() <= static_cast<int>(d)) {
            if (h.degree() > 0) out.push_back(h);
            continue;
        }
        for (;;) {
            ModPoly probe = splitting_probe(random_below(h, rng), d, h);
            ModPoly f1 = gcd(h, probe);
            if (f1.degree() > 0 && f1.degree() < h.degree()) {
                pending.push_back((h / f1).monic());
                pending.push_back(f1);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

unsigned count_distinct_roots_mod_p(const IntPoly& f, u64 p) {
    ModPoly fr = ModPoly::reduce(f, p);
    if (fr.is_zero()) throw DegenerateReduction("polynomial vanishes mod " + std::to_string(p));
    if (fr.degree() <= 0) return 0;
    if (fr.degree() == 1) return 1;
    ModPoly x = ModPoly::x(p);
    ModPoly g = gcd(fr, pow_mod(x, p, fr) - x);
    return static_cast<unsigned>(g.degree());
}

std::vector<unsigned> degree_pattern_mod_p(const IntPoly& f, u64 p) {
    ModPoly fr = checked_reduction(f, p);
    std::vector<unsigned> pattern;
    if (fr.degree() <= 0) return pattern;
    for (const auto& comp : distinct_degree_factorization(fr)) {
        auto copies = static_cast<unsigned>(comp.product.degree()) / comp.degree;
        pattern.insert(pattern.end(), copies, comp.degree);
    }
    std::sort(pattern.rbegin(), pattern.rend());
    return pattern;
}

std::vector<ModPoly> factor_mod_p(const IntPoly& f, u64 p) {
    ModPoly fr = checked_reduction(f, p);
    std::vector<ModPoly> out;
    if (fr.degree() <= 0) return out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    for (const auto& comp : distinct_degree_factorization(fr)) {
        auto parts = equal_degree_factorization(comp.product, comp.degree, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

std::vector<u64> roots_mod_p(const IntPoly& f, u64 p) {
    ModPoly fr = ModPoly::reduce(f, p);
    if (fr.is_zero()) throw DegenerateReduction("polynomial vanishes mod " + std::to_string(p));
    std::vector<u64> roots;
    if (fr.degree() <= 0) return roots;
    if (p <= 512) {
        for (u64 x = 0; x < p; ++x)
            if (fr(x) == 0) roots.push_back(x);
        return roots;
    }
    ModPoly x = ModPoly::x(p);
    ModPoly g = gcd(fr, pow_mod(x, p, fr) - x);
    if (g.degree() <= 0) return roots;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    for (const auto& lin : equal_degree_factorization(g, 1, rng)) roots.push_back(arith::sub_mod(0, lin.coeff(0), p));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace locyc::polyring
