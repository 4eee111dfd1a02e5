#include "locyc/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace locyc {

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = text.size();
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    std::string_view body = text.substr(i, j - i);
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    BigInt value = 0;
    for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
    }
    return negative ? BigInt(-value) : value;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero is infinite");
    if (p < 2) throw std::invalid_argument("valuation base must be at least 2");
    unsigned v = 0;
    BigInt m = big_abs(n);
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::domain_error("exact_div: " + a.str() + " is not divisible by " + b.str());
    return q;
}

std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m) {
    if (m <= 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
    if (m == 1) return BigInt(0);
    BigInt t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
    while (new_r != 0) {
        BigInt q = r / new_r;
        BigInt tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return std::nullopt;
    return mod_floor(t, m);
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

}  // namespace locyc
