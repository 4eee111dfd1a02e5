#include "locyc/searches/green_tao.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "locyc/arith/factor.hpp"
#include "locyc/arith/sieve.hpp"

namespace locyc::searches {

std::string AffineForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const BigInt& coef, const char* var) {
        if (coef == 0) return;
        BigInt mag = big_abs(coef);
        if (first)
            os << (coef < 0 ? "-" : "");
        else
            os << (coef < 0 ? " - " : " + ");
        if (mag != 1 || *var == '\0') os << mag;
        os << var;
        first = false;
    };
    term(a, "T");
    term(b, "S");
    term(c, "");
    if (first) os << '0';
    return os.str();
}

bool RatioInterval::contains(const BigInt& x, const BigInt& y) const {
    return x * lo_den >= lo_num * y && x * hi_den <= hi_num * y;
}

GreenTaoResult check_green_tao(const FormSystem& sys) {
    if (sys.forms.empty()) throw std::invalid_argument("form system is empty");
    for (const auto& f : sys.forms)
        if (f.a == 0 && f.b == 0) throw std::invalid_argument("affine form " + f.to_string() + " has no linear part");
    if (sys.ratio) {
        const auto& r = *sys.ratio;
        if (r.lo_den <= 0 || r.hi_den <= 0) throw std::invalid_argument("ratio interval needs positive denominators");
        if (r.hi_num * r.lo_den <= r.lo_num * r.hi_den) throw std::invalid_argument("ratio interval has nonpositive length");
    }

    GreenTaoResult out;
    const auto& fs = sys.forms;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (fs[i].a * fs[j].b - fs[j].a * fs[i].b != 0) continue;
            BigInt alpha = fs[j].a != 0 ? fs[j].a : fs[j].b;
            BigInt beta = -(fs[j].a != 0 ? fs[i].a : fs[i].b);
            BigInt g = big_gcd(alpha, beta);
            alpha /= g;
            beta /= g;
            if (alpha < 0) {
                alpha = -alpha;
                beta = -beta;
            }
            BigInt gamma = -(alpha * fs[i].c + beta * fs[j].c);
            out.dependent_pair = {i, j};
            out.relation = {alpha, beta, gamma};
            out.reason = "forms " + std::to_string(i) + " and " + std::to_string(j) + " are affinely dependent: " +
                         alpha.str() + "*f" + std::to_string(i) + " + " + beta.str() + "*f" + std::to_string(j) +
                         " + " + gamma.str() + " = 0";
            break;
        }
        if (out.dependent_pair) break;
    }

    auto fixed_prime = [&](const BigInt& p) {
        out.fixed_prime = p;
        if (!out.reason.empty()) out.reason += "; ";
        out.reason += "prime " + p.str() + " divides the product of the forms at every integer point";
        return out;
    };
    std::set<BigInt> content_primes;
    for (const auto& f : fs)
        for (const auto& p : arith::prime_support(big_gcd(big_gcd(f.a, f.b), f.c))) content_primes.insert(p);
    for (auto p64 : arith::sieve_primes(2, static_cast<std::int64_t>(fs.size()))) {
        BigInt p(p64);
        if (!content_primes.empty() && *content_primes.begin() < p) break;
        auto pp = static_cast<long>(p64);
        bool fixed = true;
        for (long t = 0; t < pp && fixed; ++t) {
            for (long s = 0; s < pp && fixed; ++s) {
                bool all_nonzero = true;
                for (const auto& f : fs) {
                    if (mod_floor(f.eval(t, s), p) == 0) {
                        all_nonzero = false;
                        break;
                    }
                }
                if (all_nonzero) fixed = false;
            }
        }
        if (fixed) return fixed_prime(p);
    }
    if (!content_primes.empty()) return fixed_prime(*content_primes.begin());
    if (out.dependent_pair) return out;
    out.pass = true;
    out.reason = "pairwise affinely independent, no fixed prime divisor";
    return out;
}

}  // namespace locyc::searches
