#include "locyc/families/family.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "locyc/arith/factor.hpp"
#include "locyc/arith/primality.hpp"
#include "locyc/arith/sieve.hpp"
#include "locyc/families/builtin.hpp"
#include "locyc/polyring/discriminant.hpp"

namespace locyc::families {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void check_branch_point(const CurveFamily& fam, std::size_t index) {
    const BranchPoint& bp = fam.branch_points[index];
    std::string where = fam.name + ", branch " + std::to_string(index) + " (" + bp.form.to_string() + ")";
    if (bp.e == 0) throw ConfigurationError(where + ": ramification index must be positive");
    if (bp.e >= 2) {
        bool any = std::any_of(bp.rules.begin(), bp.rules.end(), [](const CyclicityRule& r) { return !r.empty(); });
        if (!any) throw ConfigurationError(where + ": no cyclicity predicate for a ramified branch point");
    }
    std::set<RuleMode> modes;
    for (const auto& r : bp.rules)
        if (!modes.insert(r.mode).second) throw ConfigurationError(where + ": two rules for mode " + to_string(r.mode));
    const auto& c = bp.form.coeffs();
    unsigned d = bp.form.degree();
    if (d == 0) throw ConfigurationError(where + ": branch form of degree 0");
    if (d >= 2) {
        if (c.back() == 0) throw ConfigurationError(where + ": branch form is divisible by S");
        IntPoly p = bp.form.dehomogenize();
        if (!polyring::rational_roots(p).empty())
            throw ConfigurationError(where + ": branch form has a rational root");
        if (d >= 4 && !polyring::is_squarefree(p)) throw ConfigurationError(where + ": branch form is not squarefree");
    }
}

}  // namespace

bool CurveFamily::is_bad_prime(const BigInt& p) const {
    return std::binary_search(bad_prime_superset.begin(), bad_prime_superset.end(), p);
}

bool CurveFamily::infinity_is_branch_point() const {
    return std::any_of(branch_points.begin(), branch_points.end(),
                       [](const BranchPoint& b) { return b.form.is_infinity(); });
}

std::vector<HomogeneousForm> CurveFamily::forms() const {
    std::vector<HomogeneousForm> out;
    for (const auto& b : branch_points) out.push_back(b.form);
    return out;
}

BigInt strip_known_primes(BigInt n, const std::vector<BigInt>& primes, const std::vector<BigInt>& values) {
    if (n == 0) return n;
    for (const auto& p : primes)
        while (n % p == 0) n /= p;
    for (const auto& v : values) {
        if (v == 0) continue;
        for (BigInt g = big_gcd(n, v); g > 1; g = big_gcd(n, v)) n /= g;
    }
    return n;
}

CurveFamily complete_family(CurveFamily fam, unsigned random_points) {
    if (fam.name.empty()) throw ConfigurationError("family without a name");
    if (fam.f.degree() < 2) throw ConfigurationError(fam.name + ": degree in X must be at least 2");
    if (polyring::deg_t(fam.f) < 1) throw ConfigurationError(fam.name + ": polynomial does not depend on t");
    if (fam.branch_points.empty()) throw ConfigurationError(fam.name + ": no branch points");
    for (std::size_t i = 0; i < fam.branch_points.size(); ++i) check_branch_point(fam, i);

    fam.discriminant = polyring::disc_in_t(fam.f);
    if (fam.discriminant.is_zero()) throw ConfigurationError(fam.name + ": polynomial is inseparable over Q(t)");

    std::set<BigInt> bad{2, 3};
    for (const auto& p : fam.declared_bad_primes) {
        if (!arith::is_prime(p) || p < 0) throw ConfigurationError(fam.name + ": declared bad prime " + p.str() + " is not a prime");
        bad.insert(p);
    }
    for (auto p : arith::sieve_primes(2, fam.f.degree())) bad.insert(BigInt(p));
    for (const auto& p : arith::prime_support(polyring::content(fam.discriminant))) bad.insert(p);
    for (std::size_t i = 0; i < fam.branch_points.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.branch_points.size(); ++j) {
            BigInt r = polyring::form_resultant(fam.branch_points[i].form, fam.branch_points[j].form);
            if (r == 0)
                throw ConfigurationError(fam.name + ": branch forms " + std::to_string(i) + " and " + std::to_string(j) +
                                         " share a factor");
            for (const auto& p : arith::prime_support(r)) bad.insert(p);
        }
    }
    fam.bad_prime_superset.assign(bad.begin(), bad.end());

    const unsigned hdeg = polyring::homogenized_disc_degree(fam.f);
    std::mt19937_64 rng(fnv1a(fam.name));
    std::uniform_int_distribution<long long> xs(-10000, 10000), ys(1, 10000);
    for (unsigned done = 0, tries = 0; done < random_points && tries < 20 * random_points + 100; ++tries) {
        BigInt x = xs(rng), y = ys(rng);
        if (big_gcd(x, y) != 1) continue;
        std::vector<BigInt> values;
        for (const auto& b : fam.branch_points) values.push_back(b.form.eval(x, y));
        if (std::any_of(values.begin(), values.end(), [](const BigInt& v) { return v == 0; })) continue;
        BigInt d = polyring::eval_homogeneous(fam.discriminant, hdeg, x, y);
        if (d == 0) continue;
        BigInt rest = strip_known_primes(d, fam.bad_prime_superset, values);
        if (big_abs(rest) != 1)
            throw ConfigurationError(fam.name + ": discriminant at (" + x.str() + " : " + y.str() +
                                     ") has prime factors outside the branch forms and bad primes (cofactor " +
                                     rest.str() + ")");
        ++done;
    }
    return fam;
}

FamilyRegistry FamilyRegistry::builtin() {
    FamilyRegistry reg;
    for (unsigned n = 5; n <= 10; ++n) reg.add(serre_family(n));
    reg.add(pgl27_family());
    return reg;
}

void FamilyRegistry::add(CurveFamily family) {
    family = complete_family(std::move(family));
    auto it = std::find_if(families_.begin(), families_.end(), [&](const CurveFamily& f) { return f.name == family.name; });
    if (it != families_.end())
        *it = std::move(family);
    else
        families_.push_back(std::move(family));
}

namespace {

// serre-tilde-<n>:<a>:<b>
std::optional<CurveFamily> tilde_from_name(std::string_view name) {
    constexpr std::string_view prefix = "serre-tilde-";
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = name.substr(prefix.size());
    auto c1 = rest.find(':');
    if (c1 == std::string_view::npos) return std::nullopt;
    auto c2 = rest.find(':', c1 + 1);
    if (c2 == std::string_view::npos) return std::nullopt;
    BigInt n = parse_bigint(rest.substr(0, c1));
    if (n < 3 || n > 64) throw std::invalid_argument("serre-tilde degree must lie in [3, 64]");
    return serre_tilde_family(static_cast<unsigned>(n), parse_bigint(rest.substr(c1 + 1, c2 - c1 - 1)),
                              parse_bigint(rest.substr(c2 + 1)));
}

}  // namespace

bool FamilyRegistry::contains(std::string_view name) const {
    for (const auto& f : families_)
        if (f.name == name) return true;
    return false;
}

CurveFamily FamilyRegistry::get(std::string_view name) const {
    for (const auto& f : families_)
        if (f.name == name) return f;
    if (auto tilde = tilde_from_name(name)) return complete_family(std::move(*tilde));
    throw std::out_of_range("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> FamilyRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& f : families_) out.push_back(f.name);
    return out;
}

}  // namespace locyc::families
