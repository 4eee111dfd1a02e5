#include "locyc/families/types.hpp"

namespace locyc::families {

ProjectivePoint::ProjectivePoint(const BigInt& num, const BigInt& den) {
    if (num == 0 && den == 0) throw std::invalid_argument("(0 : 0) is not a projective point");
    if (den == 0) {
        num_ = 1;
        den_ = 0;
        return;
    }
    BigInt g = big_gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_bigint(text), 1};
    return {parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1))};
}

std::string ProjectivePoint::to_string() const {
    if (is_infinity()) return "inf";
    return num_.str() + "/" + den_.str();
}

std::string to_string(RuleMode mode) {
    return mode == RuleMode::StrongSplit ? "strong-split" : "quotient-cyclic";
}

RuleMode parse_rule_mode(std::string_view text) {
    if (text == "strong-split" || text == "strong") return RuleMode::StrongSplit;
    if (text == "quotient-cyclic" || text == "quotient") return RuleMode::QuotientCyclic;
    throw std::invalid_argument("unknown rule mode '" + std::string(text) + "'");
}

const CyclicityRule* BranchPoint::rule_for(RuleMode mode) const {
    for (const auto& r : rules)
        if (r.mode == mode) return &r;
    return nullptr;
}

}  // namespace locyc::families
