#include "locyc/families/builtin.hpp"

#include <stdexcept>

namespace locyc::families {

namespace {

CyclicityRule congruence_rule(RuleMode mode, std::uint64_t modulus, std::vector<std::uint64_t> residues) {
    CyclicityRule r;
    r.mode = mode;
    r.congruences.emplace_back(modulus, std::move(residues));
    return r;
}

// Branch data shared by the Serre family and its Moebius translates: the
// residue extensions are Q(zeta_n), Q(zeta_(n-1)) and the splitting field of
// the residue polynomial.
std::vector<BranchPoint> serre_branch_points(unsigned n, HomogeneousForm zero, HomogeneousForm pole,
                                             HomogeneousForm finite, bool quotient_rules) {
    BranchPoint b0{std::move(zero), n, std::to_string(n) + "-cycle", {}, std::nullopt};
    b0.rules.push_back(congruence_rule(RuleMode::StrongSplit, n, {1}));
    BranchPoint b1{std::move(pole), n - 1, std::to_string(n - 1) + "-cycle", {}, std::nullopt};
    b1.rules.push_back(congruence_rule(RuleMode::StrongSplit, n - 1, {1}));
    BranchPoint b2{std::move(finite), 2, "transposition", {}, serre_residue_poly(n)};
    CyclicityRule split;
    split.mode = RuleMode::StrongSplit;
    split.root_checks.push_back({serre_residue_poly(n), n - 1});
    b2.rules.push_back(split);
    if (quotient_rules) {
        b0.rules.push_back(congruence_rule(RuleMode::QuotientCyclic, 5, {1}));
        b1.rules.push_back(congruence_rule(RuleMode::QuotientCyclic, 4, {1}));
        b2.rules.push_back(congruence_rule(RuleMode::QuotientCyclic, 8, {1, 3}));
    }
    return {b0, b1, b2};
}

}  // namespace

IntPoly serre_residue_poly(unsigned n) {
    BigInt a = big_pow(BigInt(n - 1), n - 1), b = big_pow(BigInt(n), n);
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[0] = b;
    c[1] = -b;
    c[n] = a;
    return IntPoly(std::move(c));
}

CurveFamily serre_family(unsigned n) {
    if (n < 3) throw std::invalid_argument("Serre family needs n >= 3");
    CurveFamily fam;
    fam.name = "serre" + std::to_string(n);
    std::vector<std::vector<BigInt>> coeffs(n + 1);
    coeffs[0] = {0, 1};
    coeffs[1] = {0, -1};
    coeffs[n] = {1};
    fam.f = polyring::bivar_from(coeffs);
    fam.group_label = "S" + std::to_string(n);
    BigInt a = big_pow(BigInt(n - 1), n - 1), b = big_pow(BigInt(n), n);
    fam.branch_points = serre_branch_points(n, HomogeneousForm::T(), HomogeneousForm::S(),
                                            HomogeneousForm::linear(a, -b), n == 5);
    return fam;
}

CurveFamily serre_tilde_family(unsigned n, const BigInt& a, const BigInt& b) {
    if (n < 3) throw std::invalid_argument("Serre family needs n >= 3");
    BigInt c = big_pow(BigInt(n), n) * b + big_pow(BigInt(n - 1), n - 1) * a;
    if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("translated Serre family needs a, b, c nonzero");
    CurveFamily fam;
    fam.name = "serre-tilde-" + std::to_string(n) + ":" + a.str() + ":" + b.str();
    std::vector<std::vector<BigInt>> coeffs(n + 1);
    coeffs[0] = {0, a};
    coeffs[1] = {0, -a};
    coeffs[n] = {a * b * c, -b};
    fam.f = polyring::bivar_from(coeffs);
    fam.group_label = "S" + std::to_string(n);
    fam.branch_points = serre_branch_points(n, HomogeneousForm::T(), HomogeneousForm::linear(1, -a * c),
                                            HomogeneousForm::linear(1, -a * b * big_pow(BigInt(n), n)), false);
    return fam;
}

CurveFamily pgl27_family() {
    CurveFamily fam;
    fam.name = "pgl27";
    fam.f = polyring::bivar_from({{0, -7}, {0, -1}, {0, -1}, {}, {}, {}, {}, {7}, {1}});
    fam.group_label = "PGL2(7)";
    BranchPoint zero{HomogeneousForm::T(), 7, "7-cycle", {congruence_rule(RuleMode::StrongSplit, 7, {1})}, std::nullopt};
    BranchPoint pole{HomogeneousForm::S(), 6, "6-cycle", {congruence_rule(RuleMode::StrongSplit, 6, {1})}, std::nullopt};
    BranchPoint finite{HomogeneousForm::linear(108, big_pow(BigInt(7), 7)), 2, "involution (2^3 1^2)",
                       {congruence_rule(RuleMode::StrongSplit, 6, {1})}, std::nullopt};
    fam.branch_points = {zero, pole, finite};
    return fam;
}

}  // namespace locyc::families
