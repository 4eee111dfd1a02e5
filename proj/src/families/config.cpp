#include "locyc/families/config.hpp"

#include <fstream>

#include "locyc/jsonutil.hpp"

namespace locyc::families {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigurationError(where + ": missing field '" + key + "'");
    return *it;
}

std::vector<BigInt> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigurationError(where + ": expected an array of integers");
    std::vector<BigInt> out;
    for (const auto& v : j) out.push_back(bigint_from_json(v));
    return out;
}

CongruenceConstraint congruence_from_json(const json& j, const std::string& where) {
    auto modulus = field(j, "modulus", where).get<std::uint64_t>();
    auto residues = field(j, "residues", where).get<std::vector<std::uint64_t>>();
    return {modulus, std::move(residues)};
}

CyclicityRule rule_from_json(const json& j, const std::string& where) {
    CyclicityRule r;
    r.mode = parse_rule_mode(j.value("mode", std::string("strong-split")));
    if (auto it = j.find("congruences"); it != j.end())
        for (const auto& c : *it) r.congruences.push_back(congruence_from_json(c, where));
    if (auto it = j.find("rootChecks"); it != j.end()) {
        for (const auto& rc : *it)
            r.root_checks.push_back({IntPoly(int_list(field(rc, "poly", where), where)), field(rc, "roots", where).get<unsigned>()});
    }
    return r;
}

ordered_json ints_to_json(const std::vector<BigInt>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(bigint_to_json(x));
    return out;
}

ordered_json rule_to_json(const CyclicityRule& r) {
    ordered_json j;
    j["mode"] = to_string(r.mode);
    j["congruences"] = ordered_json::array();
    for (const auto& c : r.congruences) j["congruences"].push_back({{"modulus", c.modulus()}, {"residues", c.residues()}});
    j["rootChecks"] = ordered_json::array();
    for (const auto& rc : r.root_checks) j["rootChecks"].push_back({{"poly", ints_to_json(rc.poly.coeffs())}, {"roots", rc.required_roots}});
    return j;
}

// Binary form coefficients including the content.
std::vector<BigInt> full_coeffs(const HomogeneousForm& f) {
    std::vector<BigInt> c = f.coeffs();
    for (auto& v : c) v *= f.content();
    return c;
}

}  // namespace

CurveFamily family_from_json(const json& j) {
    if (!j.is_object()) throw ConfigurationError("family entry must be a JSON object");
    CurveFamily fam;
    fam.name = field(j, "name", "family").get<std::string>();
    const std::string where = "family '" + fam.name + "'";
    try {
        std::vector<std::vector<BigInt>> fx;
        for (const auto& c : field(j, "fxCoefficients", where)) fx.push_back(int_list(c, where));
        fam.f = polyring::bivar_from(fx);
        fam.group_label = j.value("groupLabel", std::string());
        fam.perfect_group = j.value("perfect", false);
        if (auto it = j.find("badPrimes"); it != j.end()) fam.declared_bad_primes = int_list(*it, where);
        if (auto it = j.find("normalizerQuotient"); it != j.end() && !it->is_null()) {
            NormalizerQuotient nq;
            nq.order = it->value("order", std::uint64_t{1});
            nq.abelian = it->value("abelian", false);
            nq.cyclic = it->value("cyclic", false);
            nq.split = it->value("split", false);
            fam.normalizer_quotient = nq;
        }
        std::size_t index = 0;
        for (const auto& b : field(j, "branchPoints", where)) {
            std::string bwhere = where + ", branch " + std::to_string(index++);
            BranchPoint bp;
            bp.form = HomogeneousForm(int_list(field(b, "form", bwhere), bwhere));
            bp.e = field(b, "e", bwhere).get<unsigned>();
            bp.inertia = b.value("inertia", std::string());
            if (auto it = b.find("residuePoly"); it != b.end() && !it->is_null()) bp.residue_poly = IntPoly(int_list(*it, bwhere));
            if (auto it = b.find("rule"); it != b.end()) bp.rules.push_back(rule_from_json(*it, bwhere));
            if (auto it = b.find("rules"); it != b.end())
                for (const auto& r : *it) bp.rules.push_back(rule_from_json(r, bwhere));
            fam.branch_points.push_back(std::move(bp));
        }
    } catch (const ConfigurationError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ConfigurationError(where + ": " + ex.what());
    }
    return fam;
}

ordered_json family_to_json(const CurveFamily& fam) {
    ordered_json j;
    j["name"] = fam.name;
    j["fxCoefficients"] = ordered_json::array();
    for (const auto& c : fam.f.coeffs()) j["fxCoefficients"].push_back(ints_to_json(c.coeffs()));
    j["groupLabel"] = fam.group_label;
    j["perfect"] = fam.perfect_group;
    j["badPrimes"] = ints_to_json(fam.declared_bad_primes);
    if (fam.normalizer_quotient) {
        const auto& nq = *fam.normalizer_quotient;
        j["normalizerQuotient"] = {{"order", nq.order}, {"abelian", nq.abelian}, {"cyclic", nq.cyclic}, {"split", nq.split}};
    } else {
        j["normalizerQuotient"] = nullptr;
    }
    j["branchPoints"] = ordered_json::array();
    for (const auto& b : fam.branch_points) {
        ordered_json bj;
        bj["form"] = ints_to_json(full_coeffs(b.form));
        bj["e"] = b.e;
        bj["inertia"] = b.inertia;
        bj["residuePoly"] = b.residue_poly ? ints_to_json(b.residue_poly->coeffs()) : ordered_json(nullptr);
        bj["rules"] = ordered_json::array();
        for (const auto& r : b.rules) bj["rules"].push_back(rule_to_json(r));
        j["branchPoints"].push_back(std::move(bj));
    }
    return j;
}

std::vector<CurveFamily> families_from_json(const json& doc) {
    std::vector<CurveFamily> out;
    if (doc.is_array()) {
        for (const auto& f : doc) out.push_back(family_from_json(f));
    } else if (doc.is_object() && doc.contains("families")) {
        for (const auto& f : doc["families"]) out.push_back(family_from_json(f));
    } else {
        out.push_back(family_from_json(doc));
    }
    return out;
}

FamilyRegistry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open family file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ConfigurationError("family file '" + path + "': " + ex.what());
    }
    FamilyRegistry reg = FamilyRegistry::builtin();
    for (auto& f : families_from_json(doc)) reg.add(std::move(f));
    return reg;
}

}  // namespace locyc::families
