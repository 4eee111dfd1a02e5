#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "locyc/families/family.hpp"

namespace locyc::families {

/// One family from the config format
///   {name, fxCoefficients, groupLabel, perfect, badPrimes, normalizerQuotient,
///    branchPoints: [{form, e, inertia, residuePoly, rule | rules}]}
/// where rule = {mode, congruences: [{modulus, residues}], rootChecks: [{poly, roots}]}.
/// Throws ConfigurationError on malformed input.
CurveFamily family_from_json(const nlohmann::json& j);

/// Inverse of family_from_json (derived fields omitted).
nlohmann::ordered_json family_to_json(const CurveFamily& fam);

/// A family file holds one family object, an array of them, or {"families": [...]}.
std::vector<CurveFamily> families_from_json(const nlohmann::json& doc);

/// Built-in registry extended (and overridden by name) with the families in `path`.
FamilyRegistry load_registry(const std::string& path);

}  // namespace locyc::families
