#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "locyc/families/criteria.hpp"
#include "locyc/families/ramification.hpp"
#include "locyc/galois_stats/frobenius.hpp"
#include "locyc/searches/green_tao.hpp"
#include "locyc/searches/pgl2.hpp"
#include "locyc/searches/specializations.hpp"
#include "locyc/searches/triples.hpp"

namespace locyc::cli {

using Json = nlohmann::ordered_json;

Json to_json(const families::SpecializationCertificate& cert);
Json to_json(const searches::PrimeTriple& t);
Json to_json(const searches::Specialization& s);
Json to_json(const searches::GreenTaoResult& r);
Json to_json(const searches::Pgl2Scan& scan);
Json to_json(const families::CriteriaReport& r);
Json to_json(const galois_stats::CycleTypeDistribution& d);
Json to_json(const galois_stats::FrobeniusSample& s);
Json rational_to_json(const galois_stats::Rational& q);  // {"exact": "p/q", "value": double}

/// "a,b,c" -> aT + bS + c.
searches::AffineForm parse_affine_form(std::string_view text);
/// Comma-separated coefficients, constant term first.
polyring::IntPoly parse_int_poly(std::string_view text);
/// "p/q" or "p".
std::pair<BigInt, BigInt> parse_fraction(std::string_view text);
/// "modulus:r1,r2,...".
arith::CongruenceConstraint parse_congruence(std::string_view text);

}  // namespace locyc::cli
