#pragma once

#include "json.hpp"
#include "locyc/bigint.hpp"

namespace locyc {

/// Integers up to 2^53 in magnitude are written as JSON numbers, larger ones
/// as decimal strings, so every reader sees exact values.
inline nlohmann::ordered_json bigint_to_json(const BigInt& x) {
    static const BigInt limit = BigInt(1) << 53;
    if (big_abs(x) <= limit) return static_cast<long long>(x);
    return x.str();
}

/// Accepts a JSON integer or a decimal string.
inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
        return BigInt(j.get<long long>());
    }
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

}  // namespace locyc
