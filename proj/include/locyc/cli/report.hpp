#pragma once

#include <string>
#include <vector>

#include "locyc/cli/json_io.hpp"

namespace locyc::cli {

struct RunReport {
    std::string command;
    Json config = Json::object();  // resolved parameters that determine the results
    Json results = Json::object();
    std::vector<std::string> warnings;
};

/// 64-bit FNV-1a of the compact config dump, as 16 hex digits.
std::string config_hash(const Json& config);

/// UTC ISO-8601; SOURCE_DATE_EPOCH, when set, replaces the clock.
std::string report_timestamp();

/// {"schema": 1, command, configHash, timestamp, config, results, warnings}.
Json render(const RunReport& report, const std::string& timestamp);

}  // namespace locyc::cli
