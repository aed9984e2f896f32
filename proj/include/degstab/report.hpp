#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "degstab/deciders.hpp"

namespace degstab {

inline constexpr const char* kReportSchema = "degstab.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Everything needed to rerun a command and compare its verdict.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    /// (input name, FNV-1a digest as 16 hex digits)
    std::vector<std::pair<std::string, std::string>> inputs;
    double wall_seconds = 0.0;
};

std::string hex_digest(std::uint64_t d);

/// Classes sorted by smallest member, empty classes dropped.
nlohmann::json partition_json(const Partition& p);
nlohmann::json decision_json(const Decision& d);
/// decision_json merged with the manifest fields and the schema tag.
nlohmann::json report_json(const RunManifest& m, const Decision& d);
/// Manifest fields plus an arbitrary payload under "result".
nlohmann::json report_json(const RunManifest& m, const nlohmann::json& result);

/// Human-readable rendering of a decision.
std::string decision_text(const Decision& d);

}  // namespace degstab
