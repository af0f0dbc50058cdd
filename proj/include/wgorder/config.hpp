#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "wgorder/error.hpp"
#include "wgorder/systems.hpp"

namespace wgorder {

using Json = nlohmann::json;

// Schemas:
//   baseline  {"family": "burr", "params": [3.0, 0.35]}
//   unit      {"alpha": 1.0, "beta": 2.0, "gamma": 1.5, "baseline": {...}}
//   copula    {"family": "gumbel", "theta": 1.5}   ("independence" takes no theta)
//   system    {"units": [...], "shock_probs": [...]?, "copula": {...}?, "outlier_split": [n1, n2]?}
BaselineModel parse_baseline(const Json& j, const std::string& path = "baseline");
WeibullGParams parse_unit(const Json& j, const std::string& path = "unit");
ArchimedeanGenerator parse_generator(const Json& j, const std::string& path = "copula");
SystemSpec parse_system(const Json& j);

/// Reads and parses a system config file; every failure is a ConfigurationError
/// naming the file position (line:column) or the offending field path.
SystemSpec load_system_file(const std::filesystem::path& file);
Json parse_json_text(const std::string& text, const std::string& source);

Json to_json(const BaselineModel& b);
Json to_json(const WeibullGParams& u);
Json to_json(const ArchimedeanGenerator& g);
Json to_json(const SystemSpec& s);

/// 64-bit FNV-1a over the compact dump of j, as 16 hex digits.
std::string spec_hash(const Json& j);

}  // namespace wgorder
