#include "wgorder/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wgorder {
namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ConfigurationError("field '" + path + "': expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigurationError("field '" + path + "." + key + "': missing");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigurationError("field '" + path + "': expected a number, got " + j.dump());
  return j.get<double>();
}

double positive(const Json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0) || !std::isfinite(v)) {
    throw ConfigurationError("field '" + path + "': must be positive and finite, got " + j.dump());
  }
  return v;
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigurationError("field '" + path + "': expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigurationError("field '" + path + "': expected a string");
  return j.get<std::string>();
}

// Re-raises library validation errors with the field path attached.
template <class F>
auto at_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ConfigurationError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigurationError("field '" + path + "': " + e.what());
  }
}

}  // namespace

BaselineModel parse_baseline(const Json& j, const std::string& path) {
  const auto family = text(field(j, "family", path), path + ".family");
  const auto params = numbers(field(j, "params", path), path + ".params");
  return at_path(path, [&] { return BaselineModel::from_name(family, params); });
}

WeibullGParams parse_unit(const Json& j, const std::string& path) {
  const double alpha = positive(field(j, "alpha", path), path + ".alpha");
  const double beta = positive(field(j, "beta", path), path + ".beta");
  const double gamma = positive(field(j, "gamma", path), path + ".gamma");
  auto baseline = parse_baseline(field(j, "baseline", path), path + ".baseline");
  return at_path(path, [&] { return WeibullGParams(alpha, beta, gamma, baseline); });
}

ArchimedeanGenerator parse_generator(const Json& j, const std::string& path) {
  const auto family = text(field(j, "family", path), path + ".family");
  std::optional<double> theta;
  if (j.contains("theta")) theta = number(j["theta"], path + ".theta");
  return at_path(path, [&] { return ArchimedeanGenerator::from_name(family, theta); });
}

SystemSpec parse_system(const Json& j) {
  const auto& units_json = field(j, "units", "system");
  if (!units_json.is_array() || units_json.empty()) {
    throw ConfigurationError("field 'units': expected a non-empty array of units");
  }
  std::vector<WeibullGParams> units;
  for (std::size_t i = 0; i < units_json.size(); ++i) {
    units.push_back(parse_unit(units_json[i], "units[" + std::to_string(i) + "]"));
  }
  std::optional<std::vector<double>> shocks;
  if (j.contains("shock_probs")) shocks = numbers(j["shock_probs"], "shock_probs");
  std::optional<ArchimedeanGenerator> generator;
  if (j.contains("copula")) generator = parse_generator(j["copula"], "copula");
  std::optional<OutlierSplit> split;
  if (j.contains("outlier_split")) {
    const auto& s = j["outlier_split"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned()) {
      throw ConfigurationError("field 'outlier_split': expected [n1, n2] with nonnegative integers");
    }
    split = OutlierSplit{s[0].get<std::size_t>(), s[1].get<std::size_t>()};
  }
  return at_path("system", [&] { return SystemSpec(units, shocks, generator, split); });
}

Json parse_json_text(const std::string& content, const std::string& source) {
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, content.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (content[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigurationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

SystemSpec load_system_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigurationError(file.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const Json j = parse_json_text(buf.str(), file.string());
  try {
    return parse_system(j);
  } catch (const ConfigurationError& e) {
    throw ConfigurationError(file.string() + ": " + e.what());
  }
}

Json to_json(const BaselineModel& b) { return Json{{"family", b.name()}, {"params", b.params()}}; }

Json to_json(const WeibullGParams& u) {
  return Json{{"alpha", u.alpha}, {"beta", u.beta}, {"gamma", u.gamma}, {"baseline", to_json(u.baseline)}};
}

Json to_json(const ArchimedeanGenerator& g) {
  Json j{{"family", g.name()}};
  if (g.family() != GeneratorFamily::independence) j["theta"] = g.theta();
  return j;
}

Json to_json(const SystemSpec& s) {
  Json units = Json::array();
  for (const auto& u : s.units()) units.push_back(to_json(u));
  Json j{{"units", units}};
  if (s.shock_probs()) j["shock_probs"] = *s.shock_probs();
  if (s.generator()) j["copula"] = to_json(*s.generator());
  if (s.outlier_split()) j["outlier_split"] = {s.outlier_split()->n1, s.outlier_split()->n2};
  return j;
}

std::string spec_hash(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wgorder
