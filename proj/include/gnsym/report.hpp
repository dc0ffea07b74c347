#pragma once

#include <string>

#include "gnsym/verify.hpp"
#include "json.hpp"

namespace gnsym {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "gnsym-report/1";

Json to_json(const Verdict& v);
Json to_json(const SlopeReport& r);
Json to_json(const ExtremizerResult& r);
Json to_json(const WeightedCheck& w);
Json to_json(const RegionPolyline& p);

// One row per sample; the header is fixed for a given report kind.
std::string slope_csv(const SlopeReport& r);

// Writes the whole string at once, creating parent directories.
void write_text(const std::string& path, const std::string& text);

}  // namespace gnsym
