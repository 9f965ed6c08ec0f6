#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "toric/chow.hpp"
#include "toric/fano.hpp"
#include "toric/surfaces.hpp"

namespace toric {

using Json = nlohmann::json;

inline constexpr std::string_view kToolName = "toric2fano";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
Json to_json(const Integer& value);
Integer integer_from_json(const Json& value);
Json to_json(const Cone& cone);
Cone cone_from_json(const Json& value);

/// Parses one JSON document; syntax errors become MalformedInput with a line number.
Json parse_json_text(std::string_view text);

/// {"dim": d, "rays": [[...], ...], "max_cones": [[...], ...]} with 0-based ray indices.
RawFan raw_fan_from_json(const Json& value);
Fan fan_from_json(const Json& value);
Json fan_to_json(const Fan& fan, const std::string& name = {});

/// {"degree": l, "coeffs": {"i,j,...": N}}.
Json to_json(const CycleClass& cls);
CycleClass cycle_class_from_json(const Json& value);

Json to_json(const WallRelation& relation);
Json to_json(const ChernDegrees& chern);
Json to_json(const SurfaceKind& kind, const Cone& cone);
Json to_json(const FanoReport& report);
Json to_json(const BundleSpec& spec);
Json to_json(const RankTwoClosedForms& forms);
Json to_json(const RankTwoSweep& sweep);

/// One fan object per non-blank line; an optional "name" field labels the entry.
/// Parse and validation failures are recorded per entry.
std::vector<DatabaseEntry> parse_database(std::string_view text);

Json scan_report(const ScanResult& result, std::string_view input_digest, bool fast);

std::string sha256_hex(std::string_view data);

/// Aligned "path  value" lines for terminal reading.
std::string render_pretty(const Json& value);

}  // namespace toric
