#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace swh::cli {

using Value = std::variant<std::int64_t, std::uint64_t, double, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

/// Rounds to `digits` significant decimal digits (the value printed by %.*g).
double round_significant(double value, int digits);

/// Integers that fit in int64 are stored as int64 so that a JSON round trip
/// (which reads non-negative integers back as unsigned) is the identity.
Value integer_value(std::uint64_t v);

/// Output of one CLI invocation. Serializes to a single JSON document or to a
/// flat CSV with one row per result record.
///
/// JSON layout:
///   { "command": str, "parameters": {..}, "results": [ {..}, .. ],
///     "metadata": { "tool_version": str, "seed": uint|null,
///                   "timing_ms": number, "notes": [str] } }
/// CSV columns follow the field order of the first record.
struct RunReport {
  std::string command;
  Record parameters;
  std::vector<Record> results;
  std::string tool_version = SWH_VERSION;
  std::optional<std::uint64_t> seed;
  double timing_ms = 0.0;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
  static RunReport from_json(const nlohmann::ordered_json& doc);
  std::string to_csv() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// RFC 4180 field quoting: fields holding a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_field(const std::string& text);

}  // namespace swh::cli
