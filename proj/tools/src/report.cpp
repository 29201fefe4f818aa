#include "swh_cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swh::cli {

namespace {

using nlohmann::ordered_json;

ordered_json value_to_json(const Value& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

Value value_from_json(const ordered_json& j) {
  if (j.is_number_unsigned()) return integer_value(j.get<std::uint64_t>());
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("report values must be numbers or strings");
}

ordered_json record_to_json(const Record& r) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : r) out[key] = value_to_json(value);
  return out;
}

Record record_from_json(const ordered_json& j) {
  Record r;
  for (const auto& [key, value] : j.items()) r.emplace_back(key, value_from_json(value));
  return r;
}

std::string value_to_csv(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return csv_field(*s);
  return value_to_json(v).dump();
}

}  // namespace

double round_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

Value integer_value(std::uint64_t v) {
  if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json RunReport::to_json() const {
  ordered_json doc;
  doc["command"] = command;
  doc["parameters"] = record_to_json(parameters);
  doc["results"] = ordered_json::array();
  for (const Record& r : results) doc["results"].push_back(record_to_json(r));
  ordered_json meta;
  meta["tool_version"] = tool_version;
  meta["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  meta["timing_ms"] = timing_ms;
  meta["notes"] = notes;
  doc["metadata"] = std::move(meta);
  return doc;
}

RunReport RunReport::from_json(const ordered_json& doc) {
  RunReport r;
  r.command = doc.at("command").get<std::string>();
  r.parameters = record_from_json(doc.at("parameters"));
  for (const auto& item : doc.at("results")) r.results.push_back(record_from_json(item));
  const auto& meta = doc.at("metadata");
  r.tool_version = meta.at("tool_version").get<std::string>();
  if (!meta.at("seed").is_null()) r.seed = meta.at("seed").get<std::uint64_t>();
  r.timing_ms = meta.at("timing_ms").get<double>();
  r.notes = meta.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  if (results.empty()) return {};
  const Record& head = results.front();
  for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << csv_field(head[i].first);
  out << "\r\n";
  for (const Record& r : results) {
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (i) out << ',';
      for (const auto& [key, value] : r) {
        if (key == head[i].first) {
          out << value_to_csv(value);
          break;
        }
      }
    }
    out << "\r\n";
  }
  return out.str();
}

}  // namespace swh::cli
