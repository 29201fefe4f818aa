#include "swh_cli/parse.hpp"

#include <cmath>
#include <sstream>

#include "swh/error.hpp"

namespace swh::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw PreconditionError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw PreconditionError("not a number: '" + s + "'");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  if (text.empty()) throw PreconditionError(flag + ": empty list");
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
  if (text.empty()) throw PreconditionError(flag + ": empty list");
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) {
    const std::vector<std::string> range = split(item, ':');
    if (range.size() == 1) {
      out.push_back(to_real(item));
      continue;
    }
    if (range.size() != 3) throw PreconditionError("range must be start:stop:step, got '" + item + "'");
    const double start = to_real(range[0]);
    const double stop = to_real(range[1]);
    const double step = to_real(range[2]);
    if (!(step > 0.0) || stop < start) throw PreconditionError("range needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      // Print-and-reparse so 0.1 + 2 * 0.1 lands on 0.3, not 0.30000000000000004.
      std::ostringstream s;
      s.precision(12);
      s << start + static_cast<double>(i) * step;
      out.push_back(std::stod(s.str()));
    }
  }
  return out;
}

}  // namespace swh::cli
