#pragma once

#include <string>
#include <vector>

namespace swh::cli {

/// Comma-separated integers, e.g. "2,3,10". Throws swh::PreconditionError on
/// empty or malformed input.
std::vector<int> parse_int_list(const std::string& text, const std::string& flag = "list");

/// Comma-separated reals where each item may be a range start:stop:step
/// (inclusive of stop up to rounding), e.g. "0.1:0.9:0.1" or "0.5,0.63".
std::vector<double> parse_real_list(const std::string& text, const std::string& flag = "list");

}  // namespace swh::cli
