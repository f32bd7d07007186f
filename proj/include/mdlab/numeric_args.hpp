#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdlab {

/// Parses a non-negative integer written plainly or in scientific notation
/// ("10000000", "1e7", "2.5e3"). The value must be an exact integer below
/// 2^63; throws invalid_argument otherwise.
std::uint64_t parse_integer(const std::string& text);

/// Real number in any strtod form.
double parse_real(const std::string& text);

/// Comma-separated items, each an integer or an inclusive range "a..b".
std::vector<std::uint64_t> parse_integer_list(const std::string& text);

/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);

} // namespace mdlab
