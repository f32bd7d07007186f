#include "mdlab/numeric_args.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mdlab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

[[noreturn]] void bad(const std::string& text, const char* why) {
  throw std::invalid_argument("'" + text + "' is not " + why);
}

} // namespace

std::uint64_t parse_integer(const std::string& raw) {
  const std::string text = trim(raw);
  std::string digits;
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  std::int64_t point = static_cast<std::int64_t>(digits.size());
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  }
  if (digits.empty()) bad(text, "an integer");
  std::int64_t exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    std::string e;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
    if (e.empty() || e.size() > 4) bad(text, "an integer");
    exponent = std::stoll(e) * (negative ? -1 : 1);
  }
  if (i != text.size()) bad(text, "an integer");
  // value = digits * 10^(point + exponent - digits.size())
  std::int64_t shift = point + exponent - static_cast<std::int64_t>(digits.size());
  while (shift < 0) {
    if (digits.back() != '0') bad(text, "an exact integer");
    digits.pop_back();
    ++shift;
    if (digits.empty()) digits = "0";
  }
  digits.append(static_cast<std::size_t>(shift), '0');
  const auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  if (digits.size() > 19) bad(text, "below 2^63");
  const unsigned long long v = std::stoull(digits);
  if (v > static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max())) bad(text, "below 2^63");
  return v;
}

double parse_real(const std::string& raw) {
  const std::string text = trim(raw);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) bad(text, "a number");
  return v;
}

std::vector<std::uint64_t> parse_integer_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_integer(item));
      continue;
    }
    const auto lo = parse_integer(item.substr(0, dots)), hi = parse_integer(item.substr(dots + 2));
    if (lo > hi) bad(item, "an increasing range");
    if (hi - lo > 10'000'000) bad(item, "a range of at most 10^7 items");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) bad(text, "a nonempty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  if (out.empty()) bad(text, "a nonempty list");
  return out;
}

} // namespace mdlab
