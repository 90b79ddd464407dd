#include "fuzzy/format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "fuzzy/errors.hpp"

namespace fuzzy {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  if (!std::isfinite(value)) {
    throw DataError("cannot format non-finite value");
  }
  // Fixed notation of 1e300 needs ~310 characters.
  std::array<char, 512> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed);
  if (res.ec != std::errc{}) throw DataError("number formatting failed");
  return std::string(buf.data(), res.ptr);
}

std::string describe_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return format_number(value);
}

double parse_number(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw DataError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace fuzzy
