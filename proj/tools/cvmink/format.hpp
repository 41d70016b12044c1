#pragma once

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvmink::cli {

inline constexpr int kSignificantDigits = 12;

/// 12 significant digits, shortest of fixed/scientific, lowercase 'e',
/// independent of the C locale.
inline std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, kSignificantDigits);
  return std::string(buf, res.ptr);
}

inline std::string format_optional(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string();
}

/// Rounds to what format_real prints, so JSON and CSV outputs agree.
inline double round_printed(double value) {
  const std::string s = format_real(value);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

inline double parse_real(std::string_view s) {
  double out = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return out;
}

inline std::optional<double> parse_optional_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_real(s);
}

}  // namespace cvmink::cli
