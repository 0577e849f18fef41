#include "efpm/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "efpm/error.hpp"

namespace efpm {

namespace {

std::string non_finite(double value) {
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return non_finite(value);
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return non_finite(value);
  std::string out(buf.data(), end);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string format_shortest(double value) {
  if (!std::isfinite(value)) return non_finite(value);
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string to_string(const ParseError& e) {
  std::string out = std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
  if (!e.offending_text.empty()) out += " ['" + e.offending_text + "']";
  return out;
}

}  // namespace efpm
