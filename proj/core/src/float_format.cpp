#include "kcx/float_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

#include "kcx/error.hpp"

namespace kcx {

std::string format_double(double v) {
  if (std::isnan(v)) throw_data("refusing to serialize NaN");
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw_data("double formatting failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s, std::string_view what) {
  double v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw_data("invalid number for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_int64(std::string_view s, std::string_view what) {
  std::int64_t v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw_data("invalid integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace kcx
