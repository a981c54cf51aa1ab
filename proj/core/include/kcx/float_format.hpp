#pragma once

#include <string>
#include <string_view>

namespace kcx {

// Shortest decimal form that round-trips to the same double. Serialized
// artifacts must be byte-identical across runs and platforms, so every
// floating-point cell goes through this one function.
std::string format_double(double v);

// Strict double parse of an entire field. Throws Error(data) on junk.
double parse_double(std::string_view s, std::string_view what);

std::int64_t parse_int64(std::string_view s, std::string_view what);

}  // namespace kcx
