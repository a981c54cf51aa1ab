#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kcx {

// All instants are UTC seconds since the Unix epoch.

// Parses "YYYY-MM-DDThh:mm:ssZ". Throws Error(data) on anything else.
std::int64_t parse_iso8601_utc(std::string_view s);

std::string format_iso8601_utc(std::int64_t epoch_seconds);

// Calendar year containing the instant (UTC).
int year_of(std::int64_t epoch_seconds);

// [start, end) bounds of a calendar year in epoch seconds.
std::int64_t year_start(int year);

}  // namespace kcx
