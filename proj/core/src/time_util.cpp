#include "kcx/time_util.hpp"

#include <chrono>
#include <cstdio>

#include "kcx/error.hpp"

namespace kcx {

namespace {

bool parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::int64_t parse_iso8601_utc(std::string_view s) {
  using namespace std::chrono;
  int y, mo, d, h, mi, se;
  bool ok = s.size() == 20 && s[4] == '-' && s[7] == '-' && s[10] == 'T' && s[13] == ':' &&
            s[16] == ':' && s[19] == 'Z' && parse_fixed_uint(s, 0, 4, y) &&
            parse_fixed_uint(s, 5, 2, mo) && parse_fixed_uint(s, 8, 2, d) &&
            parse_fixed_uint(s, 11, 2, h) && parse_fixed_uint(s, 14, 2, mi) &&
            parse_fixed_uint(s, 17, 2, se);
  if (!ok) throw_data("invalid ISO-8601 UTC timestamp: '" + std::string(s) + "'");
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || se > 60)
    throw_data("out-of-range ISO-8601 UTC timestamp: '" + std::string(s) + "'");
  if (se == 60) se = 59;  // leap seconds collapse to :59
  std::int64_t days = sys_days{ymd}.time_since_epoch().count();
  return days * 86400 + h * 3600 + mi * 60 + se;
}

std::string format_iso8601_utc(std::int64_t t) {
  using namespace std::chrono;
  std::int64_t days = t >= 0 ? t / 86400 : (t - 86399) / 86400;
  std::int64_t rem = t - days * 86400;
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()), int(rem / 3600),
                int(rem % 3600 / 60), int(rem % 60));
  return buf;
}

int year_of(std::int64_t t) {
  using namespace std::chrono;
  std::int64_t days = t >= 0 ? t / 86400 : (t - 86399) / 86400;
  return int(year_month_day{sys_days{std::chrono::days{days}}}.year());
}

std::int64_t year_start(int y) {
  using namespace std::chrono;
  return sys_days{year{y} / 1 / 1}.time_since_epoch().count() * std::int64_t{86400};
}

}  // namespace kcx
