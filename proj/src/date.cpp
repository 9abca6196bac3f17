#include "golfstats/date.hpp"

#include <charconv>
#include <cstdio>

#include "golfstats/errors.hpp"

namespace golfstats {

namespace {

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && leap(y)) return 29;
  return kDays[m - 1];
}

// Civil <-> serial day conversions (proleptic Gregorian, epoch 1970-01-01).
long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

Date civil_from_days(long z) {
  z += 719468;
  const long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const long y = static_cast<long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
              static_cast<int>(d)};
}

int parse_int_field(const std::string& text, std::size_t begin, std::size_t len) {
  int value = 0;
  const char* first = text.data() + begin;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc{} || ptr != first + len) {
    throw ValidationError("invalid date: '" + text + "'");
  }
  return value;
}

}  // namespace

bool Date::valid() const {
  return year >= 1 && month >= 1 && month <= 12 && day >= 1 &&
         day <= days_in_month(year, month);
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

Date Date::plus_days(long days) const {
  return civil_from_days(days_from_civil(year, month, day) + days);
}

Date Date::parse(const std::string& text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw ValidationError("invalid date: '" + text + "' (expected YYYY-MM-DD)");
  }
  Date d{parse_int_field(text, 0, 4), parse_int_field(text, 5, 2),
         parse_int_field(text, 8, 2)};
  if (!d.valid()) {
    throw ValidationError("invalid date: '" + text + "'");
  }
  return d;
}

}  // namespace golfstats
