#pragma once

#include <compare>
#include <string>

namespace golfstats {

// Calendar date; ISO-8601 "YYYY-MM-DD" on the wire.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  bool valid() const;
  std::string to_string() const;
  Date plus_days(long days) const;

  // Throws ValidationError on anything but a valid YYYY-MM-DD.
  static Date parse(const std::string& text);
};

}  // namespace golfstats
