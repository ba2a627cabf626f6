#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace siturec {

struct CivilDate {
  int year = 0;
  unsigned month = 1;
  unsigned day = 1;

  auto operator<=>(const CivilDate&) const = default;
};

/// Parses "YYYY-MM-DD".
CivilDate parse_civil_date(std::string_view text);

std::string to_string(const CivilDate& date);

/// Calendar date-time with a fixed UTC offset, second precision.
/// Fractional seconds are accepted on parse and truncated. Rule
/// evaluation (weekday, hour) happens on the civil fields, i.e. in the
/// timestamp's own local time.
struct Timestamp {
  int year = 1970;
  unsigned month = 1;
  unsigned day = 1;
  unsigned hour = 0;
  unsigned minute = 0;
  unsigned second = 0;
  int offset_minutes = 0;

  /// Parses an RFC-3339 date-time, e.g. "2011-10-03T12:10:00+02:00".
  static Timestamp parse(std::string_view rfc3339);

  /// Canonical RFC-3339 form; a zero offset renders as "Z".
  std::string to_string() const;

  /// UTC instant, for "newer than" comparisons across offsets.
  std::int64_t epoch_seconds() const;

  CivilDate date() const { return CivilDate{year, month, day}; }

  /// Weekday of the local civil date.
  std::chrono::weekday weekday() const;

  bool operator==(const Timestamp&) const = default;
};

inline bool earlier_instant(const Timestamp& a, const Timestamp& b) {
  return a.epoch_seconds() < b.epoch_seconds();
}

}  // namespace siturec
