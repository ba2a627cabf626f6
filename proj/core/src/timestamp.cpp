#include "siturec/timestamp.hpp"

#include <cctype>
#include <cstdio>

#include "siturec/errors.hpp"

namespace siturec {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

[[noreturn]] void bad_timestamp(std::string_view text, const char* why) {
  throw ParseError("invalid timestamp \"" + std::string(text) + "\": " + why);
}

bool valid_civil_date(int y, unsigned m, unsigned d) {
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{m},
                                     std::chrono::day{d}}
      .ok();
}

}  // namespace

CivilDate parse_civil_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !all_digits(text.substr(0, 4)) ||
      !all_digits(text.substr(5, 2)) || !all_digits(text.substr(8, 2))) {
    throw ParseError("invalid date \"" + std::string(text) + "\": expected YYYY-MM-DD");
  }
  const CivilDate date{to_int(text.substr(0, 4)), static_cast<unsigned>(to_int(text.substr(5, 2))),
                       static_cast<unsigned>(to_int(text.substr(8, 2)))};
  if (!valid_civil_date(date.year, date.month, date.day)) {
    throw ParseError("invalid date \"" + std::string(text) + "\": no such calendar day");
  }
  return date;
}

std::string to_string(const CivilDate& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", date.year, date.month, date.day);
  return buf;
}

Timestamp Timestamp::parse(std::string_view text) {
  // YYYY-MM-DD 'T' HH:MM:SS [.fraction] ('Z' | sign HH:MM)
  if (text.size() < 20) bad_timestamp(text, "too short");
  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') {
    bad_timestamp(text, "expected 'T' between date and time");
  }
  if (text[13] != ':' || text[16] != ':') bad_timestamp(text, "expected HH:MM:SS");
  const std::string_view hh = text.substr(11, 2), mi = text.substr(14, 2), ss = text.substr(17, 2);
  if (!all_digits(hh) || !all_digits(mi) || !all_digits(ss)) {
    bad_timestamp(text, "expected HH:MM:SS");
  }

  Timestamp ts;
  const CivilDate date = [&] {
    try {
      return parse_civil_date(text.substr(0, 10));
    } catch (const ParseError&) {
      bad_timestamp(text, "malformed date part");
    }
  }();
  ts.year = date.year;
  ts.month = date.month;
  ts.day = date.day;
  ts.hour = static_cast<unsigned>(to_int(hh));
  ts.minute = static_cast<unsigned>(to_int(mi));
  ts.second = static_cast<unsigned>(to_int(ss));
  if (ts.hour > 23) bad_timestamp(text, "hour out of range");
  if (ts.minute > 59) bad_timestamp(text, "minute out of range");
  if (ts.second > 59) bad_timestamp(text, "second out of range");

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad_timestamp(text, "empty fractional seconds");
    // fractional seconds are truncated
  }
  if (pos >= text.size()) bad_timestamp(text, "missing UTC offset");

  const char c = text[pos];
  if (c == 'Z' || c == 'z') {
    if (pos + 1 != text.size()) bad_timestamp(text, "trailing characters after 'Z'");
    ts.offset_minutes = 0;
    return ts;
  }
  if (c != '+' && c != '-') bad_timestamp(text, "expected 'Z' or signed offset");
  if (pos + 6 != text.size() || text[pos + 3] != ':' || !all_digits(text.substr(pos + 1, 2)) ||
      !all_digits(text.substr(pos + 4, 2))) {
    bad_timestamp(text, "expected offset as +HH:MM or -HH:MM");
  }
  const int oh = to_int(text.substr(pos + 1, 2));
  const int om = to_int(text.substr(pos + 4, 2));
  if (oh > 23 || om > 59) bad_timestamp(text, "offset out of range");
  ts.offset_minutes = (oh * 60 + om) * (c == '-' ? -1 : 1);
  return ts;
}

std::string Timestamp::to_string() const {
  char buf[40];
  int n = std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02u:%02u:%02u", year, month, day, hour,
                        minute, second);
  if (offset_minutes == 0) {
    buf[n++] = 'Z';
    buf[n] = '\0';
  } else {
    const int abs_min = offset_minutes < 0 ? -offset_minutes : offset_minutes;
    std::snprintf(buf + n, sizeof(buf) - n, "%c%02d:%02d", offset_minutes < 0 ? '-' : '+',
                  abs_min / 60, abs_min % 60);
  }
  return buf;
}

std::int64_t Timestamp::epoch_seconds() const {
  const std::chrono::sys_days days{std::chrono::year_month_day{
      std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}}};
  std::int64_t secs = static_cast<std::int64_t>(days.time_since_epoch().count()) * 86400;
  secs += static_cast<std::int64_t>(hour) * 3600 + minute * 60 + second;
  secs -= static_cast<std::int64_t>(offset_minutes) * 60;
  return secs;
}

std::chrono::weekday Timestamp::weekday() const {
  return std::chrono::weekday{std::chrono::sys_days{std::chrono::year_month_day{
      std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}}}};
}

}  // namespace siturec
