#include "eri/timeutil.hpp"

#include <array>
#include <cctype>
#include <cstdio>

#include "eri/errors.hpp"

namespace eri {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> d = {31, 28, 31, 30, 31, 30,
                                            31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return d[m - 1];
}

// Civil date -> days since 1970-01-01 (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

int digits(const std::string& s, std::size_t pos, int count) {
  int v = 0;
  for (int i = 0; i < count; ++i) {
    char c = pos + i < s.size() ? s[pos + i] : '\0';
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("timestamp '" + s + "': expected digit at position " +
                       std::to_string(pos + i));
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::int64_t parse_rfc3339(const std::string& text) {
  if (text.size() < 19 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
      text[13] != ':' || text[16] != ':')
    throw ParseError("timestamp '" + text +
                     "': expected YYYY-MM-DDThh:mm:ss[Z|offset]");

  int year = digits(text, 0, 4);
  int month = digits(text, 5, 2);
  int day = digits(text, 8, 2);
  int hour = digits(text, 11, 2);
  int minute = digits(text, 14, 2);
  int second = digits(text, 17, 2);

  if (month < 1 || month > 12)
    throw ParseError("timestamp '" + text + "': month out of range");
  if (day < 1 || day > days_in_month(year, month))
    throw ParseError("timestamp '" + text + "': day out of range");
  if (hour > 23 || minute > 59 || second > 60)
    throw ParseError("timestamp '" + text + "': time out of range");
  if (second == 60) second = 59;  // fold leap seconds

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("timestamp '" + text + "': empty fractional seconds");
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;  // truncate sub-second precision
  }

  std::int64_t offset_s = 0;
  if (pos >= text.size())
    throw ParseError("timestamp '" + text + "': missing timezone");
  char tz = text[pos];
  if (tz == 'Z' || tz == 'z') {
    ++pos;
  } else if (tz == '+' || tz == '-') {
    int oh = digits(text, pos + 1, 2);
    if (pos + 3 >= text.size() || text[pos + 3] != ':')
      throw ParseError("timestamp '" + text + "': expected offset hh:mm");
    int om = digits(text, pos + 4, 2);
    offset_s = (static_cast<std::int64_t>(oh) * 60 + om) * 60;
    if (tz == '-') offset_s = -offset_s;
    pos += 6;
  } else {
    throw ParseError("timestamp '" + text + "': bad timezone designator");
  }
  if (pos != text.size())
    throw ParseError("timestamp '" + text + "': trailing characters");

  std::int64_t days = days_from_civil(year, month, day);
  return days * 86400 + hour * 3600 + minute * 60 + second - offset_s;
}

std::string format_rfc3339(std::int64_t epoch_s) {
  std::int64_t days = epoch_s / 86400;
  std::int64_t rem = epoch_s % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                static_cast<int>(rem % 60));
  return buf;
}

}  // namespace eri
