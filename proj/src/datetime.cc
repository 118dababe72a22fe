// Copyright 2026 The Datasmell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "datasmell/datetime.h"

#include <algorithm>
#include <array>
#include <cstdio>

#include "datasmell/text.h"

namespace datasmell::datetime {
namespace {

constexpr size_t kMaxTokenLength = 40;
constexpr size_t kMaxTokens = 24;

struct Tok {
  enum Kind : uint8_t { kDigits, kAlpha, kSep };
  Kind kind = kSep;
  std::string_view text;
  int value = 0;  // digits only
};

struct TokenList {
  std::array<Tok, kMaxTokens> tok;
  size_t n = 0;

  bool Digits(size_t k, size_t lo, size_t hi) const {
    return k < n && tok[k].kind == Tok::kDigits && tok[k].text.size() >= lo &&
           tok[k].text.size() <= hi;
  }
  bool Sep(size_t k, char c) const {
    return k < n && tok[k].kind == Tok::kSep && tok[k].text[0] == c;
  }
  char SepChar(size_t k) const {
    return (k < n && tok[k].kind == Tok::kSep) ? tok[k].text[0] : '\0';
  }
  bool Alpha(size_t k) const { return k < n && tok[k].kind == Tok::kAlpha; }
  int Value(size_t k) const { return tok[k].value; }
};

bool AllowedChar(char c) {
  if (text::IsDigit(c) || text::IsAsciiAlpha(c)) return true;
  switch (c) {
    case ' ':
    case '/':
    case '-':
    case '.':
    case ':':
    case ',':
    case '+':
      return true;
    default:
      return false;
  }
}

// Splits into digit runs, letter runs and single separator characters.
// Rejects anything that cannot be a date/time skeleton.
bool Tokenize(std::string_view s, TokenList& out) {
  if (s.empty() || s.size() > kMaxTokenLength) return false;
  if (!text::IsDigit(s[0]) && !text::IsAsciiAlpha(s[0])) return false;
  size_t i = 0;
  while (i < s.size()) {
    if (!AllowedChar(s[i])) return false;
    if (out.n == kMaxTokens) return false;
    Tok& t = out.tok[out.n++];
    size_t j = i;
    if (text::IsDigit(s[i])) {
      int v = 0;
      while (j < s.size() && text::IsDigit(s[j])) {
        if (j - i < 9) v = v * 10 + (s[j] - '0');
        ++j;
      }
      t.kind = Tok::kDigits;
      t.value = v;
    } else if (text::IsAsciiAlpha(s[i])) {
      while (j < s.size() && text::IsAsciiAlpha(s[j])) ++j;
      t.kind = Tok::kAlpha;
    } else {
      j = i + 1;
      t.kind = Tok::kSep;
    }
    t.text = s.substr(i, j - i);
    i = j;
  }
  return true;
}

bool EqualsNoCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    char x = a[i];
    char y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x + 32);
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y + 32);
    if (x != y) return false;
  }
  return true;
}

constexpr std::array<std::string_view, 12> kMonthFull = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};
constexpr std::array<std::string_view, 12> kMonthTitle = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

// 1-12 for a month name, 0 otherwise. `full` reports the long form.
int MonthFromName(std::string_view word, bool* full) {
  for (int m = 0; m < 12; ++m) {
    if (EqualsNoCase(word, kMonthFull[m])) {
      *full = word.size() > 3;
      return m + 1;
    }
    if (word.size() == 3 && EqualsNoCase(word, kMonthFull[m].substr(0, 3))) {
      *full = false;
      return m + 1;
    }
  }
  return 0;
}

enum class DateForm : uint8_t {
  kNone,
  kIso,        // YYYY-M-D
  kYearFirst,  // YYYY/M/D or YYYY.M.D
  kNumeric3,   // D/D/YY or D/D/YYYY (also . and -)
  kNumeric2,   // D/D
  kMonthFirst,
  kDayFirst,
};

struct Skeleton {
  DateForm form = DateForm::kNone;
  std::array<int, 3> slot{};
  std::array<int, 3> slot_len{};
  int nslots = 0;
  int month_name = 0;
  bool has_time = false;
  int hour = 0;
  int minute = 0;
  int second = 0;
  bool has_second = false;
  int nanos = 0;
  Designator designator = Designator::kNone;
  bool has_zone = false;
  int zone_minutes = 0;
  std::string signature;
};

void AddSlot(Skeleton& sk, const TokenList& t, size_t k) {
  sk.slot[sk.nslots] = t.Value(k);
  sk.slot_len[sk.nslots] = static_cast<int>(t.tok[k].text.size());
  ++sk.nslots;
}

void AppendSlotName(Skeleton& sk, const TokenList& t, size_t k, int position) {
  if (t.tok[k].text.size() == 4) {
    sk.signature += "YYYY";
  } else {
    sk.signature += 'D';
    sk.signature += static_cast<char>('0' + position);
  }
}

// Returns the index after the date part, or -1.
int ParseDate(const TokenList& t, Skeleton& sk) {
  if (t.Digits(0, 1, 4)) {
    const size_t len = t.tok[0].text.size();
    const char c = t.SepChar(1);
    if (len == 4 && (c == '-' || c == '/' || c == '.') && t.Digits(2, 1, 2) &&
        t.Sep(3, c) && t.Digits(4, 1, 2)) {
      sk.form = c == '-' ? DateForm::kIso : DateForm::kYearFirst;
      AddSlot(sk, t, 0);
      AddSlot(sk, t, 2);
      AddSlot(sk, t, 4);
      sk.signature = std::string("YYYY") + c + "D2" + c + "D3";
      return 5;
    }
    if (len > 2) return -1;
    if ((c == '/' || c == '.' || c == '-') && t.Digits(2, 1, 2)) {
      if (t.Sep(3, c) && (t.Digits(4, 2, 2) || t.Digits(4, 4, 4))) {
        sk.form = DateForm::kNumeric3;
        AddSlot(sk, t, 0);
        AddSlot(sk, t, 2);
        AddSlot(sk, t, 4);
        sk.signature = std::string("D1") + c + "D2" + c;
        AppendSlotName(sk, t, 4, 3);
        return 5;
      }
      if (c == '/' && !t.Sep(3, c)) {
        sk.form = DateForm::kNumeric2;
        AddSlot(sk, t, 0);
        AddSlot(sk, t, 2);
        sk.signature = "D1/D2";
        return 3;
      }
      return -1;
    }
    bool full = false;
    if ((c == ' ' || c == '-') && t.Alpha(2) &&
        (sk.month_name = MonthFromName(t.tok[2].text, &full)) != 0) {
      sk.form = DateForm::kDayFirst;
      AddSlot(sk, t, 0);
      sk.signature = std::string("D1") + c + (full ? "MONTH" : "MON");
      if (t.Sep(3, c) && (t.Digits(4, 2, 2) || t.Digits(4, 4, 4)) &&
          !t.Sep(5, ':')) {
        AddSlot(sk, t, 4);
        sk.signature += c;
        AppendSlotName(sk, t, 4, 2);
        return 5;
      }
      return 3;
    }
    return -1;
  }
  bool full = false;
  if (t.Alpha(0) && (sk.month_name = MonthFromName(t.tok[0].text, &full))) {
    const char c = t.SepChar(1);
    if ((c != ' ' && c != '-') || !t.Digits(2, 1, 2)) return -1;
    sk.form = DateForm::kMonthFirst;
    AddSlot(sk, t, 2);
    sk.signature = std::string(full ? "MONTH" : "MON") + c + "D1";
    size_t k = 3;
    if (c == ' ') {
      const bool comma = t.Sep(k, ',');
      const size_t kk = comma ? k + 1 : k;
      if (t.Sep(kk, ' ') && t.Digits(kk + 1, 4, 4)) {
        AddSlot(sk, t, kk + 1);
        sk.signature += comma ? ", YYYY" : " YYYY";
        return static_cast<int>(kk + 2);
      }
      if (comma) return -1;
      return static_cast<int>(k);
    }
    if (t.Sep(k, '-') && t.Digits(k + 1, 4, 4)) {
      AddSlot(sk, t, k + 1);
      sk.signature += "-YYYY";
      return static_cast<int>(k + 2);
    }
    return static_cast<int>(k);
  }
  return -1;
}

// Parses a clock time covering tokens [j, n). Zones only follow ISO dates.
bool ParseTime(const TokenList& t, size_t j, bool allow_zone, Skeleton& sk) {
  if (!t.Digits(j, 1, 2) || !t.Sep(j + 1, ':') || !t.Digits(j + 2, 2, 2)) {
    return false;
  }
  sk.has_time = true;
  sk.hour = t.Value(j);
  sk.minute = t.Value(j + 2);
  sk.signature += "h:m";
  size_t k = j + 3;
  if (t.Sep(k, ':') && t.Digits(k + 1, 2, 2)) {
    sk.has_second = true;
    sk.second = t.Value(k + 1);
    sk.signature += ":s";
    k += 2;
    if (t.Sep(k, '.') && t.Digits(k + 1, 1, 9)) {
      const std::string_view frac = t.tok[k + 1].text;
      int nanos = 0;
      for (char ch : frac) nanos = nanos * 10 + (ch - '0');
      for (size_t p = frac.size(); p < 9; ++p) nanos *= 10;
      sk.nanos = nanos;
      sk.signature += ".f";
      sk.signature += static_cast<char>('0' + frac.size());
      k += 2;
    }
  }
  size_t kk = k;
  const bool space = t.Sep(kk, ' ');
  if (space) ++kk;
  if (t.Alpha(kk)) {
    const std::string_view w = t.tok[kk].text;
    if (EqualsNoCase(w, "am") || EqualsNoCase(w, "pm")) {
      sk.designator = EqualsNoCase(w, "am") ? Designator::kAm : Designator::kPm;
      sk.signature += space ? " AP" : "AP";
      k = kk + 1;
    } else if ((EqualsNoCase(w, "a") || EqualsNoCase(w, "p")) &&
               t.Sep(kk + 1, '.') && t.Alpha(kk + 2) &&
               EqualsNoCase(t.tok[kk + 2].text, "m") && t.Sep(kk + 3, '.')) {
      sk.designator = EqualsNoCase(w, "a") ? Designator::kAm : Designator::kPm;
      sk.signature += space ? " A.P." : "A.P.";
      k = kk + 4;
    }
  }
  if (allow_zone && sk.designator == Designator::kNone && k < t.n) {
    const char c = t.SepChar(k);
    if (t.Alpha(k) && t.tok[k].text == "Z") {
      sk.has_zone = true;
      sk.signature += 'Z';
      k += 1;
    } else if ((c == '+' || c == '-') && t.Digits(k + 1, 2, 2) &&
               t.Sep(k + 2, ':') && t.Digits(k + 3, 2, 2)) {
      sk.has_zone = true;
      sk.zone_minutes = (t.Value(k + 1) * 60 + t.Value(k + 3)) *
                        (c == '-' ? -1 : 1);
      sk.signature += "+hh:mm";
      k += 4;
    } else if ((c == '+' || c == '-') && t.Digits(k + 1, 4, 4)) {
      const int v = t.Value(k + 1);
      sk.has_zone = true;
      sk.zone_minutes = ((v / 100) * 60 + v % 100) * (c == '-' ? -1 : 1);
      sk.signature += "+hhmm";
      k += 2;
    }
  }
  return k == t.n;
}

std::optional<Skeleton> ParseSkeleton(std::string_view raw) {
  TokenList t;
  if (!Tokenize(raw, t)) return std::nullopt;
  Skeleton sk;
  const int next = ParseDate(t, sk);
  if (next >= 0) {
    const auto n = static_cast<size_t>(next);
    if (n == t.n) return sk;
    const bool iso = sk.form == DateForm::kIso;
    if (t.Sep(n, ' ')) {
      sk.signature += ' ';
    } else if (iso && t.Alpha(n) && t.tok[n].text == "T") {
      sk.signature += 'T';
    } else {
      return std::nullopt;
    }
    if (!ParseTime(t, n + 1, iso, sk)) return std::nullopt;
    return sk;
  }
  Skeleton time_only;
  if (!ParseTime(t, 0, false, time_only)) return std::nullopt;
  return time_only;
}

struct DateReading {
  DateOrder order = DateOrder::kNone;
  int year = 0;
  int month = 0;
  int day = 0;
  bool has_year = false;
  std::array<SlotRole, 3> roles{};
  int nroles = 0;
};

struct TimeReading {
  Clock clock = Clock::kNone;
  int hour = 0;
};

int ExpandYear(int value, int len, int pivot) {
  if (len == 4) return value;
  return value < pivot ? 2000 + value : 1900 + value;
}

SlotRole YearRole(int len) {
  return len == 4 ? SlotRole::kYear4 : SlotRole::kYear2;
}

// Appends a reading when it names a valid calendar day.
void Offer(std::vector<DateReading>& out, DateReading r) {
  const bool ok = r.has_year ? IsValidDate(r.year, r.month, r.day)
                             : IsValidDate(2000, r.month, r.day);
  if (ok) out.push_back(r);
}

std::vector<DateReading> DateReadings(const Skeleton& sk, int pivot) {
  using enum SlotRole;
  std::vector<DateReading> out;
  const auto& s = sk.slot;
  switch (sk.form) {
    case DateForm::kNone:
      break;
    case DateForm::kIso:
      Offer(out, {DateOrder::kYMD, s[0], s[1], s[2], true,
                  {kYear4, kMonth, kDay}, 3});
      break;
    case DateForm::kYearFirst:
      Offer(out, {DateOrder::kYMD, s[0], s[1], s[2], true,
                  {kYear4, kMonth, kDay}, 3});
      Offer(out, {DateOrder::kYDM, s[0], s[2], s[1], true,
                  {kYear4, kDay, kMonth}, 3});
      break;
    case DateForm::kNumeric3: {
      const int y = ExpandYear(s[2], sk.slot_len[2], pivot);
      const SlotRole yr = YearRole(sk.slot_len[2]);
      Offer(out, {DateOrder::kDMY, y, s[1], s[0], true, {kDay, kMonth, yr}, 3});
      Offer(out, {DateOrder::kMDY, y, s[0], s[1], true, {kMonth, kDay, yr}, 3});
      break;
    }
    case DateForm::kNumeric2:
      Offer(out, {DateOrder::kDM, 0, s[1], s[0], false, {kDay, kMonth}, 2});
      Offer(out, {DateOrder::kMD, 0, s[0], s[1], false, {kMonth, kDay}, 2});
      break;
    case DateForm::kMonthFirst:
    case DateForm::kDayFirst: {
      const bool day_first = sk.form == DateForm::kDayFirst;
      DateReading r;
      r.month = sk.month_name;
      r.day = s[0];
      r.roles[0] = kDay;
      r.nroles = 1;
      if (sk.nslots == 2) {
        r.has_year = true;
        r.year = ExpandYear(s[1], sk.slot_len[1], pivot);
        r.roles[1] = YearRole(sk.slot_len[1]);
        r.nroles = 2;
        r.order = day_first ? DateOrder::kDMY : DateOrder::kMDY;
      } else {
        r.order = day_first ? DateOrder::kDM : DateOrder::kMD;
      }
      Offer(out, r);
      break;
    }
  }
  return out;
}

std::vector<TimeReading> TimeReadings(const Skeleton& sk) {
  std::vector<TimeReading> out;
  if (sk.minute > 59 || sk.second > 59) return out;
  const int h = sk.hour;
  if (sk.designator != Designator::kNone) {
    if (h >= 1 && h <= 12) {
      out.push_back({Clock::kH12Designated,
                     h % 12 + (sk.designator == Designator::kPm ? 12 : 0)});
    }
    return out;
  }
  if (h <= 23) out.push_back({Clock::kH24, h});
  // ISO 8601 times are 24-hour by definition.
  if (sk.form != DateForm::kIso && h >= 1 && h <= 12) {
    out.push_back({Clock::kH12, h % 12});
  }
  return out;
}

bool IsNumericForm(DateForm f) {
  return f == DateForm::kIso || f == DateForm::kYearFirst ||
         f == DateForm::kNumeric3 || f == DateForm::kNumeric2;
}

SlotRole HourRole(Clock c) {
  return c == Clock::kH24 ? SlotRole::kHour24 : SlotRole::kHour12;
}

int RoleValue(const FormatHypothesis& h, SlotRole r) {
  switch (r) {
    case SlotRole::kDay:
      return h.value.day;
    case SlotRole::kMonth:
      return h.value.month;
    case SlotRole::kYear2:
      return h.value.year % 100;
    case SlotRole::kYear4:
      return h.value.year;
    case SlotRole::kHour12: {
      const int v = h.value.hour % 12;
      return v == 0 ? 12 : v;
    }
    case SlotRole::kHour24:
      return h.value.hour;
    case SlotRole::kMinute:
      return h.value.minute;
    case SlotRole::kSecond:
      return h.value.second;
  }
  return 0;
}

bool StartsWith(std::string_view s, size_t i, std::string_view p) {
  return s.substr(i, p.size()) == p;
}

void AppendPadded(std::string& out, int v, int width) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%0*d", width, v);
  out += buf;
}

bool Admits(uint8_t mask, bool observed, uint8_t bit) {
  return !observed || mask == 0 || (mask & bit) != 0;
}

}  // namespace

std::string_view RoleName(SlotRole r) {
  switch (r) {
    case SlotRole::kDay:
      return "day";
    case SlotRole::kMonth:
      return "month";
    case SlotRole::kYear2:
      return "year2";
    case SlotRole::kYear4:
      return "year4";
    case SlotRole::kHour12:
      return "hour12";
    case SlotRole::kHour24:
      return "hour24";
    case SlotRole::kMinute:
      return "minute";
    case SlotRole::kSecond:
      return "second";
  }
  return "?";
}

std::string_view OrderName(DateOrder o) {
  switch (o) {
    case DateOrder::kNone:
      return "none";
    case DateOrder::kDMY:
      return "DMY";
    case DateOrder::kMDY:
      return "MDY";
    case DateOrder::kYMD:
      return "YMD";
    case DateOrder::kYDM:
      return "YDM";
    case DateOrder::kDM:
      return "DM";
    case DateOrder::kMD:
      return "MD";
  }
  return "?";
}

std::string_view ClockName(Clock c) {
  switch (c) {
    case Clock::kNone:
      return "none";
    case Clock::kH24:
      return "24h";
    case Clock::kH12:
      return "12h";
    case Clock::kH12Designated:
      return "12h+ampm";
  }
  return "?";
}

int DaysInMonth(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2) {
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return kDays[month - 1];
}

bool IsValidDate(int year, int month, int day) {
  return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1 &&
         day <= DaysInMonth(year, month);
}

int64_t DaysFromCivil(int year, int month, int day) {
  int64_t y = year - (month <= 2 ? 1 : 0);
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const int64_t yoe = y - era * 400;
  const int64_t doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  const int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

int64_t ToEpochSeconds(const CivilDateTime& v) {
  const int64_t days =
      v.has_date ? DaysFromCivil(v.has_year ? v.year : 2000, v.month, v.day)
                 : 0;
  return days * 86400 + v.hour * 3600 + v.minute * 60 + v.second -
         (v.has_zone ? v.zone_minutes * 60 : 0);
}

std::vector<FormatHypothesis> Hypothesize(std::string_view raw,
                                          const Options& options) {
  std::vector<FormatHypothesis> out;
  const std::optional<Skeleton> sk = ParseSkeleton(raw);
  if (!sk) return out;
  const bool has_date = sk->form != DateForm::kNone;
  std::vector<DateReading> dates;
  if (has_date) {
    dates = DateReadings(*sk, options.year_pivot);
    if (dates.empty()) return out;
  } else {
    dates.push_back({});
  }
  std::vector<TimeReading> times;
  if (sk->has_time) {
    times = TimeReadings(*sk);
    if (times.empty()) return out;
  } else {
    times.push_back({});
  }
  for (const DateReading& d : dates) {
    for (const TimeReading& t : times) {
      FormatHypothesis h;
      h.signature = sk->signature;
      h.order = d.order;
      h.clock = t.clock;
      h.designator = sk->designator;
      h.roles.assign(d.roles.begin(), d.roles.begin() + d.nroles);
      CivilDateTime& v = h.value;
      v.has_date = has_date;
      v.has_year = d.has_year;
      v.year = d.year;
      v.month = d.month;
      v.day = d.day;
      if (sk->has_time) {
        v.has_time = true;
        v.hour = t.hour;
        v.minute = sk->minute;
        v.second = sk->second;
        v.nanos = sk->nanos;
        h.roles.push_back(HourRole(t.clock));
        h.roles.push_back(SlotRole::kMinute);
        if (sk->has_second) h.roles.push_back(SlotRole::kSecond);
      }
      v.has_zone = sk->has_zone;
      v.zone_minutes = sk->zone_minutes;
      out.push_back(std::move(h));
    }
  }
  return out;
}

std::optional<TokenSummary> Summarize(std::string_view raw,
                                      const Options& options) {
  std::optional<Skeleton> sk = ParseSkeleton(raw);
  if (!sk) return std::nullopt;
  TokenSummary s;
  s.has_date = sk->form != DateForm::kNone;
  s.has_time = sk->has_time;
  if (s.has_date) {
    for (const DateReading& d : DateReadings(*sk, options.year_pivot)) {
      s.orders |= OrderBit(d.order);
      s.has_year = d.has_year;
    }
    if (s.orders == 0) return std::nullopt;
  }
  if (s.has_time) {
    for (const TimeReading& t : TimeReadings(*sk)) s.clocks |= ClockBit(t.clock);
    if (s.clocks == 0) return std::nullopt;
  }
  s.has_designator = sk->designator != Designator::kNone;
  s.numeric_date = IsNumericForm(sk->form);
  if (s.numeric_date) {
    s.first_slot = sk->slot[0];
    s.second_slot = sk->slot[1];
  }
  s.signature = std::move(sk->signature);
  return s;
}

std::string Render(const FormatHypothesis& h) {
  std::string out;
  const std::string_view sig = h.signature;
  size_t ri = 0;
  auto next_role = [&]() -> SlotRole {
    return ri < h.roles.size() ? h.roles[ri++] : SlotRole::kDay;
  };
  size_t i = 0;
  while (i < sig.size()) {
    if (StartsWith(sig, i, "YYYY")) {
      AppendPadded(out, RoleValue(h, next_role()), 4);
      i += 4;
    } else if (sig[i] == 'D' && i + 1 < sig.size() && text::IsDigit(sig[i + 1])) {
      const SlotRole r = next_role();
      AppendPadded(out, RoleValue(h, r),
                   r == SlotRole::kYear2 ? 2 : (r == SlotRole::kYear4 ? 4 : 1));
      i += 2;
    } else if (StartsWith(sig, i, "MONTH")) {
      out += kMonthTitle[h.value.month - 1];
      i += 5;
    } else if (StartsWith(sig, i, "MON")) {
      out += kMonthTitle[h.value.month - 1].substr(0, 3);
      i += 3;
    } else if (StartsWith(sig, i, "A.P.")) {
      out += h.designator == Designator::kPm ? "p.m." : "a.m.";
      i += 4;
    } else if (StartsWith(sig, i, "AP")) {
      out += h.designator == Designator::kPm ? "PM" : "AM";
      i += 2;
    } else if (StartsWith(sig, i, "+hh:mm") || StartsWith(sig, i, "+hhmm")) {
      const bool colon = StartsWith(sig, i, "+hh:mm");
      const int z = h.value.zone_minutes;
      const int a = z < 0 ? -z : z;
      out += z < 0 ? '-' : '+';
      AppendPadded(out, a / 60, 2);
      if (colon) out += ':';
      AppendPadded(out, a % 60, 2);
      i += colon ? 6 : 5;
    } else if (sig[i] == 'h') {
      AppendPadded(out, RoleValue(h, next_role()), 1);
      ++i;
    } else if (sig[i] == 'm' || sig[i] == 's') {
      AppendPadded(out, RoleValue(h, next_role()), 2);
      ++i;
    } else if (sig[i] == 'f' && i + 1 < sig.size()) {
      const int digits = sig[i + 1] - '0';
      int v = h.value.nanos;
      for (int p = digits; p < 9; ++p) v /= 10;
      AppendPadded(out, v, digits);
      i += 2;
    } else {
      out += sig[i];
      ++i;
    }
  }
  return out;
}

std::vector<std::pair<DateOrder, Clock>> ColumnDateTimeProfile::SurvivingRoles()
    const {
  std::vector<DateOrder> orders;
  std::vector<Clock> clocks;
  if (orders_observed) {
    for (int o = 1; o <= static_cast<int>(DateOrder::kMD); ++o) {
      if (surviving_orders & OrderBit(static_cast<DateOrder>(o))) {
        orders.push_back(static_cast<DateOrder>(o));
      }
    }
  } else {
    orders.push_back(DateOrder::kNone);
  }
  if (clocks_observed) {
    for (int c = 1; c <= static_cast<int>(Clock::kH12Designated); ++c) {
      if (surviving_clocks & ClockBit(static_cast<Clock>(c))) {
        clocks.push_back(static_cast<Clock>(c));
      }
    }
  } else {
    clocks.push_back(Clock::kNone);
  }
  std::vector<std::pair<DateOrder, Clock>> out;
  for (DateOrder o : orders) {
    for (Clock c : clocks) out.emplace_back(o, c);
  }
  return out;
}

int ColumnDateTimeProfile::MajoritySignature() const {
  int best = -1;
  for (size_t i = 0; i < signatures.size(); ++i) {
    if (best < 0 || signature_counts[i] > signature_counts[best] ||
        (signature_counts[i] == signature_counts[best] &&
         signatures[i] < signatures[best])) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

void ProfileBuilder::AddSkipped() {
  profile_.rows.push_back({});
  ++profile_.skipped;
}

void ProfileBuilder::AddRaw(std::string_view raw) {
  const std::optional<TokenSummary> s = Summarize(text::Trim(raw), options_);
  if (!s) {
    AddSkipped();
    return;
  }
  AddSummary(*s);
}

void ProfileBuilder::AddHypotheses(
    std::span<const FormatHypothesis> hypotheses) {
  if (hypotheses.empty()) {
    AddSkipped();
    return;
  }
  TokenSummary s;
  const FormatHypothesis& first = hypotheses.front();
  s.signature = first.signature;
  s.has_date = first.value.has_date;
  s.has_time = first.value.has_time;
  s.has_year = first.value.has_year;
  for (const FormatHypothesis& h : hypotheses) {
    if (h.value.has_date) s.orders |= OrderBit(h.order);
    if (h.value.has_time) s.clocks |= ClockBit(h.clock);
    if (h.designator != Designator::kNone) s.has_designator = true;
  }
  s.numeric_date = s.has_date && !first.signature.empty() &&
                   (first.signature[0] == 'D' || first.signature[0] == 'Y') &&
                   first.roles.size() >= 2;
  if (s.numeric_date) {
    s.first_slot = RoleValue(first, first.roles[0]);
    s.second_slot = RoleValue(first, first.roles[1]);
  }
  AddSummary(s);
}

void ProfileBuilder::AddSummary(const TokenSummary& s) {
  ColumnDateTimeProfile& p = profile_;
  auto [it, inserted] =
      index_.try_emplace(s.signature, static_cast<int32_t>(p.signatures.size()));
  if (inserted) {
    p.signatures.push_back(s.signature);
    p.signature_counts.push_back(0);
  }
  ++p.signature_counts[it->second];
  RowDateTime row;
  row.signature = it->second;
  row.orders = s.orders;
  row.clocks = s.clocks;
  row.has_date = s.has_date;
  row.has_time = s.has_time;
  row.has_year = s.has_year;
  p.rows.push_back(row);
  ++p.parseable;
  if (s.has_date) {
    p.any_dated = true;
    if (s.has_year) p.year_present = true;
    p.surviving_orders =
        p.orders_observed ? (p.surviving_orders & s.orders) : s.orders;
    p.orders_observed = true;
  }
  if (s.has_time) {
    p.surviving_clocks =
        p.clocks_observed ? (p.surviving_clocks & s.clocks) : s.clocks;
    p.clocks_observed = true;
  }
  if (s.has_designator) p.designator_present = true;
  if (s.numeric_date) {
    p.max_first_slot = std::max(p.max_first_slot, s.first_slot);
    p.max_second_slot = std::max(p.max_second_slot, s.second_slot);
  }
}

ColumnDateTimeProfile ProfileBuilder::Finish() && {
  return std::move(profile_);
}

ColumnDateTimeProfile ProfileColumn(
    std::span<const std::vector<FormatHypothesis>> hypotheses) {
  ProfileBuilder builder;
  for (const auto& set : hypotheses) builder.AddHypotheses(set);
  return std::move(builder).Finish();
}

std::vector<FormatHypothesis> SurvivingHypotheses(
    std::string_view raw, const ColumnDateTimeProfile& profile,
    const Options& options) {
  std::vector<FormatHypothesis> all = Hypothesize(text::Trim(raw), options);
  std::vector<FormatHypothesis> out;
  for (FormatHypothesis& h : all) {
    const bool order_ok =
        !h.value.has_date || Admits(profile.surviving_orders,
                                    profile.orders_observed, OrderBit(h.order));
    const bool clock_ok =
        !h.value.has_time || Admits(profile.surviving_clocks,
                                    profile.clocks_observed, ClockBit(h.clock));
    if (order_ok && clock_ok) out.push_back(std::move(h));
  }
  return out;
}

std::optional<CivilDateTime> ResolveValue(std::string_view raw,
                                          const ColumnDateTimeProfile& profile,
                                          const Options& options) {
  const std::vector<FormatHypothesis> hs =
      SurvivingHypotheses(raw, profile, options);
  if (hs.empty()) return std::nullopt;
  for (const FormatHypothesis& h : hs) {
    if (!(h.value == hs.front().value)) return std::nullopt;
  }
  return hs.front().value;
}

}  // namespace datasmell::datetime
