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

// Format-hypothesis engine for date/time tokens.
//
// A token is first matched against a small grammar of skeletons (ISO 8601,
// numeric D/M/Y families, month-name forms, clock times). Each skeleton is
// then expanded into every role assignment that yields a valid calendar
// value: "03/04/05" reads as 3 April or 4 March, "08:00" as a 24-hour or an
// AM/PM-less 12-hour time. Column profiling intersects the readings of all
// rows, so one unambiguous row ("14/04/05", "19:30") settles the column.
//
// Signatures name the skeleton without committing to roles. Pieces:
//   D<k>      numeric date slot with 1-2 digits (k = slot position)
//   YYYY      4-digit numeric date slot
//   MON/MONTH English month name, abbreviated or full
//   h m s     clock hour, minute, second; f<n> an n-digit fraction
//   AP, A.P.  AM/PM designator (plain or dotted)
//   Z, +hh:mm, +hhmm  ISO zone designators
// Everything else is a literal separator.

#ifndef DATASMELL_DATETIME_H_
#define DATASMELL_DATETIME_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace datasmell::datetime {

enum class SlotRole : uint8_t {
  kDay,
  kMonth,
  kYear2,
  kYear4,
  kHour12,
  kHour24,
  kMinute,
  kSecond,
};

enum class Designator : uint8_t { kNone, kAm, kPm };

// Textual order of day/month/year. Month names count as the month slot.
enum class DateOrder : uint8_t { kNone, kDMY, kMDY, kYMD, kYDM, kDM, kMD };

enum class Clock : uint8_t { kNone, kH24, kH12, kH12Designated };

std::string_view RoleName(SlotRole r);
std::string_view OrderName(DateOrder o);
std::string_view ClockName(Clock c);

inline uint8_t OrderBit(DateOrder o) {
  return static_cast<uint8_t>(1u << static_cast<unsigned>(o));
}
inline uint8_t ClockBit(Clock c) {
  return static_cast<uint8_t>(1u << static_cast<unsigned>(c));
}

struct CivilDateTime {
  int year = 0;  // 0 when the token carries no year
  int month = 0;
  int day = 0;
  int hour = 0;
  int minute = 0;
  int second = 0;
  int nanos = 0;
  int zone_minutes = 0;
  bool has_date = false;
  bool has_year = false;
  bool has_time = false;
  bool has_zone = false;

  bool IsMidnight() const {
    return has_time && hour == 0 && minute == 0 && second == 0 && nanos == 0;
  }
  bool operator==(const CivilDateTime&) const = default;
};

struct FormatHypothesis {
  std::string signature;
  std::vector<SlotRole> roles;  // one per numeric slot, in textual order
  Designator designator = Designator::kNone;
  DateOrder order = DateOrder::kNone;
  Clock clock = Clock::kNone;
  CivilDateTime value;
  bool operator==(const FormatHypothesis&) const = default;
};

struct Options {
  // Two-digit years below the pivot land in 20xx, the rest in 19xx.
  int year_pivot = 69;
};

// All readings of `raw`, ordered by (order, clock). Empty when the token
// matches no supported skeleton.
std::vector<FormatHypothesis> Hypothesize(std::string_view raw,
                                          const Options& options = {});

// Cheap structural summary of a token; nullopt when nothing parses.
struct TokenSummary {
  std::string signature;
  uint8_t orders = 0;  // OrderBit mask over readings with a date part
  uint8_t clocks = 0;  // ClockBit mask over readings with a time part
  bool has_date = false;
  bool has_time = false;
  bool has_year = false;
  bool has_designator = false;
  bool numeric_date = false;
  int first_slot = 0;
  int second_slot = 0;
};
std::optional<TokenSummary> Summarize(std::string_view raw,
                                      const Options& options = {});

// Rebuilds the token text from a hypothesis. Numeric date slots and the
// hour are written without zero padding.
std::string Render(const FormatHypothesis& h);

bool IsValidDate(int year, int month, int day);
int DaysInMonth(int year, int month);
// Days since 1970-01-01 in the proleptic Gregorian calendar.
int64_t DaysFromCivil(int year, int month, int day);
// Seconds since the epoch, ignoring zones.
int64_t ToEpochSeconds(const CivilDateTime& v);

struct RowDateTime {
  int32_t signature = -1;  // index into ColumnDateTimeProfile::signatures
  uint8_t orders = 0;
  uint8_t clocks = 0;
  bool has_date = false;
  bool has_time = false;
  bool has_year = false;
};

struct ColumnDateTimeProfile {
  std::vector<RowDateTime> rows;  // one per input row
  std::vector<std::string> signatures;
  std::vector<size_t> signature_counts;
  // Readings that every parseable row admits. A dimension that no row
  // exercises stays unobserved; an observed dimension may end up empty when
  // rows contradict each other.
  uint8_t surviving_orders = 0;
  uint8_t surviving_clocks = 0;
  bool orders_observed = false;
  bool clocks_observed = false;
  bool year_present = false;
  bool designator_present = false;
  bool any_dated = false;
  int max_first_slot = 0;
  int max_second_slot = 0;
  size_t parseable = 0;
  size_t skipped = 0;

  std::vector<std::pair<DateOrder, Clock>> SurvivingRoles() const;
  // Index of the signature with most rows; ties go to the smaller string.
  int MajoritySignature() const;
};

// Incremental profile construction over the rows of one column.
class ProfileBuilder {
 public:
  explicit ProfileBuilder(Options options = {}) : options_(options) {}

  void AddRaw(std::string_view raw);
  // Adds a row that is not a date/time candidate (missing or non-temporal).
  void AddSkipped();
  void AddHypotheses(std::span<const FormatHypothesis> hypotheses);
  ColumnDateTimeProfile Finish() &&;

 private:
  void AddSummary(const TokenSummary& s);

  Options options_;
  ColumnDateTimeProfile profile_;
  std::map<std::string, int32_t, std::less<>> index_;
};

// Profile over precomputed hypothesis sets; empty sets count as skipped.
ColumnDateTimeProfile ProfileColumn(
    std::span<const std::vector<FormatHypothesis>> hypotheses);

// The value of `raw` under the column's surviving roles; nullopt when the
// surviving readings disagree or none exists.
std::optional<CivilDateTime> ResolveValue(std::string_view raw,
                                          const ColumnDateTimeProfile& profile,
                                          const Options& options = {});

// Readings of `raw` that survive column elimination.
std::vector<FormatHypothesis> SurvivingHypotheses(
    std::string_view raw, const ColumnDateTimeProfile& profile,
    const Options& options = {});

}  // namespace datasmell::datetime

#endif  // DATASMELL_DATETIME_H_
