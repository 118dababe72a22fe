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

#include "datasmell/detect_instance.h"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <optional>

#include "datasmell/text.h"

namespace datasmell {
namespace {

using datetime::Clock;
using datetime::ClockBit;
using datetime::ColumnDateTimeProfile;
using datetime::DateOrder;
using datetime::OrderBit;

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

bool IsRepeatedChar(std::string_view v, size_t min_repeat) {
  const std::u32string cps = text::Decode(v);
  if (cps.size() < min_repeat) return false;
  return std::all_of(cps.begin(), cps.end(),
                     [&](char32_t c) { return c == cps[0]; });
}

bool IsAscendingRun(std::string_view v, size_t min_run) {
  if (v.size() < min_run) return false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!text::IsDigit(v[i])) return false;
    if (i > 0 && v[i] != v[i - 1] + 1) return false;
  }
  return true;
}

size_t ParamSize(const StrengthConfig& cfg, std::string_view id,
                 std::string_view name) {
  const double v = cfg.Param(id, name);
  return v <= 0 ? 0 : static_cast<size_t>(std::ceil(v));
}

std::vector<Finding> DetectNumberText(const ColumnData& col,
                                      const StrengthConfig& cfg,
                                      std::string_view id, bool integer) {
  const double theta = cfg.Param(id, "text_dominance");
  const bool text_context = col.dominant() == BaseType::kText &&
                            col.dominant_fraction() >= theta;
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  size_t quoted = 0;
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.missing(r)) continue;
    const std::string_view t = text::Trim(col.raw(r));
    if (integer ? !IsIntegerToken(t) : !IsFloatToken(t)) continue;
    if (col.quoted(r)) {
      ++quoted;
      b.Flag(r);
    } else if (text_context) {
      b.Flag(r);
    }
  }
  std::string what = integer ? "integer" : "floating-point";
  std::vector<std::string> parts;
  if (quoted > 0) {
    parts.push_back(std::to_string(quoted) + " quoted " + what + " value(s)");
  }
  if (b.count() > quoted) {
    parts.push_back(std::to_string(b.count() - quoted) + " " + what +
                    " value(s) in a text column (text share " +
                    Fixed(col.dominant_fraction()) + ")");
  }
  return std::move(b).Build(Join(parts));
}

int Family(BaseType t) {
  if (IsNumeric(t)) return 1;
  if (IsTemporal(t)) return 2;
  return t == BaseType::kText ? 3 : 0;
}

std::string_view FamilyName(int f) {
  switch (f) {
    case 1:
      return "numeric";
    case 2:
      return "date/time";
    default:
      return "text";
  }
}

bool Precondition(const ColumnData& col, std::initializer_list<BaseType> ok) {
  return col.non_missing_count() > 0 &&
         std::find(ok.begin(), ok.end(), col.dominant()) != ok.end();
}

int64_t DaysOf(const datetime::CivilDateTime& v) {
  return datetime::DaysFromCivil(v.year, v.month, v.day);
}

// Inverse of DaysFromCivil.
void CivilFromDays(int64_t z, int* y, int* m, int* d) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const int64_t doe = z - era * 146097;
  const int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const int64_t mp = (5 * doy + 2) / 153;
  *d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  *m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  *y = static_cast<int>(yoe + era * 400 + (*m <= 2 ? 1 : 0));
}

double Median(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) /
         2.0;
}

std::string OrderList(uint8_t mask) {
  std::string out;
  for (int o = 1; o <= static_cast<int>(DateOrder::kMD); ++o) {
    if (mask & OrderBit(static_cast<DateOrder>(o))) {
      if (!out.empty()) out += '|';
      out += datetime::OrderName(static_cast<DateOrder>(o));
    }
  }
  return out;
}

}  // namespace

FindingBuilder::FindingBuilder(std::string_view smell_id,
                               const ColumnData& col, Granularity granularity,
                               const StrengthConfig& cfg)
    : col_(col), cap_(cfg.sample_cap) {
  finding_.smell_id = std::string(smell_id);
  finding_.column_index = col.index();
  finding_.granularity = granularity;
  finding_.params_used = cfg.Params(smell_id);
}

void FindingBuilder::Flag(size_t row) {
  ++finding_.flagged_count;
  if (finding_.samples.size() < cap_) {
    finding_.samples.push_back({row, std::string(col_.raw(row))});
  }
}

std::vector<Finding> FindingBuilder::Build(std::string evidence) && {
  if (finding_.flagged_count == 0) return {};
  finding_.evidence = std::move(evidence);
  std::vector<Finding> out;
  out.push_back(std::move(finding_));
  return out;
}

datetime::ColumnDateTimeProfile ProfileDateTimes(const ColumnData& col) {
  datetime::ProfileBuilder builder;
  for (size_t r = 0; r < col.size(); ++r) {
    if (IsTemporal(col.tag(r))) {
      builder.AddRaw(col.raw(r));
    } else {
      builder.AddSkipped();
    }
  }
  return std::move(builder).Finish();
}

int64_t TodayDays() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm local{};
  localtime_r(&now, &local);
  return datetime::DaysFromCivil(local.tm_year + 1900, local.tm_mon + 1,
                                 local.tm_mday);
}

double TemporalFraction(const ColumnData& col,
                        const ColumnDateTimeProfile& profile) {
  if (col.non_missing_count() == 0) return 0.0;
  return static_cast<double>(profile.parseable) /
         static_cast<double>(col.non_missing_count());
}

std::vector<Finding> DetectDummyValue(const ColumnData& col,
                                      const StrengthConfig& cfg,
                                      const Resources& res) {
  const std::string_view id = smell::kDummyValue;
  const size_t repeat_min = ParamSize(cfg, id, "repeat_min");
  const size_t run_min = ParamSize(cfg, id, "ascending_run_min");
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  std::array<size_t, 3> by_rule{};
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.missing(r)) continue;
    const std::string_view t = text::Trim(col.raw(r));
    int rule = -1;
    if (res.dummy_lexicon.contains(text::FoldCase(t))) {
      rule = 0;
    } else if (IsRepeatedChar(t, repeat_min)) {
      rule = 1;
    } else if (IsAscendingRun(t, run_min)) {
      rule = 2;
    }
    if (rule < 0) continue;
    ++by_rule[rule];
    b.Flag(r);
  }
  std::vector<std::string> parts;
  if (by_rule[0]) {
    parts.push_back(std::to_string(by_rule[0]) + " placeholder lexicon hit(s)");
  }
  if (by_rule[1]) {
    parts.push_back(std::to_string(by_rule[1]) + " repeated-character value(s)");
  }
  if (by_rule[2]) {
    parts.push_back(std::to_string(by_rule[2]) + " ascending digit run(s)");
  }
  return std::move(b).Build(Join(parts));
}

std::vector<Finding> DetectIntegerAsString(const ColumnData& col,
                                           const StrengthConfig& cfg) {
  return DetectNumberText(col, cfg, smell::kIntegerAsString, true);
}

std::vector<Finding> DetectFloatAsString(const ColumnData& col,
                                         const StrengthConfig& cfg) {
  return DetectNumberText(col, cfg, smell::kFloatAsString, false);
}

std::vector<Finding> DetectIntegerAsFloat(const ColumnData& col,
                                          const StrengthConfig& cfg) {
  const std::string_view id = smell::kIntegerAsFloat;
  if (!Precondition(col, {BaseType::kInteger, BaseType::kFloat})) return {};
  const double phi = cfg.Param(id, "integral_fraction");
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  size_t floats = 0;
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.tag(r) != BaseType::kFloat) continue;
    ++floats;
    const std::optional<double> v = ParseNumber(col.raw(r));
    if (v && std::isfinite(*v) && std::trunc(*v) == *v) b.Flag(r);
  }
  if (floats == 0) return {};
  const double share =
      static_cast<double>(b.count()) / static_cast<double>(floats);
  std::string evidence = std::to_string(b.count()) + " of " +
                         std::to_string(floats) +
                         " floating-point values are integral";
  if (share >= phi) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "; %.2f integral fraction exceeded", phi);
    evidence += buf;
  }
  return std::move(b).Build(evidence);
}

std::vector<Finding> DetectDateAsDateTime(const ColumnData& col,
                                          const StrengthConfig& cfg,
                                          const ColumnDateTimeProfile& profile) {
  const std::string_view id = smell::kDateAsDateTime;
  if (!Precondition(col, {BaseType::kDateTime})) return {};
  const double mu = cfg.Param(id, "midnight_fraction");
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  size_t parseable = 0;
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.tag(r) != BaseType::kDateTime) continue;
    const std::vector<datetime::FormatHypothesis> hs =
        datetime::SurvivingHypotheses(col.raw(r), profile);
    if (hs.empty()) continue;
    ++parseable;
    const bool midnight =
        std::all_of(hs.begin(), hs.end(), [](const auto& h) {
          return h.value.IsMidnight();
        });
    if (midnight) b.Flag(r);
  }
  if (parseable == 0) return {};
  const double share =
      static_cast<double>(b.count()) / static_cast<double>(parseable);
  std::string evidence = "midnight time suffix on " +
                         std::to_string(b.count()) + " of " +
                         std::to_string(parseable) + " date/time values";
  if (share >= mu) {
    evidence += "; midnight fraction " + Fixed(share) + " >= " + Fixed(mu) +
                ", column holds dates";
  }
  return std::move(b).Build(evidence);
}

std::vector<Finding> DetectIntermingledType(const ColumnData& col,
                                            const StrengthConfig& cfg) {
  const std::string_view id = smell::kIntermingledType;
  if (col.non_missing_count() == 0) return {};
  const double dominance = cfg.Param(id, "family_dominance");
  std::array<size_t, 4> counts{};
  for (BaseType t : col.tags()) ++counts[Family(t)];
  int best = 1;
  for (int f = 2; f <= 3; ++f) {
    if (counts[f] > counts[best]) best = f;
  }
  if (best == 3) return {};
  const double share = static_cast<double>(counts[best]) /
                       static_cast<double>(col.non_missing_count());
  if (share < dominance) return {};
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  for (size_t r = 0; r < col.size(); ++r) {
    const int f = Family(col.tag(r));
    if (f != 0 && f != best) b.Flag(r);
  }
  return std::move(b).Build(
      std::to_string(b.count()) + " value(s) outside the dominant " +
      std::string(FamilyName(best)) + " family (share " + Fixed(share) + ")");
}

std::vector<Finding> DetectSmallNumber(const ColumnData& col,
                                       const StrengthConfig& cfg) {
  const std::string_view id = smell::kSmallNumber;
  if (!Precondition(col, {BaseType::kInteger, BaseType::kFloat})) return {};
  const double t = cfg.Param(id, "threshold");
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  for (size_t r = 0; r < col.size(); ++r) {
    if (!IsNumeric(col.tag(r))) continue;
    const std::optional<double> v = ParseNumber(col.raw(r));
    if (!v) continue;
    const double a = std::fabs(*v);
    if (a > 0 && a < t) b.Flag(r);
  }
  return std::move(b).Build(std::to_string(b.count()) +
                            " value(s) with magnitude in (0, " +
                            Fixed(t) + ")");
}

size_t LongestRun(std::string_view value) {
  size_t best = 0;
  size_t run = 0;
  for (char32_t c : text::Decode(value)) {
    const bool space = c < 0x80 ? text::IsSpace(static_cast<char>(c))
                                : (c == 0xA0 || c == 0x2007 || c == 0x202F ||
                                   (c >= 0x2000 && c <= 0x200A) ||
                                   c == 0x3000);
    run = space ? 0 : run + 1;
    best = std::max(best, run);
  }
  return best;
}

std::vector<Finding> DetectLongValue(const ColumnData& col,
                                     const StrengthConfig& cfg) {
  const std::string_view id = smell::kLongValue;
  if (!Precondition(col, {BaseType::kText})) return {};
  const size_t min_run = ParamSize(cfg, id, "min_run");
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  size_t longest = 0;
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.missing(r)) continue;
    const size_t run = LongestRun(col.raw(r));
    if (run >= min_run) {
      b.Flag(r);
      longest = std::max(longest, run);
    }
  }
  return std::move(b).Build(std::to_string(b.count()) +
                            " value(s) with an unbroken run of >= " +
                            std::to_string(min_run) +
                            " characters (longest " + std::to_string(longest) +
                            ")");
}

std::string_view CasingClassName(CasingClass c) {
  switch (c) {
    case CasingClass::kNeutral:
      return "neutral";
    case CasingClass::kLower:
      return "lower";
    case CasingClass::kUpper:
      return "UPPER";
    case CasingClass::kTitle:
      return "Title";
    case CasingClass::kMixed:
      return "mixed";
    case CasingClass::kOther:
      return "other";
  }
  return "?";
}

CasingClass ClassifyCasing(std::string_view value) {
  const std::u32string cps = text::Decode(value);
  size_t letters = 0;
  size_t upper = 0;
  bool title = true;
  bool mixed = false;
  bool word_start = true;  // no letter seen yet in the current word
  bool prev_lower = false;
  for (char32_t c : cps) {
    if (c < 0x80 && text::IsSpace(static_cast<char>(c))) {
      word_start = true;
      prev_lower = false;
      continue;
    }
    if (!text::IsLetter(c)) continue;
    ++letters;
    const bool up = text::IsUpperLetter(c);
    if (up) ++upper;
    if (word_start) {
      if (!up) title = false;
    } else {
      if (up) title = false;
      if (up && prev_lower) mixed = true;
    }
    word_start = false;
    prev_lower = !up;
  }
  if (letters == 0) return CasingClass::kNeutral;
  if (upper == 0) return CasingClass::kLower;
  if (upper == letters && letters >= 2) return CasingClass::kUpper;
  if (title) return CasingClass::kTitle;
  if (mixed) return CasingClass::kMixed;
  return CasingClass::kOther;
}

std::vector<Finding> DetectCasing(const ColumnData& col,
                                  const StrengthConfig& cfg) {
  const std::string_view id = smell::kCasing;
  if (!Precondition(col, {BaseType::kText})) return {};
  const double kappa = cfg.Param(id, "class_dominance");
  std::vector<CasingClass> classes(col.size(), CasingClass::kNeutral);
  std::array<size_t, 6> counts{};
  size_t classified = 0;
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.missing(r)) continue;
    classes[r] = ClassifyCasing(col.raw(r));
    if (classes[r] == CasingClass::kNeutral) continue;
    ++counts[static_cast<size_t>(classes[r])];
    ++classified;
  }
  if (classified == 0) return {};
  size_t best = 1;
  for (size_t k = 2; k < counts.size(); ++k) {
    if (counts[k] > counts[best]) best = k;
  }
  const double share =
      static_cast<double>(counts[best]) / static_cast<double>(classified);
  if (share < kappa) return {};
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  for (size_t r = 0; r < col.size(); ++r) {
    if (classes[r] != CasingClass::kNeutral &&
        static_cast<size_t>(classes[r]) != best) {
      b.Flag(r);
    }
  }
  return std::move(b).Build(
      std::to_string(b.count()) + " value(s) deviate from the dominant " +
      std::string(CasingClassName(static_cast<CasingClass>(best))) +
      " casing (share " + Fixed(share) + ")");
}

std::vector<Finding> DetectAmbiguousDateTime(
    const ColumnData& col, const StrengthConfig& cfg,
    const ColumnDateTimeProfile& profile) {
  const std::string_view id = smell::kAmbiguousDateTime;
  if (profile.parseable == 0) return {};
  if (TemporalFraction(col, profile) <
      cfg.Param(id, "min_temporal_fraction")) {
    return {};
  }
  const bool order_ambiguous = profile.orders_observed &&
                               std::popcount(profile.surviving_orders) > 1;
  const uint8_t both_clocks = ClockBit(Clock::kH24) | ClockBit(Clock::kH12);
  const bool clock_ambiguous =
      profile.clocks_observed &&
      (profile.surviving_clocks & both_clocks) == both_clocks;
  const bool year_absent = profile.any_dated && !profile.year_present;
  if (!order_ambiguous && !clock_ambiguous && !year_absent) return {};
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  for (size_t r = 0; r < profile.rows.size(); ++r) {
    const datetime::RowDateTime& row = profile.rows[r];
    if (row.signature < 0) continue;
    const bool flag =
        (order_ambiguous && row.has_date &&
         std::popcount<uint8_t>(row.orders & profile.surviving_orders) > 1) ||
        (clock_ambiguous && row.has_time &&
         (row.clocks & both_clocks) == both_clocks) ||
        (year_absent && row.has_date);
    if (flag) b.Flag(r);
  }
  std::vector<std::string> parts;
  if (order_ambiguous) {
    parts.push_back("day/month order undetermined (" +
                    OrderList(profile.surviving_orders) + ")");
  }
  if (clock_ambiguous) {
    parts.push_back("no AM/PM designator and no hour above 12");
  }
  if (year_absent) parts.push_back("year absent");
  return std::move(b).Build(Join(parts));
}

std::vector<Finding> DetectSuspectInterval(const ColumnData& col,
                                           const StrengthConfig& cfg,
                                           const ColumnDateTimeProfile& profile,
                                           int64_t today_days) {
  const std::string_view id = smell::kSuspectInterval;
  if (!Precondition(col, {BaseType::kDateTime, BaseType::kDateOnly})) {
    return {};
  }
  const int floor_year = static_cast<int>(cfg.Param(id, "floor_year"));
  const int slack = static_cast<int>(cfg.Param(id, "future_slack_years"));
  const double gap_factor = cfg.Param(id, "gap_factor");
  const size_t min_gap_rows = ParamSize(cfg, id, "min_gap_rows");

  int ty = 0;
  int tm = 0;
  int td = 0;
  CivilFromDays(today_days, &ty, &tm, &td);
  const int limit_year = ty + slack;
  const int64_t limit_days = datetime::DaysFromCivil(
      limit_year, tm, std::min(td, datetime::DaysInMonth(limit_year, tm)));

  std::vector<bool> flagged(col.size(), false);
  size_t sentinel = 0;
  size_t epoch = 0;
  size_t window = 0;
  size_t gap = 0;
  std::vector<std::pair<size_t, int64_t>> series;
  for (size_t r = 0; r < col.size(); ++r) {
    const BaseType tag = col.tag(r);
    if (tag != BaseType::kDateTime && tag != BaseType::kDateOnly) continue;
    const std::optional<datetime::CivilDateTime> v =
        datetime::ResolveValue(col.raw(r), profile);
    if (!v || !v->has_date || !v->has_year) continue;
    series.emplace_back(r, datetime::ToEpochSeconds(*v));
    const bool is_epoch = v->year == 1970 && v->month == 1 && v->day == 1;
    if (is_epoch || (v->year == 1900 && v->month == 1 && v->day == 1) ||
        (v->year == 9999 && v->month == 12 && v->day == 31)) {
      flagged[r] = true;
      ++sentinel;
      if (is_epoch) ++epoch;
    } else if (v->year < floor_year || DaysOf(*v) > limit_days) {
      flagged[r] = true;
      ++window;
    }
  }
  if (series.size() >= min_gap_rows && series.size() >= 3) {
    const bool monotone = std::is_sorted(
        series.begin(), series.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (monotone) {
      std::vector<int64_t> gaps;
      gaps.reserve(series.size() - 1);
      for (size_t i = 1; i < series.size(); ++i) {
        gaps.push_back(series[i].second - series[i - 1].second);
      }
      const double median = Median(gaps);
      if (median > 0) {
        for (size_t i = 0; i < gaps.size(); ++i) {
          if (static_cast<double>(gaps[i]) > gap_factor * median) {
            ++gap;
            flagged[series[i].first] = true;
            flagged[series[i + 1].first] = true;
          }
        }
      }
    }
  }
  FindingBuilder b(id, col, Granularity::kInstance, cfg);
  for (size_t r = 0; r < col.size(); ++r) {
    if (flagged[r]) b.Flag(r);
  }
  std::vector<std::string> parts;
  if (epoch) parts.push_back("epoch sentinel x" + std::to_string(epoch));
  if (sentinel > epoch) {
    parts.push_back("placeholder date x" + std::to_string(sentinel - epoch));
  }
  if (window) {
    parts.push_back("outside [" + std::to_string(floor_year) + ", " +
                    std::to_string(limit_year) + "] x" +
                    std::to_string(window));
  }
  if (gap) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "gap above %gx median interval x%zu",
                  gap_factor, gap);
    parts.push_back(buf);
  }
  return std::move(b).Build(Join(parts));
}

}  // namespace datasmell
