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

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

namespace datasmell::datetime {
namespace {

bool HasOrder(const std::vector<FormatHypothesis>& hs, DateOrder o) {
  for (const FormatHypothesis& h : hs) {
    if (h.order == o) return true;
  }
  return false;
}

bool HasClock(const std::vector<FormatHypothesis>& hs, Clock c) {
  for (const FormatHypothesis& h : hs) {
    if (h.clock == c) return true;
  }
  return false;
}

ColumnDateTimeProfile Profile(const std::vector<std::string>& values) {
  ProfileBuilder b;
  for (const std::string& v : values) b.AddRaw(v);
  return std::move(b).Finish();
}

TEST_CASE("calendar helpers") {
  CHECK(DaysInMonth(2020, 2) == 29);
  CHECK(DaysInMonth(1900, 2) == 28);
  CHECK(DaysInMonth(2000, 2) == 29);
  CHECK(IsValidDate(2021, 12, 31));
  CHECK_FALSE(IsValidDate(2021, 2, 29));
  CHECK(DaysFromCivil(1970, 1, 1) == 0);
  CHECK(DaysFromCivil(2000, 3, 1) == 11017);
  CHECK(DaysFromCivil(1969, 12, 31) == -1);
}

TEST_CASE("ISO values read year-month-day only") {
  const auto hs = Hypothesize("2021-03-04 10:11:12");
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].order == DateOrder::kYMD);
  CHECK(hs[0].clock == Clock::kH24);
  CHECK(hs[0].value.month == 3);
  CHECK(hs[0].value.day == 4);
  CHECK(hs[0].value.second == 12);
}

TEST_CASE("slash dates carry both day-first and month-first readings") {
  const auto hs = Hypothesize("03/04/2021");
  CHECK(hs.size() == 2);
  CHECK(HasOrder(hs, DateOrder::kDMY));
  CHECK(HasOrder(hs, DateOrder::kMDY));
  const auto pinned = Hypothesize("14/04/2021");
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0].order == DateOrder::kDMY);
}

TEST_CASE("clock readings") {
  const auto bare = Hypothesize("08:00");
  CHECK(HasClock(bare, Clock::kH24));
  CHECK(HasClock(bare, Clock::kH12));
  const auto late = Hypothesize("19:30");
  REQUIRE(late.size() == 1);
  CHECK(late[0].clock == Clock::kH24);
  const auto pm = Hypothesize("8:00 pm");
  REQUIRE(pm.size() == 1);
  CHECK(pm[0].clock == Clock::kH12Designated);
  CHECK(pm[0].value.hour == 20);
  const auto twelve_am = Hypothesize("12:15 AM");
  REQUIRE(twelve_am.size() == 1);
  CHECK(twelve_am[0].value.hour == 0);
}

TEST_CASE("invalid or non-temporal values yield nothing") {
  for (const char* s : {"2021-02-30", "13:00 PM", "hello", "1.5", "", "25:00",
                        "12/13/14/15", "2021-13-01"}) {
    CAPTURE(s);
    CHECK(Hypothesize(s).empty());
    CHECK_FALSE(Summarize(s).has_value());
  }
}

TEST_CASE("month names and year-free dates") {
  const auto hs = Hypothesize("Mar 5, 2021");
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].value.month == 3);
  CHECK(hs[0].value.year == 2021);
  const auto no_year = Hypothesize("5 Mar");
  REQUIRE(no_year.size() == 1);
  CHECK_FALSE(no_year[0].value.has_year);
  const auto two = Hypothesize("5-Mar-21");
  REQUIRE(two.size() == 1);
  CHECK(two[0].value.year == 2021);
  CHECK(Hypothesize("5-Mar-70")[0].value.year == 1970);
}

TEST_CASE("zones are ISO only") {
  const auto hs = Hypothesize("2021-03-04T10:11:12+02:00");
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].value.has_zone);
  CHECK(hs[0].value.zone_minutes == 120);
  CHECK(ToEpochSeconds(hs[0].value) ==
        DaysFromCivil(2021, 3, 4) * 86400 + 8 * 3600 + 11 * 60 + 12);
}

TEST_CASE("column elimination pins the day slot") {
  const ColumnDateTimeProfile p = Profile({"03/04/05", "14/04/05"});
  CHECK(p.surviving_orders == OrderBit(DateOrder::kDMY));
  const auto v = ResolveValue("03/04/05", p);
  REQUIRE(v.has_value());
  CHECK(v->day == 3);
  CHECK(v->month == 4);
  CHECK(v->year == 2005);
  CHECK(SurvivingHypotheses("03/04/05", p).size() == 1);
}

TEST_CASE("undisambiguated columns keep every reading") {
  const ColumnDateTimeProfile p = Profile({"03/04/05", "05/06/07"});
  CHECK(p.surviving_orders ==
        (OrderBit(DateOrder::kDMY) | OrderBit(DateOrder::kMDY)));
  CHECK_FALSE(ResolveValue("03/04/05", p).has_value());
}

TEST_CASE("a conflicting column filters nothing") {
  const ColumnDateTimeProfile p = Profile({"13/04/2020", "04/13/2020"});
  CHECK(p.surviving_orders == 0);
  CHECK(SurvivingHypotheses("13/04/2020", p).size() == 1);
}

TEST_CASE("one afternoon hour rules out the 12-hour clock") {
  CHECK((Profile({"08:00", "09:30"}).surviving_clocks &
         ClockBit(Clock::kH12)) != 0);
  CHECK(Profile({"08:00", "19:30"}).surviving_clocks == ClockBit(Clock::kH24));
}

TEST_CASE("signatures group values of one layout") {
  const ColumnDateTimeProfile p =
      Profile({"2021-01-01", "2021-01-02", "01/02/2021"});
  CHECK(p.signatures.size() == 2);
  CHECK(p.parseable == 3);
  CHECK(p.signatures[static_cast<size_t>(p.MajoritySignature())] ==
        Hypothesize("2021-01-01")[0].signature);
}

TEST_CASE("rendered values parse back to the same instant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> year(1971, 2060);
  std::uniform_int_distribution<int> month(1, 12);
  std::uniform_int_distribution<int> hour(0, 23);
  std::uniform_int_distribution<int> minute(0, 59);
  for (int i = 0; i < 300; ++i) {
    const int y = year(rng);
    const int m = month(rng);
    const int d = std::uniform_int_distribution<int>(1, DaysInMonth(y, m))(rng);
    const int h = hour(rng);
    const int mi = minute(rng);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d", y, m, d, h, mi);
    const auto hs = Hypothesize(buf);
    REQUIRE(hs.size() == 1);
    const CivilDateTime& v = hs[0].value;
    CHECK(v.year == y);
    CHECK(v.month == m);
    CHECK(v.day == d);
    CHECK(v.hour == h);
    CHECK(v.minute == mi);
    const auto again = Hypothesize(Render(hs[0]));
    REQUIRE(again.size() == 1);
    CHECK(again[0].value == v);
  }
}

}  // namespace
}  // namespace datasmell::datetime
