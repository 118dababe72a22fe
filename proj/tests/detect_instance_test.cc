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

#include <cstdio>
#include <string>
#include <vector>

#include "datasmell/ingest.h"
#include "doctest.h"

namespace datasmell {
namespace {

const StrengthConfig kDefault = ResolvePreset("default");

std::vector<std::string> Repeat(const std::string& v, size_t n) {
  return std::vector<std::string>(n, v);
}

std::vector<std::string> Concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

size_t Flagged(const std::vector<Finding>& f) {
  return f.empty() ? 0 : f.front().flagged_count;
}

TEST_CASE("dummy values") {
  const ColumnData ages =
      MakeColumn({"23", "45", "999", "31", "52", "999", "40"});
  const auto f = DetectDummyValue(ages, kDefault, Resources{});
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 2);
  CHECK(f[0].samples[0].row == 2);
  CHECK(f[0].smell_id == "B-DUMMY");
  CHECK(Flagged(DetectDummyValue(MakeColumn({"aaaa", "123456", "x"}), kDefault,
                                 Resources{})) == 2);
  CHECK(DetectDummyValue(MakeColumn({"12", "34", "56"}), kDefault, Resources{})
            .empty());
}

TEST_CASE("quoted numbers") {
  const Table t = ParseTable("n\n4\n\"5\"\n6\n");
  const auto f = DetectIntegerAsString(t.columns[0], kDefault);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 1);
  CHECK(f[0].samples[0].value == "5");
  const Table fl = ParseTable("n\n4.5\n\"5.5\"\n6.5\n");
  CHECK(Flagged(DetectFloatAsString(fl.columns[0], kDefault)) == 1);
  CHECK(DetectIntegerAsString(fl.columns[0], kDefault).empty());
}

TEST_CASE("numbers inside a text-dominant column") {
  std::vector<std::string> v = Repeat("alpha", 19);
  v.push_back("7");
  const ColumnData col = MakeColumn(v);
  CHECK(Flagged(DetectIntegerAsString(col, kDefault)) == 1);
  v = Repeat("alpha", 8);
  v.push_back("7");
  v.push_back("8");
  CHECK(DetectIntegerAsString(MakeColumn(v), kDefault).empty());
}

TEST_CASE("integral floats") {
  const ColumnData col = MakeColumn({"1.5", "2.0", "3.25", "4.0"});
  const auto f = DetectIntegerAsFloat(col, kDefault);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 2);
  CHECK(f[0].evidence.find("exceeded") == std::string::npos);
  const auto all = DetectIntegerAsFloat(MakeColumn({"1.0", "2.0"}), kDefault);
  CHECK(all[0].evidence.find("exceeded") != std::string::npos);
  CHECK(DetectIntegerAsFloat(MakeColumn({"1.5", "2.5"}), kDefault).empty());
}

TEST_CASE("midnight datetimes") {
  const ColumnData col = MakeColumn(
      {"2021-01-01 00:00:00", "2021-01-02 00:00:00", "2021-01-03 00:00:00"});
  const auto f = DetectDateAsDateTime(col, kDefault, ProfileDateTimes(col));
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 3);
  CHECK(f[0].evidence.find("midnight fraction 1.000000") != std::string::npos);
  const ColumnData mixed =
      MakeColumn({"2021-01-01 00:00:00", "2021-01-02 10:30:00"});
  CHECK(Flagged(DetectDateAsDateTime(mixed, kDefault,
                                     ProfileDateTimes(mixed))) == 1);
}

TEST_CASE("intermingled families") {
  std::vector<std::string> v = {"1", "2", "3", "4", "5", "6", "7", "8", "x"};
  v.push_back("2021-01-01");
  const auto f = DetectIntermingledType(MakeColumn(v), kDefault);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 2);
  CHECK(DetectIntermingledType(MakeColumn({"a", "b", "1"}), kDefault).empty());
  CHECK(DetectIntermingledType(MakeColumn({"1", "a", "b", "2"}), kDefault)
            .empty());
}

TEST_CASE("small numbers") {
  const ColumnData col = MakeColumn({"12", "0.02", "0", "40", "-0.5"});
  CHECK(Flagged(DetectSmallNumber(col, kDefault)) == 2);
  CHECK(Flagged(DetectSmallNumber(col, ResolvePreset("lenient"))) == 1);
}

TEST_CASE("long values") {
  CHECK(LongestRun("ab cde") == 3);
  CHECK(LongestRun("") == 0);
  const ColumnData col =
      MakeColumn({"short text", std::string(35, 'x'), "fine words"});
  CHECK(Flagged(DetectLongValue(col, kDefault)) == 1);
  CHECK(DetectLongValue(col, ResolvePreset("lenient")).empty());
}

TEST_CASE("casing classes") {
  CHECK(ClassifyCasing("berlin") == CasingClass::kLower);
  CHECK(ClassifyCasing("BERLIN") == CasingClass::kUpper);
  CHECK(ClassifyCasing("New York") == CasingClass::kTitle);
  CHECK(ClassifyCasing("iPhone") == CasingClass::kMixed);
  CHECK(ClassifyCasing("new York") == CasingClass::kOther);
  CHECK(ClassifyCasing("42") == CasingClass::kNeutral);
  CHECK(ClassifyCasing("A") == CasingClass::kTitle);
}

TEST_CASE("casing deviations") {
  const ColumnData col = MakeColumn(Concat(Repeat("us", 97), Repeat("US", 3)));
  const auto f = DetectCasing(col, kDefault);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 3);
  const ColumnData even = MakeColumn({"a", "B", "c", "D"});
  CHECK(DetectCasing(even, kDefault).empty());
}

TEST_CASE("ambiguous clock") {
  ColumnData col = MakeColumn({"08:00", "09:30", "11:15"});
  auto f = DetectAmbiguousDateTime(col, kDefault, ProfileDateTimes(col));
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 3);
  CHECK(f[0].evidence.find("AM/PM") != std::string::npos);
  col = MakeColumn({"08:00", "09:30", "11:15", "19:30"});
  CHECK(DetectAmbiguousDateTime(col, kDefault, ProfileDateTimes(col)).empty());
}

TEST_CASE("ambiguous order and missing year") {
  ColumnData col = MakeColumn({"03/04/2021", "05/06/2021"});
  auto f = DetectAmbiguousDateTime(col, kDefault, ProfileDateTimes(col));
  REQUIRE(f.size() == 1);
  CHECK(f[0].evidence == "day/month order undetermined (DMY|MDY)");
  col = MakeColumn({"03/04/2021", "25/06/2021"});
  CHECK(DetectAmbiguousDateTime(col, kDefault, ProfileDateTimes(col)).empty());
  col = MakeColumn({"5 Mar", "17 Apr", "2 Jun"});
  f = DetectAmbiguousDateTime(col, kDefault, ProfileDateTimes(col));
  REQUIRE(f.size() == 1);
  CHECK(f[0].evidence == "year absent");
  CHECK(f[0].flagged_count == 3);
}

TEST_CASE("suspect dates") {
  const int64_t today = datetime::DaysFromCivil(2024, 6, 1);
  ColumnData col =
      MakeColumn({"2020-01-01", "1970-01-01", "2021-05-05", "2031-01-01",
                  "1850-07-07", "9999-12-31"});
  auto f = DetectSuspectInterval(col, kDefault, ProfileDateTimes(col), today);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 4);
  CHECK(f[0].evidence.find("epoch sentinel x1") != std::string::npos);

  std::vector<std::string> daily;
  for (int d = 1; d <= 20; ++d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "2020-01-%02d", d);
    daily.push_back(buf);
  }
  CHECK(DetectSuspectInterval(MakeColumn(daily), kDefault,
                              ProfileDateTimes(MakeColumn(daily)), today)
            .empty());
  daily.push_back("2021-06-01");
  const ColumnData gap = MakeColumn(daily);
  f = DetectSuspectInterval(gap, kDefault, ProfileDateTimes(gap), today);
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 2);
}

TEST_CASE("sample cap bounds evidence") {
  StrengthConfig cfg = kDefault;
  cfg.sample_cap = 2;
  const ColumnData col = MakeColumn(Repeat("999", 5));
  const auto f = DetectDummyValue(col, cfg, Resources{});
  REQUIRE(f.size() == 1);
  CHECK(f[0].flagged_count == 5);
  CHECK(f[0].samples.size() == 2);
}

}  // namespace
}  // namespace datasmell
