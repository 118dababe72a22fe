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

// Instance-granularity detectors. Each returns at most one finding for the
// column; the finding lists the offending rows.

#ifndef DATASMELL_DETECT_INSTANCE_H_
#define DATASMELL_DETECT_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "datasmell/datetime.h"
#include "datasmell/ingest.h"
#include "datasmell/model.h"

namespace datasmell {

// Collects flagged rows for one smell on one column.
class FindingBuilder {
 public:
  FindingBuilder(std::string_view smell_id, const ColumnData& col,
                 Granularity granularity, const StrengthConfig& cfg);

  void Flag(size_t row);
  size_t count() const { return finding_.flagged_count; }
  // Empty when nothing was flagged.
  std::vector<Finding> Build(std::string evidence) &&;

 private:
  const ColumnData& col_;
  size_t cap_;
  Finding finding_;
};

// Profile over the column's temporal-tagged rows; other rows are skipped.
datetime::ColumnDateTimeProfile ProfileDateTimes(const ColumnData& col);

// Days since the epoch for the local calendar date of the system clock.
int64_t TodayDays();

std::vector<Finding> DetectDummyValue(const ColumnData& col,
                                      const StrengthConfig& cfg,
                                      const Resources& res);
std::vector<Finding> DetectIntegerAsString(const ColumnData& col,
                                           const StrengthConfig& cfg);
std::vector<Finding> DetectFloatAsString(const ColumnData& col,
                                         const StrengthConfig& cfg);
std::vector<Finding> DetectIntegerAsFloat(const ColumnData& col,
                                          const StrengthConfig& cfg);
std::vector<Finding> DetectDateAsDateTime(
    const ColumnData& col, const StrengthConfig& cfg,
    const datetime::ColumnDateTimeProfile& profile);
std::vector<Finding> DetectIntermingledType(const ColumnData& col,
                                            const StrengthConfig& cfg);
std::vector<Finding> DetectSmallNumber(const ColumnData& col,
                                       const StrengthConfig& cfg);
std::vector<Finding> DetectLongValue(const ColumnData& col,
                                     const StrengthConfig& cfg);
std::vector<Finding> DetectCasing(const ColumnData& col,
                                  const StrengthConfig& cfg);
std::vector<Finding> DetectAmbiguousDateTime(
    const ColumnData& col, const StrengthConfig& cfg,
    const datetime::ColumnDateTimeProfile& profile);
std::vector<Finding> DetectSuspectInterval(
    const ColumnData& col, const StrengthConfig& cfg,
    const datetime::ColumnDateTimeProfile& profile,
    int64_t today_days = TodayDays());

enum class CasingClass : uint8_t {
  kNeutral,  // no letters
  kLower,
  kUpper,
  kTitle,
  kMixed,  // upper case after lower case inside a word
  kOther,
};
std::string_view CasingClassName(CasingClass c);
CasingClass ClassifyCasing(std::string_view value);

// Longest run of non-whitespace code points.
size_t LongestRun(std::string_view value);

// Parseable date/time rows over non-missing rows.
double TemporalFraction(const ColumnData& col,
                        const datetime::ColumnDateTimeProfile& profile);

}  // namespace datasmell

#endif  // DATASMELL_DETECT_INSTANCE_H_
