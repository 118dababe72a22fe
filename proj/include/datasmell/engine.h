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

// Runs the detector roster over every column of a table.

#ifndef DATASMELL_ENGINE_H_
#define DATASMELL_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "datasmell/detect_instance.h"
#include "datasmell/ingest.h"
#include "datasmell/model.h"

namespace datasmell {

struct ScanOptions {
  StrengthConfig config = ResolvePreset("default");
  Resources resources;
  // Detectors whose findings are reported; every detector still runs.
  TokenSet enabled = AllDetectorIds();
  size_t jobs = 1;
  int64_t today_days = TodayDays();

  static TokenSet AllDetectorIds();
};

struct ScanResult {
  std::vector<Finding> findings;  // by column index, then smell id
  std::vector<std::string> warnings;
};

std::vector<Finding> ScanColumn(const ColumnData& col,
                                const ScanOptions& options,
                                std::vector<std::string>* warnings = nullptr);

ScanResult ScanTable(const Table& table, const ScanOptions& options);

}  // namespace datasmell

#endif  // DATASMELL_ENGINE_H_
