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

#include "datasmell/engine.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "datasmell/detect_column.h"

namespace datasmell {
namespace {

void Append(std::vector<Finding>& out, std::vector<Finding> more) {
  for (Finding& f : more) out.push_back(std::move(f));
}

}  // namespace

TokenSet ScanOptions::AllDetectorIds() {
  TokenSet ids;
  for (const SmellDescriptor& d : RegisterDescriptors().descriptors()) {
    ids.insert(d.id);
  }
  return ids;
}

std::vector<Finding> ScanColumn(const ColumnData& col,
                                const ScanOptions& options,
                                std::vector<std::string>* warnings) {
  const StrengthConfig& cfg = options.config;
  const Resources& res = options.resources;
  std::vector<Finding> all;
  Append(all, DetectDummyValue(col, cfg, res));
  Append(all, DetectIntegerAsString(col, cfg));
  Append(all, DetectFloatAsString(col, cfg));
  Append(all, DetectIntegerAsFloat(col, cfg));
  Append(all, DetectIntermingledType(col, cfg));
  Append(all, DetectSmallNumber(col, cfg));
  Append(all, DetectLongValue(col, cfg));
  Append(all, DetectCasing(col, cfg));

  const bool temporal = std::any_of(col.tags().begin(), col.tags().end(),
                                    [](BaseType t) { return IsTemporal(t); });
  if (temporal) {
    const datetime::ColumnDateTimeProfile profile = ProfileDateTimes(col);
    Append(all, DetectDateAsDateTime(col, cfg, profile));
    Append(all, DetectAmbiguousDateTime(col, cfg, profile));
    Append(all, DetectSuspectInterval(col, cfg, profile, options.today_days));
    Append(all, DetectFormatInconsistency(col, cfg, profile));
  }

  const CascadeResult cascade = RunCascade(col, cfg, res);
  Append(all, DetectCaseInconsistency(col, cfg, cascade));
  Append(all, DetectSpaceInconsistency(col, cfg, cascade));
  Append(all, DetectAbbrevInconsistency(col, cfg, cascade));
  Append(all, DetectAmbiguousValue(col, cfg, cascade));
  Append(all, DetectSynonyms(col, cfg, cascade));
  if (warnings != nullptr) {
    for (const std::string& w : cascade.warnings) {
      warnings->push_back("column " + std::to_string(col.index()) + " (" +
                          col.name() + "): " + w);
    }
  }

  std::vector<Finding> out;
  for (Finding& f : all) {
    if (options.enabled.contains(f.smell_id)) out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Finding& a, const Finding& b) {
                     return a.smell_id < b.smell_id;
                   });
  return out;
}

ScanResult ScanTable(const Table& table, const ScanOptions& options) {
  const size_t n = table.columns.size();
  std::vector<std::vector<Finding>> per_column(n);
  std::vector<std::vector<std::string>> per_warnings(n);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t c = next++; c < n; c = next++) {
      per_column[c] = ScanColumn(table.columns[c], options, &per_warnings[c]);
    }
  };
  const size_t jobs = std::clamp<size_t>(options.jobs, 1, std::max<size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  ScanResult result;
  result.warnings = table.warnings;
  if (options.enabled.contains(std::string(smell::kSynonym)) &&
      !options.resources.HasSynonymResource()) {
    result.warnings.push_back(
        "C-SYN inert: no thesaurus or vector resource configured");
  }
  for (size_t c = 0; c < n; ++c) {
    for (Finding& f : per_column[c]) result.findings.push_back(std::move(f));
    for (std::string& w : per_warnings[c]) {
      result.warnings.push_back(std::move(w));
    }
  }
  return result;
}

}  // namespace datasmell
