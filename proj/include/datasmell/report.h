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

// Smell density, smelly-attribute verdicts, report rendering and corpus
// aggregation.

#ifndef DATASMELL_REPORT_H_
#define DATASMELL_REPORT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datasmell/engine.h"
#include "datasmell/ingest.h"
#include "datasmell/model.h"
#include "json.hpp"

namespace datasmell {

inline constexpr std::string_view kToolName = "datasmell";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class VerdictMode : uint8_t { kDensity, kAny };
std::string_view VerdictModeName(VerdictMode m);
// Accepts "density" and "any".
std::optional<VerdictMode> ParseVerdictMode(std::string_view s);

// flagged / non_missing; 0 for an empty column. Throws InternalError when
// flagged exceeds non_missing.
double ComputeDensity(size_t flagged_count, size_t non_missing_count);
std::string FormatFixed(double v);  // "%.6f"

struct SmellEntry {
  std::string smell_id;
  Granularity granularity = Granularity::kInstance;
  size_t flagged_count = 0;
  size_t findings = 0;
  double density = 0.0;
};

bool ClassifyAttribute(const std::vector<SmellEntry>& entries, VerdictMode mode,
                       double density_threshold);

struct ColumnReport {
  std::string name;
  size_t index = 0;
  BaseType strict_type = BaseType::kMissing;
  BaseType dominant = BaseType::kMissing;
  double dominant_fraction = 1.0;
  size_t non_missing_count = 0;
  std::vector<SmellEntry> entries;  // by smell id
  std::vector<Finding> findings;
  bool smelly = false;
};

struct TableReport {
  std::string path;
  size_t rows = 0;
  size_t ragged_rows = 0;
  size_t utf8_replacements = 0;
  std::vector<ColumnReport> columns;
  std::vector<std::string> warnings;
  VerdictMode mode = VerdictMode::kDensity;
  double density_threshold = 0.10;
  nlohmann::json config;
  std::string config_digest;

  size_t smelly_attributes() const;
  size_t findings_total() const;
};

// `config` is the effective configuration; it is embedded and digested.
TableReport BuildReport(const Table& table, const ScanResult& scan,
                        VerdictMode mode, double density_threshold,
                        nlohmann::json config);

// Canonical JSON: sorted keys, two-space indent, every floating-point
// number as "%.6f".
std::string CanonicalJson(const nlohmann::json& j);
// FNV-1a 64 over the compact canonical form, as 16 hex digits.
std::string ConfigDigest(const nlohmann::json& config);

nlohmann::json ColumnReportToJson(const ColumnReport& c);
nlohmann::json ReportToJson(const TableReport& r);
std::string RenderJson(const TableReport& r);
std::string RenderText(const TableReport& r);

// Corpus aggregation.
inline constexpr size_t kHistogramBins = 5;
std::string_view HistogramLabel(size_t bin);  // "0", "1-2", "3-5", "6-10", ">10"
size_t HistogramBin(size_t smelly_attributes);

struct DatasetSummary {
  std::string path;
  size_t rows = 0;
  size_t columns = 0;
  size_t smelly_attributes = 0;
  size_t findings_total = 0;
  bool operator==(const DatasetSummary&) const = default;
};

struct SkippedFile {
  std::string path;
  std::string reason;
  bool operator==(const SkippedFile&) const = default;
};

struct CorpusSummary {
  std::vector<DatasetSummary> datasets;  // sorted by path
  std::vector<SkippedFile> skipped;      // sorted by path
  std::array<size_t, kHistogramBins> histogram{};
  bool operator==(const CorpusSummary&) const = default;

  void Add(DatasetSummary d);
  void Skip(SkippedFile s);
  // Fold of another summary; equal to having added its datasets here.
  void Merge(const CorpusSummary& other);
  bool any_smelly() const;
};

DatasetSummary Summarize(const TableReport& r);
CorpusSummary AggregateCorpus(const std::vector<TableReport>& reports);

// One row per dataset: path,rows,columns,smelly_attributes,findings_total.
std::string CorpusCsv(const CorpusSummary& s);
nlohmann::json CorpusToJson(const CorpusSummary& s,
                            const std::vector<TableReport>& reports,
                            const nlohmann::json& config);
std::string RenderCorpusText(const CorpusSummary& s);

}  // namespace datasmell

#endif  // DATASMELL_REPORT_H_
