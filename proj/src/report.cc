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

#include "datasmell/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "datasmell/errors.h"

namespace datasmell {
namespace {

void WriteCanonical(const nlohmann::json& j, int indent, bool pretty,
                    std::string& out) {
  auto newline = [&](int level) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<size_t>(level) * 2, ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(indent + 1);
        out += nlohmann::json(it.key()).dump();
        out += pretty ? ": " : ":";
        WriteCanonical(it.value(), indent + 1, pretty, out);
      }
      newline(indent);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(indent + 1);
        WriteCanonical(v, indent + 1, pretty, out);
      }
      newline(indent);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        out += FormatFixed(v == 0 ? 0.0 : v);
      }
      return;
    }
    case nlohmann::json::value_t::string:
      out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view VerdictModeName(VerdictMode m) {
  return m == VerdictMode::kDensity ? "density" : "any";
}

std::optional<VerdictMode> ParseVerdictMode(std::string_view s) {
  if (s == "density") return VerdictMode::kDensity;
  if (s == "any") return VerdictMode::kAny;
  return std::nullopt;
}

double ComputeDensity(size_t flagged_count, size_t non_missing_count) {
  if (flagged_count > non_missing_count) {
    throw InternalError("flagged count " + std::to_string(flagged_count) +
                        " exceeds non-missing count " +
                        std::to_string(non_missing_count));
  }
  if (non_missing_count == 0) return 0.0;
  return static_cast<double>(flagged_count) /
         static_cast<double>(non_missing_count);
}

std::string FormatFixed(double v) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool ClassifyAttribute(const std::vector<SmellEntry>& entries, VerdictMode mode,
                       double density_threshold) {
  for (const SmellEntry& e : entries) {
    if (e.findings == 0) continue;
    if (mode == VerdictMode::kAny) return true;
    if (e.granularity == Granularity::kColumn) return true;
    if (e.density >= density_threshold) return true;
  }
  return false;
}

size_t TableReport::smelly_attributes() const {
  return static_cast<size_t>(
      std::count_if(columns.begin(), columns.end(),
                    [](const ColumnReport& c) { return c.smelly; }));
}

size_t TableReport::findings_total() const {
  size_t n = 0;
  for (const ColumnReport& c : columns) n += c.findings.size();
  return n;
}

TableReport BuildReport(const Table& table, const ScanResult& scan,
                        VerdictMode mode, double density_threshold,
                        nlohmann::json config) {
  TableReport r;
  r.path = table.path;
  r.rows = table.row_count;
  r.ragged_rows = table.ragged_rows;
  r.utf8_replacements = table.utf8_replacements;
  r.warnings = scan.warnings;
  r.mode = mode;
  r.density_threshold = density_threshold;
  r.config_digest = ConfigDigest(config);
  r.config = std::move(config);
  for (const ColumnData& col : table.columns) {
    ColumnReport c;
    c.name = col.name();
    c.index = col.index();
    c.strict_type = col.strict_type();
    c.dominant = col.dominant();
    c.dominant_fraction = col.dominant_fraction();
    c.non_missing_count = col.non_missing_count();
    r.columns.push_back(std::move(c));
  }
  for (const Finding& f : scan.findings) {
    if (f.column_index >= r.columns.size()) {
      throw InternalError("finding for unknown column " +
                          std::to_string(f.column_index));
    }
    r.columns[f.column_index].findings.push_back(f);
  }
  for (ColumnReport& c : r.columns) {
    std::map<std::string, SmellEntry> entries;
    for (const Finding& f : c.findings) {
      SmellEntry& e = entries[f.smell_id];
      e.smell_id = f.smell_id;
      e.granularity = f.granularity;
      e.flagged_count += f.flagged_count;
      ++e.findings;
    }
    for (auto& [id, e] : entries) {
      e.density = ComputeDensity(e.flagged_count, c.non_missing_count);
      c.entries.push_back(std::move(e));
    }
    c.smelly = ClassifyAttribute(c.entries, mode, density_threshold);
  }
  return r;
}

std::string CanonicalJson(const nlohmann::json& j) {
  std::string out;
  WriteCanonical(j, 0, true, out);
  out += '\n';
  return out;
}

std::string ConfigDigest(const nlohmann::json& config) {
  std::string compact;
  WriteCanonical(config, 0, false, compact);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : compact) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json ColumnReportToJson(const ColumnReport& c) {
  nlohmann::json j;
  j["index"] = c.index;
  j["name"] = c.name;
  j["strict_type"] = std::string(BaseTypeName(c.strict_type));
  j["dominant_type"] = std::string(BaseTypeName(c.dominant));
  j["dominant_fraction"] = c.dominant_fraction;
  j["non_missing"] = c.non_missing_count;
  j["smelly"] = c.smelly;
  j["entries"] = nlohmann::json::array();
  for (const SmellEntry& e : c.entries) {
    j["entries"].push_back({{"smell_id", e.smell_id},
                            {"granularity", GranularityName(e.granularity)},
                            {"flagged_count", e.flagged_count},
                            {"findings", e.findings},
                            {"density", e.density}});
  }
  j["findings"] = nlohmann::json::array();
  for (const Finding& f : c.findings) j["findings"].push_back(FindingToJson(f));
  return j;
}

nlohmann::json ReportToJson(const TableReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = r.config;
  j["config_digest"] = r.config_digest;
  j["verdict"] = {{"mode", VerdictModeName(r.mode)},
                  {"density_threshold", r.density_threshold}};
  j["dataset"] = {{"path", r.path},
                  {"rows", r.rows},
                  {"columns", r.columns.size()},
                  {"ragged_rows", r.ragged_rows},
                  {"utf8_replacements", r.utf8_replacements},
                  {"smelly_attributes", r.smelly_attributes()},
                  {"findings_total", r.findings_total()},
                  {"warnings", r.warnings}};
  j["columns"] = nlohmann::json::array();
  for (const ColumnReport& c : r.columns) {
    j["columns"].push_back(ColumnReportToJson(c));
  }
  return j;
}

std::string RenderJson(const TableReport& r) {
  return CanonicalJson(ReportToJson(r));
}

std::string RenderText(const TableReport& r) {
  constexpr size_t kTextSamples = 3;
  std::ostringstream out;
  out << r.path << ": " << r.rows << " rows, " << r.columns.size()
      << " columns, " << r.smelly_attributes() << " smelly attribute(s), "
      << r.findings_total() << " finding(s) [mode " << VerdictModeName(r.mode);
  if (r.mode == VerdictMode::kDensity) {
    out << ", threshold " << FormatFixed(r.density_threshold);
  }
  out << "]\n";
  for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
  for (const ColumnReport& c : r.columns) {
    if (c.findings.empty()) continue;
    out << '\n'
        << (c.smelly ? "SMELLY " : "       ") << '[' << c.index << "] "
        << c.name << " (" << BaseTypeName(c.dominant) << ' '
        << FormatFixed(c.dominant_fraction) << ", strict "
        << BaseTypeName(c.strict_type) << ", " << c.non_missing_count
        << " non-missing)\n";
    for (const SmellEntry& e : c.entries) {
      char line[256];
      std::snprintf(line, sizeof(line), "  %-16s %8zu flagged  density %s\n",
                    e.smell_id.c_str(), e.flagged_count,
                    FormatFixed(e.density).c_str());
      out << line;
    }
    for (const Finding& f : c.findings) {
      out << "    " << f.smell_id << ": " << f.evidence << '\n';
      for (size_t i = 0; i < f.samples.size() && i < kTextSamples; ++i) {
        out << "      row " << f.samples[i].row << ": '" << f.samples[i].value
            << "'\n";
      }
    }
  }
  return out.str();
}

std::string_view HistogramLabel(size_t bin) {
  static constexpr std::string_view kLabels[kHistogramBins] = {
      "0", "1-2", "3-5", "6-10", ">10"};
  return bin < kHistogramBins ? kLabels[bin] : "?";
}

size_t HistogramBin(size_t smelly_attributes) {
  if (smelly_attributes == 0) return 0;
  if (smelly_attributes <= 2) return 1;
  if (smelly_attributes <= 5) return 2;
  if (smelly_attributes <= 10) return 3;
  return 4;
}

void CorpusSummary::Add(DatasetSummary d) {
  ++histogram[HistogramBin(d.smelly_attributes)];
  const auto pos = std::upper_bound(
      datasets.begin(), datasets.end(), d,
      [](const DatasetSummary& a, const DatasetSummary& b) {
        return a.path < b.path;
      });
  datasets.insert(pos, std::move(d));
}

void CorpusSummary::Skip(SkippedFile s) {
  const auto pos = std::upper_bound(
      skipped.begin(), skipped.end(), s,
      [](const SkippedFile& a, const SkippedFile& b) {
        return a.path < b.path;
      });
  skipped.insert(pos, std::move(s));
}

void CorpusSummary::Merge(const CorpusSummary& other) {
  for (const DatasetSummary& d : other.datasets) Add(d);
  for (const SkippedFile& s : other.skipped) Skip(s);
}

bool CorpusSummary::any_smelly() const {
  return std::any_of(datasets.begin(), datasets.end(),
                     [](const DatasetSummary& d) {
                       return d.smelly_attributes > 0;
                     });
}

DatasetSummary Summarize(const TableReport& r) {
  return {r.path, r.rows, r.columns.size(), r.smelly_attributes(),
          r.findings_total()};
}

CorpusSummary AggregateCorpus(const std::vector<TableReport>& reports) {
  CorpusSummary s;
  for (const TableReport& r : reports) s.Add(Summarize(r));
  return s;
}

std::string CorpusCsv(const CorpusSummary& s) {
  std::string out = "path,rows,columns,smelly_attributes,findings_total\n";
  for (const DatasetSummary& d : s.datasets) {
    out += CsvField(d.path) + ',' + std::to_string(d.rows) + ',' +
           std::to_string(d.columns) + ',' +
           std::to_string(d.smelly_attributes) + ',' +
           std::to_string(d.findings_total) + '\n';
  }
  return out;
}

nlohmann::json CorpusToJson(const CorpusSummary& s,
                            const std::vector<TableReport>& reports,
                            const nlohmann::json& config) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = config;
  j["config_digest"] = ConfigDigest(config);
  nlohmann::json hist = nlohmann::json::array();
  for (size_t b = 0; b < kHistogramBins; ++b) {
    hist.push_back({{"bin", HistogramLabel(b)}, {"datasets", s.histogram[b]}});
  }
  j["summary"] = {{"datasets", s.datasets.size()},
                  {"skipped", s.skipped.size()},
                  {"histogram", hist}};
  j["skipped"] = nlohmann::json::array();
  for (const SkippedFile& f : s.skipped) {
    j["skipped"].push_back({{"path", f.path}, {"reason", f.reason}});
  }
  j["datasets"] = nlohmann::json::array();
  for (const TableReport& r : reports) {
    nlohmann::json d = ReportToJson(r);
    d.erase("config");
    d.erase("config_digest");
    d.erase("tool");
    d.erase("schema_version");
    j["datasets"].push_back(std::move(d));
  }
  return j;
}

std::string RenderCorpusText(const CorpusSummary& s) {
  std::ostringstream out;
  out << "corpus: " << s.datasets.size() << " dataset(s), "
      << s.skipped.size() << " skipped\n";
  out << "smelly attributes per dataset:\n";
  for (size_t b = 0; b < kHistogramBins; ++b) {
    char line[64];
    std::snprintf(line, sizeof(line), "  %-5s %zu\n",
                  std::string(HistogramLabel(b)).c_str(), s.histogram[b]);
    out << line;
  }
  for (const DatasetSummary& d : s.datasets) {
    out << "  " << d.path << ": " << d.smelly_attributes
        << " smelly attribute(s), " << d.findings_total << " finding(s)\n";
  }
  for (const SkippedFile& f : s.skipped) {
    out << "  skipped " << f.path << ": " << f.reason << '\n';
  }
  return out.str();
}

}  // namespace datasmell
