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

#include <string>
#include <vector>

#include "datasmell/engine.h"
#include "datasmell/errors.h"
#include "datasmell/ingest.h"
#include "doctest.h"

namespace datasmell {
namespace {

Table Numbers(size_t n) {
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < n; ++i) rows.push_back({std::to_string(10 + i % 80)});
  return MakeTable({"age"}, rows);
}

ScanResult Flagging(const std::string& id, Granularity g, size_t flagged) {
  ScanResult s;
  Finding f;
  f.smell_id = id;
  f.granularity = g;
  f.flagged_count = flagged;
  f.evidence = "test";
  s.findings.push_back(f);
  return s;
}

TEST_CASE("density is exact") {
  CHECK(FormatFixed(ComputeDensity(12, 100)) == "0.120000");
  CHECK(FormatFixed(ComputeDensity(9, 100)) == "0.090000");
  CHECK(FormatFixed(ComputeDensity(1, 3)) == "0.333333");
  CHECK(ComputeDensity(0, 0) == 0.0);
  CHECK_THROWS_AS(ComputeDensity(5, 4), InternalError);
}

TEST_CASE("verdict rule") {
  SmellEntry e{"B-DUMMY", Granularity::kInstance, 12, 1, 0.12};
  CHECK(ClassifyAttribute({e}, VerdictMode::kDensity, 0.10));
  e.density = 0.09;
  CHECK_FALSE(ClassifyAttribute({e}, VerdictMode::kDensity, 0.10));
  CHECK(ClassifyAttribute({e}, VerdictMode::kAny, 0.10));
  e.density = 0.10;
  CHECK(ClassifyAttribute({e}, VerdictMode::kDensity, 0.10));
  SmellEntry column{"C-CASING", Granularity::kColumn, 1, 1, 0.01};
  CHECK(ClassifyAttribute({column}, VerdictMode::kDensity, 0.10));
  CHECK_FALSE(ClassifyAttribute({}, VerdictMode::kAny, 0.10));
}

TEST_CASE("report aggregates findings per smell") {
  const Table t = Numbers(100);
  TableReport r = BuildReport(
      t, Flagging("B-DUMMY", Granularity::kInstance, 12),
      VerdictMode::kDensity, 0.10, nlohmann::json::object());
  REQUIRE(r.columns.size() == 1);
  REQUIRE(r.columns[0].entries.size() == 1);
  CHECK(FormatFixed(r.columns[0].entries[0].density) == "0.120000");
  CHECK(r.columns[0].smelly);
  CHECK(r.smelly_attributes() == 1);
  CHECK(r.findings_total() == 1);
  CHECK(RenderJson(r).find("\"density\": 0.120000") != std::string::npos);

  r = BuildReport(t, Flagging("B-DUMMY", Granularity::kInstance, 9),
                  VerdictMode::kDensity, 0.10, nlohmann::json::object());
  CHECK_FALSE(r.columns[0].smelly);
  r = BuildReport(t, Flagging("B-DUMMY", Granularity::kInstance, 9),
                  VerdictMode::kAny, 0.10, nlohmann::json::object());
  CHECK(r.columns[0].smelly);
  CHECK_THROWS_AS(
      BuildReport(t, Flagging("B-DUMMY", Granularity::kInstance, 101),
                  VerdictMode::kAny, 0.10, nlohmann::json::object()),
      InternalError);
}

TEST_CASE("canonical JSON sorts keys and fixes floats") {
  nlohmann::json j = {{"b", 1}, {"a", {{"z", 0.5}, {"y", "s"}}}};
  const std::string s = CanonicalJson(j);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("0.500000") != std::string::npos);
  CHECK(s.find("\"y\"") < s.find("\"z\""));
  CHECK(s == CanonicalJson(nlohmann::json::parse(j.dump())));
}

TEST_CASE("config digest") {
  const nlohmann::json a = {{"x", 1}, {"y", 0.1}};
  const nlohmann::json b = {{"y", 0.1}, {"x", 1}};
  CHECK(ConfigDigest(a) == ConfigDigest(b));
  CHECK(ConfigDigest(a).size() == 16);
  CHECK(ConfigDigest(a) != ConfigDigest({{"x", 2}, {"y", 0.1}}));
}

TEST_CASE("report JSON carries the schema") {
  const Table t = Numbers(10);
  const TableReport r = BuildReport(t, ScanResult{}, VerdictMode::kDensity,
                                    0.10, nlohmann::json::object());
  const nlohmann::json j = nlohmann::json::parse(RenderJson(r));
  CHECK(j["schema_version"] == 1);
  CHECK(j["tool"]["name"] == "datasmell");
  CHECK(j["columns"].size() == 1);
  CHECK(j["dataset"]["smelly_attributes"] == 0);
  CHECK(RenderText(r).find("0 smelly attribute") != std::string::npos);
}

TEST_CASE("histogram bins") {
  CHECK(HistogramBin(0) == 0);
  CHECK(HistogramBin(1) == 1);
  CHECK(HistogramBin(2) == 1);
  CHECK(HistogramBin(3) == 2);
  CHECK(HistogramBin(5) == 2);
  CHECK(HistogramBin(6) == 3);
  CHECK(HistogramBin(10) == 3);
  CHECK(HistogramBin(11) == 4);
  CHECK(HistogramLabel(4) == ">10");
}

TEST_CASE("corpus summaries fold and merge") {
  CorpusSummary a;
  a.Add({"b.csv", 10, 2, 1, 3});
  a.Add({"a.csv", 5, 1, 0, 0});
  CorpusSummary b;
  b.Add({"c.csv", 7, 4, 12, 20});
  b.Skip({"d.csv", "bad quote"});
  CorpusSummary all;
  all.Merge(a);
  all.Merge(b);
  CHECK(all.datasets.size() == 3);
  CHECK(all.datasets.front().path == "a.csv");
  CHECK(all.histogram[0] == 1);
  CHECK(all.histogram[1] == 1);
  CHECK(all.histogram[4] == 1);
  CHECK(all.skipped.size() == 1);
  CHECK(all.any_smelly());
  CHECK(CorpusCsv(all).rfind(
            "path,rows,columns,smelly_attributes,findings_total\na.csv,5,1,0,0\n",
            0) == 0);
}

TEST_CASE("full scan report is deterministic") {
  const Table t = MakeTable({"city", "n"}, {{"Berlin", "1"},
                                            {"berlin", "2"},
                                            {"Berlin", "\"3\""},
                                            {"Munich", "999"}});
  ScanOptions opts;
  opts.today_days = 20000;
  const auto once = RenderJson(BuildReport(t, ScanTable(t, opts),
                                           VerdictMode::kDensity, 0.1, {}));
  opts.jobs = 4;
  const auto twice = RenderJson(BuildReport(t, ScanTable(t, opts),
                                            VerdictMode::kDensity, 0.1, {}));
  CHECK(once == twice);
}

}  // namespace
}  // namespace datasmell
