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

#include "datasmell/ingest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "datasmell/errors.h"
#include "doctest.h"

namespace datasmell {
namespace {

const TokenSet kMissing = DefaultMissingTokens();

TEST_CASE("value classification") {
  CHECK(ClassifyValue("42", kMissing) == BaseType::kInteger);
  CHECK(ClassifyValue(" -7 ", kMissing) == BaseType::kInteger);
  CHECK(ClassifyValue("3.14", kMissing) == BaseType::kFloat);
  CHECK(ClassifyValue("1e-3", kMissing) == BaseType::kFloat);
  CHECK(ClassifyValue(".5", kMissing) == BaseType::kFloat);
  CHECK(ClassifyValue("1,000", kMissing) == BaseType::kText);
  CHECK(ClassifyValue("2021-01-01", kMissing) == BaseType::kDateOnly);
  CHECK(ClassifyValue("08:00", kMissing) == BaseType::kTimeOnly);
  CHECK(ClassifyValue("2021-01-01 08:00", kMissing) == BaseType::kDateTime);
  CHECK(ClassifyValue("NA", kMissing) == BaseType::kMissing);
  CHECK(ClassifyValue("   ", kMissing) == BaseType::kMissing);
  CHECK(ClassifyValue("Berlin", kMissing) == BaseType::kText);
}

TEST_CASE("number tokens") {
  CHECK(IsIntegerToken("+12"));
  CHECK_FALSE(IsIntegerToken("1.0"));
  CHECK(IsFloatToken("1.0"));
  CHECK(IsFloatToken("-2.5E+10"));
  CHECK_FALSE(IsFloatToken("12"));
  CHECK_FALSE(IsFloatToken("1.2.3"));
  CHECK(ParseNumber("2.5").value() == doctest::Approx(2.5));
  CHECK_FALSE(ParseNumber("abc").has_value());
}

TEST_CASE("type inference") {
  using enum BaseType;
  std::vector<BaseType> ints = {kInteger, kInteger, kMissing};
  TypeInference t = InferColumnTypes(ints);
  CHECK(t.strict_type == kInteger);
  CHECK(t.non_missing_count == 2);
  CHECK(t.dominant_fraction == doctest::Approx(1.0));

  std::vector<BaseType> mix = {kInteger, kFloat, kFloat};
  CHECK(InferColumnTypes(mix).strict_type == kFloat);
  CHECK(InferColumnTypes(mix).dominant == kFloat);

  std::vector<BaseType> text = {kInteger, kText, kText, kText};
  t = InferColumnTypes(text);
  CHECK(t.strict_type == kText);
  CHECK(t.dominant == kText);
  CHECK(t.dominant_fraction == doctest::Approx(0.75));

  std::vector<BaseType> tie = {kInteger, kText};
  CHECK(InferColumnTypes(tie).dominant == kText);

  std::vector<BaseType> none = {kMissing};
  CHECK(InferColumnTypes(none).strict_type == kMissing);
}

TEST_CASE("CSV parsing handles quotes, CRLF and BOM") {
  const Table t = ParseTable(
      "\xEF\xBB\xBF" "a,b,c\r\n1,\"x,y\",\"he said \"\"hi\"\"\"\r\n\r\n2,,\"\"\n");
  REQUIRE(t.columns.size() == 3);
  CHECK(t.row_count == 2);
  CHECK(t.columns[0].name() == "a");
  CHECK(t.columns[1].raw(0) == "x,y");
  CHECK(t.columns[2].raw(0) == "he said \"hi\"");
  CHECK(t.columns[1].quoted(0));
  CHECK_FALSE(t.columns[0].quoted(0));
  CHECK(t.columns[1].missing(1));
  CHECK(t.columns[2].quoted(1));
}

TEST_CASE("embedded newlines stay in the field") {
  const Table t = ParseTable("a,b\n\"line1\nline2\",2\n");
  REQUIRE(t.row_count == 1);
  CHECK(t.columns[0].raw(0) == "line1\nline2");
}

TEST_CASE("ragged rows are padded or truncated") {
  const Table t = ParseTable("a,b\n1\n1,2,3\n4,5\n");
  CHECK(t.row_count == 3);
  CHECK(t.ragged_rows == 2);
  CHECK(t.columns[1].missing(0));
  CHECK(t.columns[1].raw(1) == "2");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(ParseTable("a,b\n\"open,1\n"), FormatError);
  CHECK_THROWS_AS(ParseTable(""), FormatError);
  CHECK_THROWS_AS(LoadTable("/nonexistent/file.csv"), IoError);
}

TEST_CASE("header options and names") {
  LoadOptions opts;
  opts.dialect.header = false;
  opts.dialect.delimiter = ';';
  const Table t = ParseTable("1;2\n3;4\n", opts);
  CHECK(t.row_count == 2);
  CHECK(t.columns[0].name() == "col_0");
  const Table blank = ParseTable("a,,c\n1,2,3\n");
  CHECK(blank.columns[1].name() == "col_1");
}

TEST_CASE("quote-all files drop quoting with a warning") {
  const Table t = ParseTable("\"a\",\"b\"\n\"1\",\"x\"\n\"2\",\"y\"\n");
  CHECK_FALSE(t.columns[0].has_quoting());
  CHECK(t.warnings.size() == 1);
}

TEST_CASE("invalid UTF-8 is replaced and counted") {
  const Table t = ParseTable("a\nok\xFF\n");
  CHECK(t.utf8_replacements == 1);
}

TEST_CASE("WriteCsv keeps quoting") {
  const Table t = ParseTable("a,b\n\"1\",x\n2,\"y\"\"z\"\n");
  const std::string csv = WriteCsv(t);
  CHECK(csv == "a,b\n\"1\",x\n2,\"y\"\"z\"\n");
  CHECK(ParseTable(csv).columns[0].quoted(0));
}

TEST_CASE("LoadTable reads a file") {
  const auto path =
      std::filesystem::temp_directory_path() / "datasmell_ingest_test.csv";
  {
    std::ofstream f(path);
    f << "x,y\n1,a\n2,b\n";
  }
  const Table t = LoadTable(path.string());
  CHECK(t.row_count == 2);
  CHECK(t.columns[0].strict_type() == BaseType::kInteger);
  CHECK(t.columns[1].strict_type() == BaseType::kText);
  std::filesystem::remove(path);
}

TEST_CASE("serialize then parse reproduces every field") {
  std::mt19937 rng(3);
  const std::string alphabet = "ab ,\"\n1";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<size_t> len(1, 6);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::vector<std::string>> rows(8, std::vector<std::string>(3));
    for (auto& row : rows) {
      for (auto& cell : row) {
        const size_t n = len(rng);
        for (size_t k = 0; k < n; ++k) cell.push_back(alphabet[pick(rng)]);
      }
    }
    const Table t = MakeTable({"p", "q", "r"}, rows);
    const Table back = ParseTable(WriteCsv(t));
    REQUIRE(back.row_count == rows.size());
    for (size_t c = 0; c < 3; ++c) {
      for (size_t r = 0; r < rows.size(); ++r) {
        CHECK(back.columns[c].raw(r) == rows[r][c]);
      }
    }
  }
}

}  // namespace
}  // namespace datasmell
