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

#include "datasmell/text.h"

#include <random>
#include <string>

#include "doctest.h"

namespace datasmell::text {
namespace {

TEST_CASE("Trim strips ASCII whitespace at both ends") {
  CHECK(Trim("  a b \t\r\n") == "a b");
  CHECK(Trim("") == "");
  CHECK(Trim(" \t ") == "");
}

TEST_CASE("Decode and Encode round trip multi-byte text") {
  const std::string s = "Zürich \xE2\x82\xAC \xF0\x9F\x98\x80";
  const std::u32string u = Decode(s);
  CHECK(u.size() == 10);
  CHECK(Encode(u) == s);
  CHECK(Length(s) == 10);
}

TEST_CASE("FoldCase handles ASCII and Latin letters") {
  CHECK(FoldCase("HeLLo") == "hello");
  CHECK(FoldCase("ÄÖÜ") == "äöü");
  CHECK(FoldCase("123-_") == "123-_");
}

TEST_CASE("CollapseSpace trims and squeezes runs") {
  CHECK(CollapseSpace("  New \t  York  ") == "New York");
  CHECK(CollapseSpace("a") == "a");
}

TEST_CASE("SplitWords separates on whitespace") {
  const auto w = SplitWords("  Dr.  Who  x");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == "Dr.");
  CHECK(w[2] == "x");
}

TEST_CASE("SanitizeUtf8 replaces invalid bytes") {
  std::string s = "ok\xFF\xFEok";
  CHECK(SanitizeUtf8(s) == 2);
  CHECK(Decode(s).size() == 6);
  std::string good = "fine ü";
  CHECK(SanitizeUtf8(good) == 0);
  CHECK(good == "fine ü");
}

TEST_CASE("FoldCase is idempotent on random ASCII") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ch(32, 126);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = 0; k < 12; ++k) s.push_back(static_cast<char>(ch(rng)));
    const std::string once = FoldCase(s);
    CHECK(FoldCase(once) == once);
    CHECK(CollapseSpace(CollapseSpace(s)) == CollapseSpace(s));
  }
}

}  // namespace
}  // namespace datasmell::text
