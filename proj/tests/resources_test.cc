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

#include "datasmell/resources.h"

#include <cmath>

#include "datasmell/errors.h"
#include "doctest.h"

namespace datasmell {
namespace {

TEST_CASE("thesaurus is symmetric") {
  const Thesaurus t = ParseThesaurus("# synonyms\ncar: automobile, auto\n\n");
  REQUIRE(t.count("automobile") == 1);
  CHECK(t.at("automobile").count("car") == 1);
  CHECK(t.at("car").count("auto") == 1);
  CHECK(t.at("auto").count("car") == 1);
  CHECK_THROWS_AS(ParseThesaurus("car automobile\n"), ConfigError);
}

TEST_CASE("vector tables") {
  const VectorTable v = ParseVectors("2 3\ncar 1 0 0\nauto 0.9 0.1 0\n");
  CHECK(v.dim == 3);
  CHECK(v.vectors.size() == 2);
  CHECK(Cosine(v.vectors.at("car"), v.vectors.at("auto")) ==
        doctest::Approx(0.9 / std::sqrt(0.82)));
  const VectorTable headless = ParseVectors("a 1 2\nb 3 4\n");
  CHECK(headless.dim == 2);
  CHECK_THROWS_AS(ParseVectors("a 1 2\nb 3\n"), ConfigError);
  CHECK_THROWS_AS(ParseVectors("3 2\na 1 2\n"), ConfigError);
  CHECK_THROWS_AS(ParseVectors("a 1 x\n"), ConfigError);
}

TEST_CASE("lexicons normalise entries") {
  const TokenSet l = ParseLexicon("  Black  Friday \n# c\nSpring\n");
  CHECK(l.count("black friday") == 1);
  CHECK(l.count("spring") == 1);
  CHECK(l.size() == 2);
}

TEST_CASE("abbreviation tables") {
  const auto a = ParseAbbreviations("dr = doctor\nst = street\nst = saint\n");
  REQUIRE(a.count("st") == 1);
  CHECK(a.at("st").size() == 2);
  CHECK_THROWS_AS(ParseAbbreviations("lonely\n"), ConfigError);
}

TEST_CASE("missing files are configuration errors") {
  CHECK_THROWS_AS(LoadLexicon("/nonexistent/lexicon.txt"), ConfigError);
}

}  // namespace
}  // namespace datasmell
