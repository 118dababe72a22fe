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

#include "datasmell/model.h"

#include "datasmell/errors.h"
#include "doctest.h"

namespace datasmell {
namespace {

TEST_CASE("registry holds seventeen smells in catalogue order") {
  const Registry& r = RegisterDescriptors();
  REQUIRE(r.size() == 17);
  CHECK(r.descriptors().front().id == "B-DUMMY");
  CHECK(r.descriptors().back().id == "C-SYN");
  size_t column = 0;
  for (const SmellDescriptor& d : r.descriptors()) {
    CHECK(IsValidSmellId(d.id));
    CHECK(!d.doc.empty());
    if (d.granularity == Granularity::kColumn) ++column;
  }
  CHECK(column == 6);
  CHECK(r.Find("C-SYN")->requires_resource.has_value());
  CHECK(r.Find("NOPE") == nullptr);
}

TEST_CASE("registry rejects duplicates and malformed ids") {
  Registry r;
  SmellDescriptor d;
  d.id = "X-ONE";
  r.Register(d);
  CHECK_THROWS_AS(r.Register(d), ConfigError);
  d.id = "lower";
  CHECK_THROWS_AS(r.Register(d), ConfigError);
}

TEST_CASE("presets order their thresholds") {
  const StrengthConfig l = ResolvePreset("lenient");
  const StrengthConfig d = ResolvePreset("default");
  const StrengthConfig s = ResolvePreset("strict");
  CHECK(d.density_threshold == doctest::Approx(0.10));
  CHECK(d.Param("UE-INT-STR", "text_dominance") == doctest::Approx(0.90));
  CHECK(d.Param("B-AMBIG-VAL", "similarity") == doctest::Approx(0.90));
  CHECK(l.Param("C-SYN", "cosine") > d.Param("C-SYN", "cosine"));
  CHECK(d.Param("C-SYN", "cosine") > s.Param("C-SYN", "cosine"));
  CHECK(l.Param("US-LONG", "min_run") > s.Param("US-LONG", "min_run"));
  CHECK(d.sample_cap == 10);
  CHECK_THROWS_AS(ResolvePreset("extreme"), ConfigError);
  CHECK_THROWS_AS(d.Param("C-SYN", "nope"), InternalError);
}

TEST_CASE("overrides are validated") {
  StrengthConfig c = ResolvePreset("default");
  c.Override("C-SYN", "cosine", 0.5);
  CHECK(c.Param("C-SYN", "cosine") == doctest::Approx(0.5));
  CHECK_THROWS_AS(c.Override("C-NOPE", "cosine", 0.5), ConfigError);
  CHECK_THROWS_AS(c.Override("C-SYN", "nope", 0.5), ConfigError);
  CHECK_THROWS_AS(c.Override("C-SYN", "cosine", 1.5), ConfigError);
  c.params["C-SYN"]["cosine"] = 1.5;
  CHECK_THROWS_AS(c.Validate(RegisterDescriptors()), ConfigError);
}

TEST_CASE("findings round trip through JSON") {
  Finding f;
  f.smell_id = "B-DUMMY";
  f.column_index = 3;
  f.flagged_count = 2;
  f.samples = {{1, "999"}, {4, "999"}};
  f.evidence = "value '999' repeated x2";
  f.params_used = {{"repeat_min", 3}};
  CHECK(FindingFromJson(FindingToJson(f)) == f);
}

TEST_CASE("resource lookups") {
  Resources r;
  r.thesaurus["car"] = {"automobile"};
  r.thesaurus["automobile"] = {"car"};
  CHECK(r.HasSynonymResource());
  CHECK(r.ThesaurusLinked("car", "automobile"));
  CHECK(!r.ThesaurusLinked("car", "bike"));
  CHECK(r.Vector("car") == nullptr);
  CHECK(DefaultMissingTokens().count("NA") == 1);
}

}  // namespace
}  // namespace datasmell
