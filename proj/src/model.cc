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

#include <algorithm>
#include <cmath>

#include "datasmell/errors.h"
#include "datasmell/text.h"

namespace datasmell {
namespace {

struct ParamSpec {
  std::string_view smell_id;
  std::string_view name;
  double lenient;
  double standard;
  double strict;
  double min;
  double max;
};

// Every tunable threshold. The strict column always flags a superset of the
// default column, which flags a superset of the lenient one.
constexpr ParamSpec kParamSpecs[] = {
    {smell::kDummyValue, "repeat_min", 4, 3, 3, 2, 1e9},
    {smell::kDummyValue, "ascending_run_min", 7, 6, 5, 2, 1e9},
    {smell::kSuspectInterval, "floor_year", 1800, 1900, 1950, 1, 9999},
    {smell::kSuspectInterval, "future_slack_years", 5, 1, 0, 0, 1000},
    {smell::kSuspectInterval, "gap_factor", 20, 10, 5, 1, 1e9},
    {smell::kSuspectInterval, "min_gap_rows", 10, 10, 10, 3, 1e12},
    {smell::kAmbiguousValue, "similarity", 0.95, 0.90, 0.85, 0, 1},
    {smell::kAmbiguousValue, "distinct_cap", 50000, 50000, 50000, 2, 1e9},
    {smell::kAmbiguousValue, "pair_budget", 5e7, 5e7, 5e7, 1, 1e15},
    {smell::kIntegerAsString, "text_dominance", 0.95, 0.90, 0.80, 0.5, 1},
    {smell::kFloatAsString, "text_dominance", 0.95, 0.90, 0.80, 0.5, 1},
    {smell::kIntegerAsFloat, "integral_fraction", 0.98, 0.95, 0.90, 0, 1},
    {smell::kDateAsDateTime, "midnight_fraction", 0.98, 0.95, 0.90, 0, 1},
    {smell::kIntermingledType, "family_dominance", 0.80, 0.60, 0.50, 0.5, 1},
    {smell::kSmallNumber, "threshold", 0.1, 1.0, 1.0, 0, 1e300},
    {smell::kLongValue, "min_run", 50, 30, 20, 1, 1e9},
    {smell::kCasing, "class_dominance", 0.95, 0.90, 0.60, 0.5, 1},
    {smell::kAmbiguousDateTime, "min_temporal_fraction", 0.8, 0.5, 0.3, 0, 1},
    {smell::kAbbrevInconsistency, "min_acronym_len", 2, 2, 2, 2, 64},
    {smell::kFormatInconsistency, "min_temporal_fraction", 0.8, 0.5, 0.3, 0, 1},
    {smell::kSynonym, "cosine", 0.85, 0.75, 0.65, -1, 1},
};

constexpr double kDensityThreshold[] = {0.20, 0.10, 0.05};

const ParamSpec* FindSpec(std::string_view id, std::string_view name) {
  for (const ParamSpec& spec : kParamSpecs) {
    if (spec.smell_id == id && spec.name == name) return &spec;
  }
  return nullptr;
}

SmellDescriptor Make(std::string_view id, std::string_view name,
                     SmellCategory category, Granularity granularity,
                     std::set<BaseType> types, std::string doc,
                     std::string example,
                     std::optional<std::string> resource = std::nullopt) {
  SmellDescriptor d;
  d.id = std::string(id);
  d.name = std::string(name);
  d.category = category;
  d.granularity = granularity;
  d.applicable_types = std::move(types);
  d.requires_resource = std::move(resource);
  d.doc = std::move(doc);
  d.example = std::move(example);
  return d;
}

}  // namespace

std::string_view CategoryName(SmellCategory c) {
  switch (c) {
    case SmellCategory::kBelievability:
      return "Believability";
    case SmellCategory::kUnderstandabilityEncoding:
      return "Understandability/Encoding";
    case SmellCategory::kUnderstandabilitySyntactic:
      return "Understandability/Syntactic";
    case SmellCategory::kConsistency:
      return "Consistency";
  }
  return "?";
}

std::string_view GranularityName(Granularity g) {
  return g == Granularity::kInstance ? "instance" : "column";
}

std::string_view BaseTypeName(BaseType t) {
  switch (t) {
    case BaseType::kMissing:
      return "missing";
    case BaseType::kInteger:
      return "integer";
    case BaseType::kFloat:
      return "float";
    case BaseType::kDateOnly:
      return "date";
    case BaseType::kTimeOnly:
      return "time";
    case BaseType::kDateTime:
      return "datetime";
    case BaseType::kText:
      return "text";
  }
  return "?";
}

std::optional<BaseType> ParseBaseType(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(BaseType::kText); ++i) {
    const auto t = static_cast<BaseType>(i);
    if (BaseTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view PresetName(Preset p) {
  switch (p) {
    case Preset::kLenient:
      return "lenient";
    case Preset::kDefault:
      return "default";
    case Preset::kStrict:
      return "strict";
  }
  return "?";
}

bool IsValidSmellId(std::string_view id) {
  // [A-Z]+(-[A-Z0-9]+)+
  size_t i = 0;
  while (i < id.size() && id[i] >= 'A' && id[i] <= 'Z') ++i;
  if (i == 0) return false;
  int parts = 0;
  while (i < id.size()) {
    if (id[i] != '-') return false;
    ++i;
    const size_t start = i;
    while (i < id.size() && ((id[i] >= 'A' && id[i] <= 'Z') ||
                             (id[i] >= '0' && id[i] <= '9'))) {
      ++i;
    }
    if (i == start) return false;
    ++parts;
  }
  return parts > 0;
}

void Registry::Register(SmellDescriptor descriptor) {
  if (!IsValidSmellId(descriptor.id)) {
    throw ConfigError("invalid smell id '" + descriptor.id + "'");
  }
  if (Contains(descriptor.id)) {
    throw ConfigError("duplicate smell id '" + descriptor.id + "'");
  }
  descriptors_.push_back(std::move(descriptor));
}

const SmellDescriptor* Registry::Find(std::string_view id) const {
  for (const SmellDescriptor& d : descriptors_) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

namespace {

Registry BuildRegistry() {
  using enum BaseType;
  using enum SmellCategory;
  const std::set<BaseType> kAll = {kInteger, kFloat, kDateOnly,
                                   kTimeOnly, kDateTime, kText};
  const std::set<BaseType> kNumbers = {kInteger, kFloat};
  const std::set<BaseType> kDates = {kDateOnly, kTimeOnly, kDateTime};
  Registry r;
  r.Register(Make(
      smell::kDummyValue, "Dummy Value", kBelievability,
      Granularity::kInstance, kAll,
      "A substitute value stands in for a real one, usually to mark an "
      "unknown entry without a proper missing marker. Flags values from the "
      "dummy lexicon, a single character repeated several times, or an "
      "ascending digit run such as 123456.",
      "age: 34, 51, 999, 27  ->  \"999\" flagged"));
  r.Register(Make(
      smell::kSuspectInterval, "Suspect Date/Time Interval", kBelievability,
      Granularity::kInstance, {kDateOnly, kDateTime},
      "A timestamp that is implausible as a real observation: a conventional "
      "sentinel date (1900-01-01, 1970-01-01, 9999-12-31), a date outside the "
      "plausible window, or the edge of a hole far wider than the usual "
      "spacing of an ordered series.",
      "signup_date: 2021-03-01, 1970-01-01, 2021-03-02  ->  \"1970-01-01\" "
      "flagged (epoch sentinel)"));
  r.Register(Make(
      smell::kAmbiguousValue, "Ambiguous Value", kBelievability,
      Granularity::kColumn, {kText},
      "A value open to more than one reading: two spellings in the column "
      "differ only slightly, or the value is listed in the ambiguity lexicon "
      "(for example a name shared by a city and a state).",
      "district: Bengaluru Urban, Bengaluru Urbn  ->  near-duplicate group"));
  r.Register(Make(
      smell::kIntegerAsString, "Integer as String", kUnderstandabilityEncoding,
      Granularity::kInstance, {kInteger, kText},
      "An integer encoded as text: a quoted number, or a number sitting in a "
      "column that is otherwise text.",
      "qty: 3, \"5\", 7  ->  the quoted \"5\" flagged"));
  r.Register(Make(
      smell::kFloatAsString, "Floating Point Number as String",
      kUnderstandabilityEncoding, Granularity::kInstance, {kFloat, kText},
      "A decimal number encoded as text: quoted, or inside a text column.",
      "label: alpha, beta, 3.14, gamma  ->  \"3.14\" flagged"));
  r.Register(Make(
      smell::kIntegerAsFloat, "Integer as Floating Point Number",
      kUnderstandabilityEncoding, Granularity::kInstance, kNumbers,
      "An integral quantity stored with a zero fractional part, such as 5.0. "
      "The evidence notes when nearly every decimal value is integral.",
      "children: 1.0, 2.0, 0.0  ->  all flagged"));
  r.Register(Make(
      smell::kDateAsDateTime, "Date as Date/Time", kUnderstandabilityEncoding,
      Granularity::kInstance, {kDateTime},
      "A calendar date carried as a timestamp whose time part is exactly "
      "midnight, typically added by a conversion that was not told the input "
      "was a plain date.",
      "appointment_day: 2016-04-29 00:00:00  ->  flagged (midnight suffix)"));
  r.Register(Make(
      smell::kIntermingledType, "Intermingled Data Type",
      kUnderstandabilityEncoding, Granularity::kInstance, kAll,
      "A column mostly holding one kind of data (numbers or dates) also holds "
      "values of another kind, which makes a loader widen the whole column "
      "to text.",
      "price: 10, 12, 9, ask  ->  \"ask\" flagged"));
  r.Register(Make(
      smell::kSmallNumber, "Small Number", kUnderstandabilitySyntactic,
      Granularity::kInstance, kNumbers,
      "Numeric values below 1 in magnitude (zero excluded). Products of such "
      "numbers shrink quickly and lose digits once precision is capped.",
      "rate: 0.02, 1.5, 3  ->  \"0.02\" flagged"));
  r.Register(Make(
      smell::kLongValue, "Long Data Value", kUnderstandabilitySyntactic,
      Granularity::kInstance, {kText},
      "A value containing a long run of characters without whitespace; hard "
      "to read and often an encoded blob or a concatenation.",
      "comment: \"aGVsbG8gd29ybGQgdGhpcyBpcyBhIGJsb2I=\"  ->  flagged"));
  r.Register(Make(
      smell::kCasing, "Casing", kUnderstandabilitySyntactic,
      Granularity::kInstance, {kText},
      "A value whose letter casing deviates from the casing style used by "
      "nearly all other values (lower, UPPER, Title, mixed).",
      "country: us, us, us, US  ->  \"US\" flagged"));
  r.Register(Make(
      smell::kAmbiguousDateTime, "Ambiguous Date/Time Format",
      kUnderstandabilitySyntactic, Granularity::kInstance, kDates,
      "Date/time values admitting more than one reading: day and month order "
      "cannot be pinned down by any row, a 12-hour clock lacks AM/PM, or the "
      "year is absent from every value.",
      "start: 08:00, 09:30, 11:15  ->  all flagged (no AM/PM)"));
  r.Register(Make(
      smell::kCaseInconsistency, "Casing Inconsistency", kConsistency,
      Granularity::kColumn, {kText},
      "One value written with different letter casing across rows.",
      "country: us x97, US x3  ->  one group, 3 minority occurrences"));
  r.Register(Make(
      smell::kSpaceInconsistency, "Spacing Inconsistency", kConsistency,
      Granularity::kColumn, {kText},
      "One value written with different leading, trailing or internal "
      "whitespace.",
      "city: \"New York\", \"New  York\"  ->  one group"));
  r.Register(Make(
      smell::kAbbrevInconsistency, "Abbreviation Inconsistency", kConsistency,
      Granularity::kColumn, {kText},
      "A value appears both abbreviated and in full: a dotted contraction, an "
      "acronym of the long form, or a pair from the abbreviation lexicon.",
      "name: Doctor Hill, Dr. Hill  ->  one group"));
  r.Register(Make(
      smell::kFormatInconsistency, "Date/Time Format Inconsistency",
      kConsistency, Granularity::kColumn, kDates,
      "Date/time values in one column follow more than one format signature.",
      "day: 2021-01-01, 01/02/2021  ->  two signatures"));
  r.Register(Make(
      smell::kSynonym, "Synonym", kConsistency, Granularity::kColumn, {kText},
      "Distinct single-word values with the same meaning, linked by the "
      "thesaurus or by word vectors with high cosine similarity.",
      "furniture: couch, sofa  ->  one group", "thesaurus or vectors"));
  return r;
}

}  // namespace

const Registry& RegisterDescriptors() {
  static const Registry registry = BuildRegistry();
  return registry;
}

double StrengthConfig::Param(std::string_view smell_id,
                             std::string_view name) const {
  auto it = params.find(smell_id);
  if (it != params.end()) {
    auto p = it->second.find(name);
    if (p != it->second.end()) return p->second;
  }
  throw InternalError("no parameter " + std::string(smell_id) + "." +
                      std::string(name));
}

const ParamMap& StrengthConfig::Params(std::string_view smell_id) const {
  static const ParamMap kEmpty;
  auto it = params.find(smell_id);
  return it == params.end() ? kEmpty : it->second;
}

void StrengthConfig::Override(std::string_view smell_id, std::string_view name,
                              double v) {
  auto it = params.find(smell_id);
  if (it == params.end()) {
    throw ConfigError("unknown detector id '" + std::string(smell_id) + "'");
  }
  const ParamSpec* spec = FindSpec(smell_id, name);
  if (spec == nullptr) {
    throw ConfigError("detector " + std::string(smell_id) +
                      " has no parameter '" + std::string(name) + "'");
  }
  if (!std::isfinite(v) || v < spec->min || v > spec->max) {
    throw ConfigError("parameter " + std::string(smell_id) + "." +
                      std::string(name) + " out of range");
  }
  it->second[std::string(name)] = v;
}

void StrengthConfig::Validate(const Registry& registry) const {
  if (!(density_threshold >= 0.0 && density_threshold <= 1.0)) {
    throw ConfigError("density_threshold must lie in [0, 1]");
  }
  if (sample_cap == 0) throw ConfigError("sample_cap must be positive");
  for (const auto& [id, map] : params) {
    if (!registry.Contains(id)) {
      throw ConfigError("unknown detector id '" + id + "' in parameters");
    }
    for (const auto& [name, v] : map) {
      const ParamSpec* spec = FindSpec(id, name);
      if (spec == nullptr) {
        throw ConfigError("detector " + id + " has no parameter '" + name +
                          "'");
      }
      if (!std::isfinite(v) || v < spec->min || v > spec->max) {
        throw ConfigError("parameter " + id + "." + name + " out of range");
      }
    }
  }
}

nlohmann::json StrengthConfig::ToJson() const {
  nlohmann::json j;
  j["preset"] = preset;
  j["density_threshold"] = density_threshold;
  j["sample_cap"] = sample_cap;
  j["missing_tokens"] = nlohmann::json::array();
  for (const std::string& t : missing_tokens) j["missing_tokens"].push_back(t);
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [id, map] : params) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [name, v] : map) m[name] = v;
    p[id] = std::move(m);
  }
  j["params"] = std::move(p);
  return j;
}

StrengthConfig ResolvePreset(std::string_view preset_name) {
  int column = -1;
  if (preset_name == "lenient") column = 0;
  if (preset_name == "default") column = 1;
  if (preset_name == "strict") column = 2;
  if (column < 0) {
    throw ConfigError("unknown preset '" + std::string(preset_name) +
                      "' (expected lenient, default or strict)");
  }
  StrengthConfig cfg;
  cfg.preset = std::string(preset_name);
  cfg.density_threshold = kDensityThreshold[column];
  cfg.missing_tokens = DefaultMissingTokens();
  for (const SmellDescriptor& d : RegisterDescriptors().descriptors()) {
    cfg.params[d.id];
  }
  for (const ParamSpec& spec : kParamSpecs) {
    const double v = column == 0   ? spec.lenient
                     : column == 1 ? spec.standard
                                   : spec.strict;
    cfg.params[std::string(spec.smell_id)][std::string(spec.name)] = v;
  }
  return cfg;
}

TokenSet DefaultMissingTokens() {
  return {"", "NA", "N/A", "na", "null", "NULL", "None", "-"};
}

TokenSet DefaultDummyLexicon() {
  return {"999", "9999", "-1",      "n/a", "tbd", "test",
          "dummy", "unknown", "xxx", "foo", "bar", "asdf"};
}

nlohmann::json FindingToJson(const Finding& f) {
  nlohmann::json j;
  j["smell_id"] = f.smell_id;
  j["column_index"] = f.column_index;
  j["granularity"] = std::string(GranularityName(f.granularity));
  j["flagged_count"] = f.flagged_count;
  j["evidence"] = f.evidence;
  j["samples"] = nlohmann::json::array();
  for (const Sample& s : f.samples) {
    j["samples"].push_back({{"row", s.row}, {"value", s.value}});
  }
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : f.params_used) j["params"][k] = v;
  return j;
}

Finding FindingFromJson(const nlohmann::json& j) {
  Finding f;
  f.smell_id = j.at("smell_id").get<std::string>();
  f.column_index = j.at("column_index").get<size_t>();
  const auto g = j.at("granularity").get<std::string>();
  if (g == "instance") {
    f.granularity = Granularity::kInstance;
  } else if (g == "column") {
    f.granularity = Granularity::kColumn;
  } else {
    throw ConfigError("bad granularity '" + g + "'");
  }
  f.flagged_count = j.at("flagged_count").get<size_t>();
  f.evidence = j.at("evidence").get<std::string>();
  for (const auto& s : j.at("samples")) {
    f.samples.push_back(
        {s.at("row").get<size_t>(), s.at("value").get<std::string>()});
  }
  for (const auto& [k, v] : j.at("params").items()) {
    f.params_used[k] = v.get<double>();
  }
  return f;
}

bool Resources::ThesaurusLinked(std::string_view a, std::string_view b) const {
  auto linked = [&](std::string_view x, std::string_view y) {
    auto it = thesaurus.find(x);
    return it != thesaurus.end() && it->second.count(y) > 0;
  };
  return linked(a, b) || linked(b, a);
}

const std::vector<float>* Resources::Vector(std::string_view token) const {
  auto it = vectors.find(std::string(token));
  return it == vectors.end() ? nullptr : &it->second;
}

}  // namespace datasmell
