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

// Smell taxonomy, strength configuration, findings and the descriptor
// registry shared by the ingest, detector and report layers.

#ifndef DATASMELL_MODEL_H_
#define DATASMELL_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace datasmell {

using TokenSet = std::set<std::string, std::less<>>;
using ParamMap = std::map<std::string, double, std::less<>>;

enum class SmellCategory : uint8_t {
  kBelievability,
  kUnderstandabilityEncoding,
  kUnderstandabilitySyntactic,
  kConsistency,
};

enum class Granularity : uint8_t { kInstance, kColumn };

// Per-value base type. The declaration order is also the widening rank used
// to break dominance ties (later = wider).
enum class BaseType : uint8_t {
  kMissing,
  kInteger,
  kFloat,
  kDateOnly,
  kTimeOnly,
  kDateTime,
  kText,
};

std::string_view CategoryName(SmellCategory c);
std::string_view GranularityName(Granularity g);
std::string_view BaseTypeName(BaseType t);
std::optional<BaseType> ParseBaseType(std::string_view name);

inline bool IsNumeric(BaseType t) {
  return t == BaseType::kInteger || t == BaseType::kFloat;
}
inline bool IsTemporal(BaseType t) {
  return t == BaseType::kDateOnly || t == BaseType::kTimeOnly ||
         t == BaseType::kDateTime;
}

// Stable smell ids.
namespace smell {
inline constexpr std::string_view kDummyValue = "B-DUMMY";
inline constexpr std::string_view kSuspectInterval = "B-SUSP-DT";
inline constexpr std::string_view kAmbiguousValue = "B-AMBIG-VAL";
inline constexpr std::string_view kIntegerAsString = "UE-INT-STR";
inline constexpr std::string_view kFloatAsString = "UE-FLT-STR";
inline constexpr std::string_view kIntegerAsFloat = "UE-INT-FLT";
inline constexpr std::string_view kDateAsDateTime = "UE-DATE-DT";
inline constexpr std::string_view kIntermingledType = "UE-INTERMINGLED";
inline constexpr std::string_view kSmallNumber = "US-SMALL";
inline constexpr std::string_view kLongValue = "US-LONG";
inline constexpr std::string_view kCasing = "US-CASING";
inline constexpr std::string_view kAmbiguousDateTime = "US-AMBIG-DT";
inline constexpr std::string_view kCaseInconsistency = "C-CASING";
inline constexpr std::string_view kSpaceInconsistency = "C-SPACING";
inline constexpr std::string_view kAbbrevInconsistency = "C-ABBREV";
inline constexpr std::string_view kFormatInconsistency = "C-DT-FMT";
inline constexpr std::string_view kSynonym = "C-SYN";
}  // namespace smell

struct SmellDescriptor {
  std::string id;
  std::string name;
  SmellCategory category = SmellCategory::kBelievability;
  Granularity granularity = Granularity::kInstance;
  std::set<BaseType> applicable_types;
  std::optional<std::string> requires_resource;
  std::string doc;
  std::string example;
};

// Descriptor catalogue. Insertion order is the canonical listing order.
class Registry {
 public:
  // Throws ConfigError on a malformed or duplicate id.
  void Register(SmellDescriptor descriptor);

  const SmellDescriptor* Find(std::string_view id) const;
  bool Contains(std::string_view id) const { return Find(id) != nullptr; }
  const std::vector<SmellDescriptor>& descriptors() const {
    return descriptors_;
  }
  size_t size() const { return descriptors_.size(); }

 private:
  std::vector<SmellDescriptor> descriptors_;
};

// The shipped catalogue: 17 descriptors in a fixed order.
const Registry& RegisterDescriptors();

// True when `id` has the form PREFIX-PART[-PART...] in upper case.
bool IsValidSmellId(std::string_view id);

enum class Preset : uint8_t { kLenient, kDefault, kStrict };
std::string_view PresetName(Preset p);

// Detector thresholds ("smell strength") plus the loader knobs that shape
// what a detector sees.
struct StrengthConfig {
  std::string preset = "default";
  std::map<std::string, ParamMap, std::less<>> params;
  double density_threshold = 0.10;
  TokenSet missing_tokens;
  size_t sample_cap = 10;

  // Throws InternalError for a parameter that no preset defines.
  double Param(std::string_view smell_id, std::string_view name) const;
  const ParamMap& Params(std::string_view smell_id) const;

  // Applies one override. Throws ConfigError for unknown ids or names.
  void Override(std::string_view smell_id, std::string_view name, double v);

  // Throws ConfigError when ids are unknown or values are out of range.
  void Validate(const Registry& registry) const;

  nlohmann::json ToJson() const;
};

// Throws ConfigError for anything other than lenient/default/strict.
StrengthConfig ResolvePreset(std::string_view preset_name);

TokenSet DefaultMissingTokens();
TokenSet DefaultDummyLexicon();

struct Sample {
  size_t row = 0;
  std::string value;
  bool operator==(const Sample&) const = default;
};

struct Finding {
  std::string smell_id;
  size_t column_index = 0;
  Granularity granularity = Granularity::kInstance;
  size_t flagged_count = 0;
  std::vector<Sample> samples;  // ascending row, at most sample_cap
  std::string evidence;
  ParamMap params_used;
  bool operator==(const Finding&) const = default;
};

nlohmann::json FindingToJson(const Finding& f);
Finding FindingFromJson(const nlohmann::json& j);

// User-supplied lexicons and word vectors. Keys are case-folded.
struct Resources {
  TokenSet dummy_lexicon = DefaultDummyLexicon();
  std::map<std::string, TokenSet, std::less<>> thesaurus;
  std::unordered_map<std::string, std::vector<float>> vectors;
  size_t vector_dim = 0;
  TokenSet ambiguity_lexicon;
  // short form -> long forms
  std::map<std::string, TokenSet, std::less<>> abbreviations;

  bool HasSynonymResource() const {
    return !thesaurus.empty() || !vectors.empty();
  }
  bool ThesaurusLinked(std::string_view a, std::string_view b) const;
  const std::vector<float>* Vector(std::string_view token) const;
};

}  // namespace datasmell

#endif  // DATASMELL_MODEL_H_
