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

// Column-granularity consistency detectors. Distinct values pass through a
// canonicalization cascade; each stage merges the classes left by the
// previous one and every merge is reported under the earliest stage that
// performs it:
//
//   1 case-fold       C-CASING
//   2 space-fold      C-SPACING     (trim + collapse, on case-folded text)
//   3 abbreviation    C-ABBREV
//   4 near-duplicate  B-AMBIG-VAL   (edit similarity)
//   5 synonym         C-SYN         (thesaurus or word vectors)
//
// Stages 3-5 compare "keys": the case-folded, space-collapsed forms.

#ifndef DATASMELL_DETECT_COLUMN_H_
#define DATASMELL_DETECT_COLUMN_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "datasmell/datetime.h"
#include "datasmell/ingest.h"
#include "datasmell/model.h"

namespace datasmell {

enum class Relation : uint8_t {
  kCaseFold,
  kSpaceFold,
  kAbbreviation,
  kNearDuplicate,
  kSynonym,
};
inline constexpr size_t kStageCount = 5;

std::string_view RelationName(Relation r);
std::string_view RelationSmell(Relation r);

struct Variant {
  std::string raw;  // most frequent raw form of the merged class
  size_t count = 0;  // all occurrences in the class
  bool operator==(const Variant&) const = default;
};

struct VariantGroup {
  std::string canonical;  // raw form of the majority variant
  std::vector<Variant> variants;  // sorted by raw form
  Relation relation = Relation::kCaseFold;
  bool operator==(const VariantGroup&) const = default;

  size_t total() const;
  size_t majority_count() const;
};

struct CascadeResult {
  static constexpr uint32_t kNoValue = UINT32_MAX;
  // Distinct non-missing raw values in lexicographic order, with counts.
  std::vector<std::string> distinct;
  std::vector<size_t> counts;
  // stage_class[k][i]: class id of distinct[i] after stage k. Class ids are
  // the smallest member index.
  std::array<std::vector<uint32_t>, kStageCount> stage_class;
  std::vector<VariantGroup> groups;  // ordered by stage, then canonical
  // Parallel to groups: distinct indexes outside the majority variant.
  std::vector<std::vector<uint32_t>> group_minority;
  // Distinct index per row; kNoValue for missing rows. Empty when the
  // cascade ran on explicit values.
  std::vector<uint32_t> row_distinct;
  // Distinct indexes in the ambiguity lexicon that no group counts as a
  // minority variant.
  std::vector<uint32_t> lexicon_hits;
  bool near_duplicate_skipped = false;
  std::vector<std::string> warnings;
};

// Runs every stage regardless of which detectors are enabled. Columns whose
// dominant type is not Text yield an empty result.
CascadeResult RunCascade(const ColumnData& col, const StrengthConfig& cfg,
                         const Resources& res);
// Same, over explicit distinct values and counts.
CascadeResult RunCascade(std::vector<std::string> distinct,
                         std::vector<size_t> counts, const StrengthConfig& cfg,
                         const Resources& res);

// Optimal-string-alignment Damerau-Levenshtein distance over code points.
size_t DamerauLevenshtein(std::u32string_view a, std::u32string_view b);
// 1 - distance / max length; 1 for two empty strings.
double EditSimilarity(std::u32string_view a, std::u32string_view b);

// Abbreviation relation on keys (case-folded, space-collapsed): token-wise
// dotted contractions or lexicon links, whole-value lexicon links, or an
// acronym of the other value's initials.
bool AbbreviationRelated(std::string_view a, std::string_view b,
                         const Resources& res, size_t min_acronym_len);

// Key used by stages 3-5.
std::string CascadeKey(std::string_view raw);

// Turns cascade groups into findings for one consistency smell.
std::vector<Finding> GroupFindings(const ColumnData& col,
                                   const CascadeResult& cascade,
                                   Relation relation,
                                   const StrengthConfig& cfg);

std::vector<Finding> DetectCaseInconsistency(const ColumnData& col,
                                             const StrengthConfig& cfg,
                                             const CascadeResult& cascade);
std::vector<Finding> DetectSpaceInconsistency(const ColumnData& col,
                                              const StrengthConfig& cfg,
                                              const CascadeResult& cascade);
std::vector<Finding> DetectAbbrevInconsistency(const ColumnData& col,
                                               const StrengthConfig& cfg,
                                               const CascadeResult& cascade);
// Near-duplicate groups plus ambiguity-lexicon hits.
std::vector<Finding> DetectAmbiguousValue(const ColumnData& col,
                                          const StrengthConfig& cfg,
                                          const CascadeResult& cascade);
std::vector<Finding> DetectSynonyms(const ColumnData& col,
                                    const StrengthConfig& cfg,
                                    const CascadeResult& cascade);
std::vector<Finding> DetectFormatInconsistency(
    const ColumnData& col, const StrengthConfig& cfg,
    const datetime::ColumnDateTimeProfile& profile);

}  // namespace datasmell

#endif  // DATASMELL_DETECT_COLUMN_H_
