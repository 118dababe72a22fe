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

// Delimited-file reader, per-value base-type classification and column type
// inference.

#ifndef DATASMELL_INGEST_H_
#define DATASMELL_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "datasmell/model.h"

namespace datasmell {

struct Dialect {
  char delimiter = ',';
  char quote = '"';
  bool header = true;
};

struct LoadOptions {
  Dialect dialect;
  TokenSet missing_tokens = DefaultMissingTokens();
};

// Total classification of one raw field. Surrounding whitespace is ignored.
BaseType ClassifyValue(std::string_view raw, const TokenSet& missing_tokens);

// Numeric grammar shared with the detectors. No thousands separators.
bool IsIntegerToken(std::string_view s);
bool IsFloatToken(std::string_view s);  // decimal or scientific, not integer
std::optional<double> ParseNumber(std::string_view s);

// True when `raw` is acceptable to a loader that typed the column as `type`.
bool ParsesAs(std::string_view raw, BaseType type,
              const TokenSet& missing_tokens);

struct TypeInference {
  BaseType strict_type = BaseType::kMissing;
  BaseType dominant = BaseType::kMissing;
  double dominant_fraction = 1.0;
  size_t non_missing_count = 0;
};

// Strict type widens Integer to Float and everything else to Text. Dominance
// ties go to the wider type.
TypeInference InferColumnTypes(std::span<const BaseType> tags);

// One attribute. Raw values live in a single byte arena.
class ColumnData {
 public:
  ColumnData() = default;
  ColumnData(std::string name, size_t index)
      : name_(std::move(name)), index_(index) {}

  void Append(std::string_view raw, bool quoted);
  // Classifies every value and fills the inferred types.
  void Finalize(const TokenSet& missing_tokens);
  // Drops per-row quoting, e.g. for files that quote every field.
  void ClearQuoting() { quoted_.clear(); }

  const std::string& name() const { return name_; }
  size_t index() const { return index_; }
  size_t size() const { return offsets_.size() - 1; }
  std::string_view raw(size_t row) const {
    return std::string_view(arena_).substr(
        offsets_[row], offsets_[row + 1] - offsets_[row]);
  }
  bool has_quoting() const { return !quoted_.empty(); }
  bool quoted(size_t row) const { return !quoted_.empty() && quoted_[row]; }
  BaseType tag(size_t row) const { return tags_[row]; }
  const std::vector<BaseType>& tags() const { return tags_; }
  bool missing(size_t row) const { return tags_[row] == BaseType::kMissing; }

  BaseType strict_type() const { return types_.strict_type; }
  BaseType dominant() const { return types_.dominant; }
  double dominant_fraction() const { return types_.dominant_fraction; }
  size_t non_missing_count() const { return types_.non_missing_count; }

 private:
  std::string name_;
  size_t index_ = 0;
  std::string arena_;
  std::vector<uint64_t> offsets_{0};
  std::vector<bool> quoted_;
  std::vector<BaseType> tags_;
  TypeInference types_;
};

struct Table {
  std::string path;
  std::vector<ColumnData> columns;
  size_t row_count = 0;
  Dialect dialect;
  size_t ragged_rows = 0;
  size_t utf8_replacements = 0;
  std::vector<std::string> warnings;
};

// Throws IoError when the file cannot be read and FormatError when it holds
// no columns or ends inside a quoted field.
Table LoadTable(const std::string& path, const LoadOptions& options = {});
Table ParseTable(std::string content, const LoadOptions& options = {},
                 std::string path = "");

// In-memory construction for tests and tools; rows may be ragged.
Table MakeTable(const std::vector<std::string>& names,
                const std::vector<std::vector<std::string>>& rows,
                const TokenSet& missing_tokens = DefaultMissingTokens());

// Single-column convenience.
ColumnData MakeColumn(const std::vector<std::string>& values,
                      const TokenSet& missing_tokens = DefaultMissingTokens(),
                      std::string name = "value");

// RFC 4180 text using the table's dialect. Quotes fields that need it and
// fields that were quoted on input; values round-trip through ParseTable.
std::string WriteCsv(const Table& table);

// Stable text dump of everything the loader derived.
std::string SerializeTable(const Table& table);

}  // namespace datasmell

#endif  // DATASMELL_INGEST_H_
