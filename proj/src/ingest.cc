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

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "datasmell/datetime.h"
#include "datasmell/errors.h"
#include "datasmell/text.h"

namespace datasmell {
namespace {

size_t SkipSign(std::string_view s) {
  return !s.empty() && (s[0] == '+' || s[0] == '-') ? 1 : 0;
}

size_t SkipDigits(std::string_view s, size_t i) {
  while (i < s.size() && text::IsDigit(s[i])) ++i;
  return i;
}

BaseType TemporalTag(const datetime::TokenSummary& s) {
  if (s.has_date && s.has_time) return BaseType::kDateTime;
  return s.has_date ? BaseType::kDateOnly : BaseType::kTimeOnly;
}

// Incremental RFC 4180 reader over an in-memory buffer.
class CsvReader {
 public:
  CsvReader(std::string_view data, const Dialect& dialect)
      : data_(data), delim_(dialect.delimiter), quote_(dialect.quote) {}

  // Reads the next non-blank record. Returns false at end of input.
  bool Next(std::vector<std::string>& fields, std::vector<bool>& quoted) {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '\n') {
        ++pos_;
        continue;
      }
      if (data_[pos_] == '\r' && pos_ + 1 < data_.size() &&
          data_[pos_ + 1] == '\n') {
        pos_ += 2;
        continue;
      }
      break;
    }
    if (pos_ >= data_.size()) return false;
    size_t n = 0;
    for (;;) {
      if (n == fields.size()) {
        fields.emplace_back();
        quoted.push_back(false);
      }
      std::string& field = fields[n];
      field.clear();
      quoted[n] = false;
      ++n;
      const bool more = ReadField(field, quoted, n - 1);
      if (!more) break;
    }
    fields.resize(n);
    quoted.resize(n);
    return true;
  }

 private:
  // Returns true when a delimiter follows, false at end of record.
  bool ReadField(std::string& field, std::vector<bool>& quoted, size_t k) {
    if (pos_ < data_.size() && data_[pos_] == quote_) {
      quoted[k] = true;
      ++pos_;
      for (;;) {
        const size_t q = data_.find(quote_, pos_);
        if (q == std::string_view::npos) {
          throw FormatError("unterminated quoted field");
        }
        field.append(data_.substr(pos_, q - pos_));
        pos_ = q + 1;
        if (pos_ < data_.size() && data_[pos_] == quote_) {
          field += quote_;
          ++pos_;
          continue;
        }
        break;
      }
    }
    // Unquoted remainder (or stray text after a closing quote).
    const size_t start = pos_;
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == delim_ || c == '\n') break;
      if (c == '\r' && (pos_ + 1 == data_.size() || data_[pos_ + 1] == '\n')) {
        break;
      }
      ++pos_;
    }
    field.append(data_.substr(start, pos_ - start));
    if (pos_ >= data_.size()) return false;
    const char c = data_[pos_];
    if (c == delim_) {
      ++pos_;
      return true;
    }
    pos_ += (c == '\r' && pos_ + 1 < data_.size()) ? 2 : 1;
    return false;
  }

  std::string_view data_;
  size_t pos_ = 0;
  char delim_;
  char quote_;
};

std::string ColumnName(size_t i) { return "col_" + std::to_string(i); }

}  // namespace

bool IsIntegerToken(std::string_view s) {
  const size_t i = SkipSign(s);
  return i < s.size() && SkipDigits(s, i) == s.size();
}

bool IsFloatToken(std::string_view s) {
  size_t i = SkipSign(s);
  const size_t int_end = SkipDigits(s, i);
  bool mantissa_digits = int_end > i;
  bool decimal = false;
  i = int_end;
  if (i < s.size() && s[i] == '.') {
    decimal = true;
    const size_t frac_end = SkipDigits(s, i + 1);
    mantissa_digits = mantissa_digits || frac_end > i + 1;
    i = frac_end;
  }
  if (!mantissa_digits) return false;
  bool exponent = false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    const size_t exp_end = SkipDigits(s, j);
    if (exp_end == j) return false;
    exponent = true;
    i = exp_end;
  }
  return i == s.size() && (decimal || exponent);
}

std::optional<double> ParseNumber(std::string_view s) {
  s = text::Trim(s);
  if (!IsIntegerToken(s) && !IsFloatToken(s)) return std::nullopt;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ptr != s.data() + s.size()) return std::nullopt;
  // Out-of-range magnitudes still name a number.
  if (ec == std::errc::result_out_of_range) return v;
  if (ec != std::errc()) return std::nullopt;
  return v;
}

BaseType ClassifyValue(std::string_view raw, const TokenSet& missing_tokens) {
  const std::string_view t = text::Trim(raw);
  if (t.empty() || missing_tokens.contains(t)) return BaseType::kMissing;
  if (IsIntegerToken(t)) return BaseType::kInteger;
  if (IsFloatToken(t)) return BaseType::kFloat;
  if (const auto s = datetime::Summarize(t)) return TemporalTag(*s);
  return BaseType::kText;
}

bool ParsesAs(std::string_view raw, BaseType type,
              const TokenSet& missing_tokens) {
  const BaseType tag = ClassifyValue(raw, missing_tokens);
  if (tag == BaseType::kMissing || type == BaseType::kText) return true;
  if (type == BaseType::kFloat) return IsNumeric(tag);
  return tag == type;
}

TypeInference InferColumnTypes(std::span<const BaseType> tags) {
  std::array<size_t, 7> counts{};
  for (BaseType t : tags) ++counts[static_cast<size_t>(t)];
  TypeInference out;
  out.non_missing_count = tags.size() - counts[0];
  if (out.non_missing_count == 0) return out;
  size_t kinds = 0;
  for (size_t k = 1; k < counts.size(); ++k) kinds += counts[k] > 0 ? 1 : 0;
  const size_t ints = counts[static_cast<size_t>(BaseType::kInteger)];
  const size_t floats = counts[static_cast<size_t>(BaseType::kFloat)];
  if (kinds == 1) {
    for (size_t k = 1; k < counts.size(); ++k) {
      if (counts[k] > 0) out.strict_type = static_cast<BaseType>(k);
    }
  } else if (ints + floats == out.non_missing_count) {
    out.strict_type = BaseType::kFloat;
  } else {
    out.strict_type = BaseType::kText;
  }
  size_t best = 1;
  for (size_t k = 2; k < counts.size(); ++k) {
    if (counts[k] >= counts[best]) best = k;
  }
  out.dominant = static_cast<BaseType>(best);
  out.dominant_fraction = static_cast<double>(counts[best]) /
                          static_cast<double>(out.non_missing_count);
  return out;
}

void ColumnData::Append(std::string_view raw, bool quoted) {
  if (quoted && quoted_.empty()) quoted_.assign(size() + 1, false);
  if (!quoted_.empty()) quoted_.resize(size() + 1, false);
  if (quoted) quoted_[size()] = true;
  arena_.append(raw);
  offsets_.push_back(arena_.size());
}

void ColumnData::Finalize(const TokenSet& missing_tokens) {
  if (!quoted_.empty()) quoted_.resize(size(), false);
  tags_.resize(size());
  for (size_t i = 0; i < size(); ++i) {
    tags_[i] = ClassifyValue(raw(i), missing_tokens);
  }
  types_ = InferColumnTypes(tags_);
  arena_.shrink_to_fit();
  offsets_.shrink_to_fit();
}

Table ParseTable(std::string content, const LoadOptions& options,
                 std::string path) {
  Table table;
  table.path = std::move(path);
  table.dialect = options.dialect;
  table.utf8_replacements = text::SanitizeUtf8(content);
  std::string_view data = content;
  if (data.starts_with("\xEF\xBB\xBF")) data.remove_prefix(3);

  CsvReader reader(data, options.dialect);
  std::vector<std::string> fields;
  std::vector<bool> quoted;
  size_t width = 0;
  bool have_first = false;
  bool any_field = false;
  bool all_quoted = true;
  auto add_row = [&]() {
    if (fields.size() != width) ++table.ragged_rows;
    for (size_t c = 0; c < width; ++c) {
      if (c < fields.size()) {
        table.columns[c].Append(fields[c], quoted[c]);
        if (!fields[c].empty()) {
          any_field = true;
          all_quoted = all_quoted && quoted[c];
        }
      } else {
        table.columns[c].Append("", false);
      }
    }
    ++table.row_count;
  };
  while (reader.Next(fields, quoted)) {
    if (!have_first) {
      have_first = true;
      width = fields.size();
      table.columns.reserve(width);
      for (size_t c = 0; c < width; ++c) {
        std::string name = options.dialect.header
                               ? std::string(text::Trim(fields[c]))
                               : ColumnName(c);
        if (name.empty()) name = ColumnName(c);
        table.columns.emplace_back(std::move(name), c);
      }
      if (!options.dialect.header) add_row();
      continue;
    }
    add_row();
  }
  if (table.columns.empty()) throw FormatError("input has no columns");
  if (any_field && all_quoted) {
    for (ColumnData& col : table.columns) col.ClearQuoting();
    table.warnings.push_back("every field is quoted; quoting ignored");
  }
  if (table.ragged_rows > 0) {
    table.warnings.push_back(std::to_string(table.ragged_rows) +
                             " ragged row(s) padded or truncated");
  }
  if (table.utf8_replacements > 0) {
    table.warnings.push_back(std::to_string(table.utf8_replacements) +
                             " invalid UTF-8 sequence(s) replaced");
  }
  for (ColumnData& col : table.columns) col.Finalize(options.missing_tokens);
  return table;
}

Table LoadTable(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string content;
  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  if (size < 0) throw IoError("cannot read " + path);
  content.resize(static_cast<size_t>(size));
  in.seekg(0, std::ios::beg);
  if (!in.read(content.data(), size)) throw IoError("cannot read " + path);
  try {
    return ParseTable(std::move(content), options, path);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Table MakeTable(const std::vector<std::string>& names,
                const std::vector<std::vector<std::string>>& rows,
                const TokenSet& missing_tokens) {
  Table table;
  for (size_t c = 0; c < names.size(); ++c) {
    table.columns.emplace_back(names[c], c);
  }
  for (const auto& row : rows) {
    if (row.size() != names.size()) ++table.ragged_rows;
    for (size_t c = 0; c < names.size(); ++c) {
      table.columns[c].Append(c < row.size() ? row[c] : "", false);
    }
    ++table.row_count;
  }
  for (ColumnData& col : table.columns) col.Finalize(missing_tokens);
  return table;
}

ColumnData MakeColumn(const std::vector<std::string>& values,
                      const TokenSet& missing_tokens, std::string name) {
  ColumnData col(std::move(name), 0);
  for (const std::string& v : values) col.Append(v, false);
  col.Finalize(missing_tokens);
  return col;
}

std::string SerializeTable(const Table& table) {
  std::ostringstream out;
  out << "path=" << table.path << "\nrows=" << table.row_count
      << "\ncolumns=" << table.columns.size() << "\ndelimiter="
      << static_cast<int>(table.dialect.delimiter)
      << "\nquote=" << static_cast<int>(table.dialect.quote)
      << "\nheader=" << table.dialect.header
      << "\nragged=" << table.ragged_rows
      << "\nreplacements=" << table.utf8_replacements << '\n';
  for (const ColumnData& col : table.columns) {
    char frac[32];
    std::snprintf(frac, sizeof(frac), "%.6f", col.dominant_fraction());
    out << "column " << col.index() << ' ' << col.name() << " strict="
        << BaseTypeName(col.strict_type())
        << " dominant=" << BaseTypeName(col.dominant()) << ' ' << frac
        << " non_missing=" << col.non_missing_count() << '\n';
    for (size_t r = 0; r < col.size(); ++r) {
      out << r << '\t' << BaseTypeName(col.tag(r)) << '\t'
          << (col.quoted(r) ? 'q' : '-') << '\t' << col.raw(r) << '\n';
    }
  }
  return out.str();
}

std::string WriteCsv(const Table& table) {
  const char delim = table.dialect.delimiter;
  const char quote = table.dialect.quote;
  std::string out;
  auto field = [&](std::string_view v, bool force) {
    const bool needs =
        force ||
        v.find_first_of(std::string{delim, quote, '\n', '\r'}) !=
            std::string_view::npos ||
        (!v.empty() && (text::IsSpace(v.front()) || text::IsSpace(v.back())));
    if (!needs) {
      out.append(v);
      return;
    }
    out += quote;
    for (char c : v) {
      if (c == quote) out += quote;
      out += c;
    }
    out += quote;
  };
  const size_t width = table.columns.size();
  // A lone empty field would read back as a blank line.
  const bool guard_blank = width == 1;
  if (table.dialect.header) {
    for (size_t c = 0; c < width; ++c) {
      if (c > 0) out += delim;
      field(table.columns[c].name(), false);
    }
    out += '\n';
  }
  for (size_t r = 0; r < table.row_count; ++r) {
    for (size_t c = 0; c < width; ++c) {
      if (c > 0) out += delim;
      const ColumnData& col = table.columns[c];
      field(col.raw(r), col.quoted(r) || (guard_blank && col.raw(r).empty()));
    }
    out += '\n';
  }
  return out;
}

}  // namespace datasmell
