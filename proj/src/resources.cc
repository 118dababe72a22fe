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

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "datasmell/errors.h"
#include "datasmell/text.h"

namespace datasmell {
namespace {

// Calls fn(line_number, line) for each line, stripping a trailing '\r'.
template <typename Fn>
void ForEachLine(std::string_view content, Fn fn) {
  size_t line_no = 0;
  while (!content.empty()) {
    ++line_no;
    const size_t nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view()
                                           : content.substr(nl + 1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    fn(line_no, line);
  }
}

bool Skippable(std::string_view line) {
  const std::string_view t = text::Trim(line);
  return t.empty() || t.front() == '#';
}

[[noreturn]] void Malformed(std::string_view kind, size_t line_no,
                            std::string_view why) {
  throw ConfigError(std::string(kind) + " line " + std::to_string(line_no) +
                    ": " + std::string(why));
}

std::string Key(std::string_view s) { return text::FoldCase(text::Trim(s)); }

bool ParseSize(std::string_view s, size_t* out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string ReadResourceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open resource file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Thesaurus ParseThesaurus(std::string_view content) {
  Thesaurus out;
  ForEachLine(content, [&](size_t n, std::string_view line) {
    if (Skippable(line)) return;
    const size_t colon = line.find(':');
    if (colon == std::string_view::npos) Malformed("thesaurus", n, "no ':'");
    const std::string head = Key(line.substr(0, colon));
    if (head.empty()) Malformed("thesaurus", n, "empty token");
    std::string_view rest = line.substr(colon + 1);
    size_t added = 0;
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string syn = Key(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view()
                                             : rest.substr(comma + 1);
      if (syn.empty()) continue;
      if (syn == head) continue;
      out[head].insert(syn);
      out[syn].insert(head);
      ++added;
    }
    if (added == 0) Malformed("thesaurus", n, "no synonyms");
  });
  return out;
}

VectorTable ParseVectors(std::string_view content) {
  VectorTable out;
  size_t declared = 0;
  bool has_header = false;
  ForEachLine(content, [&](size_t n, std::string_view line) {
    const std::vector<std::string_view> parts = text::SplitWords(line);
    if (parts.empty()) return;
    if (n == 1 && parts.size() == 2) {
      size_t count = 0;
      size_t dim = 0;
      if (ParseSize(parts[0], &count) && ParseSize(parts[1], &dim)) {
        if (dim == 0) Malformed("vectors", n, "dimension must be >= 1");
        has_header = true;
        declared = count;
        out.dim = dim;
        return;
      }
    }
    if (parts.size() < 2) Malformed("vectors", n, "token without components");
    const size_t dim = parts.size() - 1;
    if (out.dim == 0) out.dim = dim;
    if (dim != out.dim) {
      Malformed("vectors", n,
                "expected " + std::to_string(out.dim) + " components, got " +
                    std::to_string(dim));
    }
    std::vector<float> v(dim);
    for (size_t i = 0; i < dim; ++i) {
      const std::string_view p = parts[i + 1];
      const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v[i]);
      if (ec != std::errc() || ptr != p.data() + p.size() ||
          !std::isfinite(v[i])) {
        Malformed("vectors", n, "bad component '" + std::string(p) + "'");
      }
    }
    out.vectors.try_emplace(text::FoldCase(parts[0]), std::move(v));
  });
  if (has_header && declared != 0 && declared != out.vectors.size()) {
    throw ConfigError("vectors: header declares " + std::to_string(declared) +
                      " entries, file has " +
                      std::to_string(out.vectors.size()));
  }
  return out;
}

TokenSet ParseLexicon(std::string_view content) {
  TokenSet out;
  ForEachLine(content, [&](size_t, std::string_view line) {
    if (Skippable(line)) return;
    out.insert(text::CollapseSpace(Key(line)));
  });
  return out;
}

std::map<std::string, TokenSet, std::less<>> ParseAbbreviations(
    std::string_view content) {
  std::map<std::string, TokenSet, std::less<>> out;
  ForEachLine(content, [&](size_t n, std::string_view line) {
    if (Skippable(line)) return;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) Malformed("abbreviations", n, "no '='");
    const std::string shortform = Key(line.substr(0, eq));
    const std::string longform = text::CollapseSpace(Key(line.substr(eq + 1)));
    if (shortform.empty() || longform.empty()) {
      Malformed("abbreviations", n, "empty side");
    }
    out[shortform].insert(longform);
  });
  return out;
}

Thesaurus LoadThesaurus(const std::string& path) {
  return ParseThesaurus(ReadResourceFile(path));
}

VectorTable LoadVectors(const std::string& path) {
  return ParseVectors(ReadResourceFile(path));
}

TokenSet LoadLexicon(const std::string& path) {
  return ParseLexicon(ReadResourceFile(path));
}

std::map<std::string, TokenSet, std::less<>> LoadAbbreviations(
    const std::string& path) {
  return ParseAbbreviations(ReadResourceFile(path));
}

double Cosine(const std::vector<float>& a, const std::vector<float>& b) {
  if (a.size() != b.size() || a.empty()) return 0.0;
  double dot = 0;
  double na = 0;
  double nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace datasmell
