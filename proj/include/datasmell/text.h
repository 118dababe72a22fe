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

// UTF-8 helpers shared by the ingest layer and the detectors. Case mapping
// covers ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic; other scripts
// are treated as caseless.

#ifndef DATASMELL_TEXT_H_
#define DATASMELL_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace datasmell::text {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string_view Trim(std::string_view s);

// Decodes UTF-8; malformed sequences decode to U+FFFD.
std::u32string Decode(std::string_view s);
std::string Encode(std::u32string_view s);

// Number of code points.
size_t Length(std::string_view s);

char32_t FoldCase(char32_t c);
bool IsUpperLetter(char32_t c);
bool IsLowerLetter(char32_t c);
inline bool IsLetter(char32_t c) { return IsUpperLetter(c) || IsLowerLetter(c); }

std::string FoldCase(std::string_view s);

// Trims and collapses internal whitespace runs to one space.
std::string CollapseSpace(std::string_view s);

// Splits on whitespace, dropping empty pieces.
std::vector<std::string_view> SplitWords(std::string_view s);

// Replaces malformed UTF-8 with U+FFFD. Returns the number of replacements.
size_t SanitizeUtf8(std::string& s);

}  // namespace datasmell::text

#endif  // DATASMELL_TEXT_H_
