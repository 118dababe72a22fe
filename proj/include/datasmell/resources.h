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

// Loaders for the optional resource files. Every loader validates the whole
// file up front and throws ConfigError naming the offending line.
//
//   thesaurus      token: syn1, syn2, ...
//   vectors        token c1 c2 ... cd   (optional "count d" first line)
//   lexicon        one entry per line
//   abbreviations  short = long
//
// Blank lines and lines starting with '#' are ignored (vectors excepted).
// Keys are case-folded.

#ifndef DATASMELL_RESOURCES_H_
#define DATASMELL_RESOURCES_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "datasmell/model.h"

namespace datasmell {

using Thesaurus = std::map<std::string, TokenSet, std::less<>>;

// Links are stored in both directions.
Thesaurus ParseThesaurus(std::string_view content);
Thesaurus LoadThesaurus(const std::string& path);

struct VectorTable {
  std::unordered_map<std::string, std::vector<float>> vectors;
  size_t dim = 0;
};
VectorTable ParseVectors(std::string_view content);
VectorTable LoadVectors(const std::string& path);

TokenSet ParseLexicon(std::string_view content);
TokenSet LoadLexicon(const std::string& path);

std::map<std::string, TokenSet, std::less<>> ParseAbbreviations(
    std::string_view content);
std::map<std::string, TokenSet, std::less<>> LoadAbbreviations(
    const std::string& path);

// Reads a whole file; throws ConfigError when it cannot be opened.
std::string ReadResourceFile(const std::string& path);

double Cosine(const std::vector<float>& a, const std::vector<float>& b);

}  // namespace datasmell

#endif  // DATASMELL_RESOURCES_H_
