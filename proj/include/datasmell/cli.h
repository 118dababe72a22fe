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

// Command-line front end. Exit codes: 0 clean, 1 smelly attributes found,
// 2 usage or configuration error, 3 input that cannot be read or parsed.

#ifndef DATASMELL_CLI_H_
#define DATASMELL_CLI_H_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "datasmell/engine.h"
#include "datasmell/ingest.h"
#include "datasmell/model.h"
#include "datasmell/report.h"
#include "json.hpp"

namespace datasmell::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitSmelly = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

struct ResourcePaths {
  std::string thesaurus;
  std::string vectors;
  std::string ambiguity_lexicon;
  std::string abbreviations;
  std::string dummy_lexicon;
};

// Layered settings. Unset optionals fall through to the next layer
// (flag, then config file, then preset).
struct CliConfig {
  std::optional<std::string> preset;
  std::optional<double> density_threshold;
  std::optional<VerdictMode> mode;
  std::optional<std::vector<std::string>> detectors;
  std::optional<std::vector<std::string>> exclude;
  std::optional<char> delimiter;
  std::optional<char> quote;
  std::optional<bool> header;
  std::optional<std::string> format;
  std::optional<std::string> glob;
  std::optional<size_t> jobs;
  std::optional<size_t> sample_cap;
  std::optional<std::vector<std::string>> missing_tokens;
  std::map<std::string, std::map<std::string, double>> params;
  ResourcePaths resources;

  // Fields set in `over` replace ours; params merge key by key.
  void OverlayWith(const CliConfig& over);
};

// Parses a JSON config document. Relative resource paths resolve against
// `base_dir`. Throws ConfigError.
CliConfig ParseConfigFile(const std::string& content,
                          const std::string& base_dir);
CliConfig LoadConfigFile(const std::string& path);

// Fully resolved settings.
struct Settings {
  ScanOptions scan;
  LoadOptions load;
  VerdictMode mode = VerdictMode::kDensity;
  std::string format = "json";
  std::string glob = "*.csv";
  size_t jobs = 1;
  nlohmann::json effective;  // embedded in reports and digested
};

// Throws ConfigError.
Settings Resolve(const CliConfig& config);

int RunScan(const std::string& path, const Settings& settings,
            const std::string& out_path, std::ostream& out,
            std::ostream& err);
int RunCorpus(const std::string& dir, const Settings& settings,
              const std::string& out_path, const std::string& summary_csv,
              std::ostream& out, std::ostream& err);
int RunExplain(const std::string& smell_id, bool all, std::ostream& out,
               std::ostream& err);
int RunListDetectors(std::ostream& out);

// Entry point shared by the binary and the tests.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

// Closest registered id by edit distance.
std::string SuggestId(const std::string& unknown);

}  // namespace datasmell::cli

#endif  // DATASMELL_CLI_H_
