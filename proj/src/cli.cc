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

#include "datasmell/cli.h"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "datasmell/detect_column.h"
#include "datasmell/errors.h"
#include "datasmell/resources.h"
#include "datasmell/text.h"

namespace datasmell::cli {
namespace fs = std::filesystem;
namespace {

template <typename T>
void Take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

void TakePath(std::string& dst, const std::string& src) {
  if (!src.empty()) dst = src;
}

std::string ResolvePath(const std::string& p, const std::string& base) {
  if (p.empty() || fs::path(p).is_absolute() || base.empty()) return p;
  return (fs::path(base) / p).lexically_normal().string();
}

char ParseChar(const std::string& s, std::string_view what) {
  if (s == "\\t" || s == "tab" || s == "TAB") return '\t';
  if (s.size() != 1) {
    throw ConfigError(std::string(what) + " must be a single character, got '" +
                      s + "'");
  }
  return s[0];
}

std::vector<std::string> StringList(const nlohmann::json& j,
                                    std::string_view key) {
  if (!j.is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw ConfigError(std::string(key) + " must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <typename T>
T Get(const nlohmann::json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + std::string(key) + "' has the wrong type");
  }
}

std::string ContentDigest(const std::string& path) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : ReadResourceFile(path)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void WriteOutput(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + out_path);
}

bool GlobMatch(const std::string& pattern, const fs::path& rel) {
  const bool has_dir = pattern.find('/') != std::string::npos;
  const std::string subject =
      has_dir ? rel.generic_string() : rel.filename().string();
  return fnmatch(pattern.c_str(), subject.c_str(), has_dir ? FNM_PATHNAME : 0) ==
         0;
}

TableReport ScanFile(const std::string& path, const Settings& s, size_t jobs) {
  const Table table = LoadTable(path, s.load);
  ScanOptions opts = s.scan;
  opts.jobs = jobs;
  const ScanResult scan = ScanTable(table, opts);
  return BuildReport(table, scan, s.mode, s.scan.config.density_threshold,
                     s.effective);
}

void AddScanFlags(CLI::App* cmd, CliConfig& flags, std::string& config_path,
                  std::string& out_path, std::optional<std::string>& delimiter,
                  bool& no_header, std::optional<std::string>& mode) {
  cmd->add_option("--config", config_path, "JSON configuration file");
  cmd->add_option("--preset", flags.preset, "lenient, default or strict")
      ->check(CLI::IsMember({"lenient", "default", "strict"}));
  cmd->add_option("--mode", mode, "verdict rule: density or any")
      ->check(CLI::IsMember({"density", "any"}));
  cmd->add_option("--density-threshold", flags.density_threshold,
                  "smelly when a smell's density reaches this fraction")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--detectors", flags.detectors, "report only these ids")
      ->delimiter(',');
  cmd->add_option("--exclude", flags.exclude, "suppress these ids")
      ->delimiter(',');
  cmd->add_option("--format", flags.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", out_path, "write the report to FILE");
  cmd->add_option("--delimiter", delimiter, "field delimiter (default ',')");
  cmd->add_flag("--no-header", no_header, "first row holds data");
  cmd->add_option("--jobs", flags.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sample-cap", flags.sample_cap,
                  "evidence samples per finding")
      ->check(CLI::PositiveNumber);
}

}  // namespace

void CliConfig::OverlayWith(const CliConfig& over) {
  Take(preset, over.preset);
  Take(density_threshold, over.density_threshold);
  Take(mode, over.mode);
  Take(detectors, over.detectors);
  Take(exclude, over.exclude);
  Take(delimiter, over.delimiter);
  Take(quote, over.quote);
  Take(header, over.header);
  Take(format, over.format);
  Take(glob, over.glob);
  Take(jobs, over.jobs);
  Take(sample_cap, over.sample_cap);
  Take(missing_tokens, over.missing_tokens);
  for (const auto& [id, m] : over.params) {
    for (const auto& [name, v] : m) params[id][name] = v;
  }
  TakePath(resources.thesaurus, over.resources.thesaurus);
  TakePath(resources.vectors, over.resources.vectors);
  TakePath(resources.ambiguity_lexicon, over.resources.ambiguity_lexicon);
  TakePath(resources.abbreviations, over.resources.abbreviations);
  TakePath(resources.dummy_lexicon, over.resources.dummy_lexicon);
}

CliConfig ParseConfigFile(const std::string& content,
                          const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  CliConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "preset") {
      c.preset = Get<std::string>(v, key);
    } else if (key == "density_threshold") {
      c.density_threshold = Get<double>(v, key);
    } else if (key == "mode") {
      c.mode = ParseVerdictMode(Get<std::string>(v, key));
      if (!c.mode) throw ConfigError("mode must be 'density' or 'any'");
    } else if (key == "detectors") {
      c.detectors = StringList(v, key);
    } else if (key == "exclude") {
      c.exclude = StringList(v, key);
    } else if (key == "format") {
      c.format = Get<std::string>(v, key);
    } else if (key == "glob") {
      c.glob = Get<std::string>(v, key);
    } else if (key == "jobs") {
      c.jobs = Get<size_t>(v, key);
    } else if (key == "sample_cap") {
      c.sample_cap = Get<size_t>(v, key);
    } else if (key == "missing_tokens") {
      c.missing_tokens = StringList(v, key);
    } else if (key == "dialect") {
      if (!v.is_object()) throw ConfigError("dialect must be an object");
      for (const auto& [dk, dv] : v.items()) {
        if (dk == "delimiter") {
          c.delimiter = ParseChar(Get<std::string>(dv, dk), "delimiter");
        } else if (dk == "quote") {
          c.quote = ParseChar(Get<std::string>(dv, dk), "quote");
        } else if (dk == "header") {
          c.header = Get<bool>(dv, dk);
        } else {
          throw ConfigError("unknown dialect key '" + dk + "'");
        }
      }
    } else if (key == "params") {
      if (!v.is_object()) throw ConfigError("params must be an object");
      for (const auto& [id, m] : v.items()) {
        if (!m.is_object()) {
          throw ConfigError("params." + id + " must be an object");
        }
        for (const auto& [name, value] : m.items()) {
          if (!value.is_number()) {
            throw ConfigError("params." + id + "." + name +
                              " must be a number");
          }
          c.params[id][name] = value.get<double>();
        }
      }
    } else if (key == "resources") {
      if (!v.is_object()) throw ConfigError("resources must be an object");
      for (const auto& [rk, rv] : v.items()) {
        const std::string p = ResolvePath(Get<std::string>(rv, rk), base_dir);
        if (rk == "thesaurus") {
          c.resources.thesaurus = p;
        } else if (rk == "vectors") {
          c.resources.vectors = p;
        } else if (rk == "ambiguity_lexicon") {
          c.resources.ambiguity_lexicon = p;
        } else if (rk == "abbreviations") {
          c.resources.abbreviations = p;
        } else if (rk == "dummy_lexicon") {
          c.resources.dummy_lexicon = p;
        } else {
          throw ConfigError("unknown resource kind '" + rk + "'");
        }
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

CliConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfigFile(buf.str(), fs::path(path).parent_path().string());
}

Settings Resolve(const CliConfig& c) {
  const Registry& registry = RegisterDescriptors();
  Settings s;
  StrengthConfig cfg = ResolvePreset(c.preset.value_or("default"));
  for (const auto& [id, m] : c.params) {
    for (const auto& [name, v] : m) cfg.Override(id, name, v);
  }
  if (c.density_threshold) cfg.density_threshold = *c.density_threshold;
  if (c.sample_cap) cfg.sample_cap = *c.sample_cap;
  if (c.missing_tokens) {
    cfg.missing_tokens =
        TokenSet(c.missing_tokens->begin(), c.missing_tokens->end());
  }
  cfg.Validate(registry);

  auto check_ids = [&](const std::vector<std::string>& ids, const char* what) {
    for (const std::string& id : ids) {
      if (!registry.Contains(id)) {
        throw ConfigError(std::string("unknown detector id '") + id +
                          "' in " + what + " (did you mean " + SuggestId(id) +
                          "?)");
      }
    }
  };
  TokenSet enabled = ScanOptions::AllDetectorIds();
  if (c.detectors) {
    check_ids(*c.detectors, "detectors");
    enabled = TokenSet(c.detectors->begin(), c.detectors->end());
  }
  if (c.exclude) {
    check_ids(*c.exclude, "exclude");
    for (const std::string& id : *c.exclude) {
      if (c.detectors && std::find(c.detectors->begin(), c.detectors->end(),
                                   id) != c.detectors->end()) {
        throw ConfigError("detector '" + id +
                          "' is both enabled and excluded");
      }
      enabled.erase(id);
    }
  }

  Resources& res = s.scan.resources;
  nlohmann::json resources = nlohmann::json::object();
  const ResourcePaths& rp = c.resources;
  if (!rp.thesaurus.empty()) {
    res.thesaurus = LoadThesaurus(rp.thesaurus);
    resources["thesaurus"] = ContentDigest(rp.thesaurus);
  }
  if (!rp.vectors.empty()) {
    VectorTable table = LoadVectors(rp.vectors);
    res.vectors = std::move(table.vectors);
    res.vector_dim = table.dim;
    resources["vectors"] = ContentDigest(rp.vectors);
  }
  if (!rp.ambiguity_lexicon.empty()) {
    res.ambiguity_lexicon = LoadLexicon(rp.ambiguity_lexicon);
    resources["ambiguity_lexicon"] = ContentDigest(rp.ambiguity_lexicon);
  }
  if (!rp.abbreviations.empty()) {
    res.abbreviations = LoadAbbreviations(rp.abbreviations);
    resources["abbreviations"] = ContentDigest(rp.abbreviations);
  }
  if (!rp.dummy_lexicon.empty()) {
    res.dummy_lexicon = LoadLexicon(rp.dummy_lexicon);
    resources["dummy_lexicon"] = ContentDigest(rp.dummy_lexicon);
  }

  s.load.dialect.delimiter = c.delimiter.value_or(',');
  s.load.dialect.quote = c.quote.value_or('"');
  s.load.dialect.header = c.header.value_or(true);
  if (s.load.dialect.delimiter == s.load.dialect.quote ||
      s.load.dialect.delimiter == '\n' || s.load.dialect.delimiter == '\r') {
    throw ConfigError("delimiter must differ from the quote and newline");
  }
  s.load.missing_tokens = cfg.missing_tokens;
  s.mode = c.mode.value_or(VerdictMode::kDensity);
  s.format = c.format.value_or("json");
  if (s.format != "json" && s.format != "text") {
    throw ConfigError("format must be 'json' or 'text'");
  }
  s.glob = c.glob.value_or("*.csv");
  s.jobs = c.jobs.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (s.jobs == 0) throw ConfigError("jobs must be positive");

  nlohmann::json effective;
  effective["strength"] = cfg.ToJson();
  effective["mode"] = VerdictModeName(s.mode);
  effective["detectors"] = nlohmann::json::array();
  for (const std::string& id : enabled) effective["detectors"].push_back(id);
  effective["dialect"] = {{"delimiter", std::string(1, s.load.dialect.delimiter)},
                          {"quote", std::string(1, s.load.dialect.quote)},
                          {"header", s.load.dialect.header}};
  effective["resources"] = std::move(resources);
  s.effective = std::move(effective);

  s.scan.config = std::move(cfg);
  s.scan.enabled = std::move(enabled);
  s.scan.jobs = s.jobs;
  return s;
}

int RunScan(const std::string& path, const Settings& settings,
            const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    err << "datasmell: no such file: " << path << '\n';
    return kExitUsage;
  }
  if (fs::is_directory(path, ec)) {
    err << "datasmell: " << path << " is a directory (use corpus)\n";
    return kExitUsage;
  }
  TableReport report;
  try {
    report = ScanFile(path, settings, settings.jobs);
  } catch (const IoError& e) {
    err << "datasmell: " << e.what() << '\n';
    return kExitInput;
  } catch (const FormatError& e) {
    err << "datasmell: " << e.what() << '\n';
    return kExitInput;
  }
  const std::string text =
      settings.format == "json" ? RenderJson(report) : RenderText(report);
  try {
    WriteOutput(text, out_path, out);
  } catch (const IoError& e) {
    err << "datasmell: " << e.what() << '\n';
    return kExitUsage;
  }
  return report.smelly_attributes() > 0 ? kExitSmelly : kExitClean;
}

int RunCorpus(const std::string& dir, const Settings& settings,
              const std::string& out_path, const std::string& summary_csv,
              std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "datasmell: not a directory: " << dir << '\n';
    return kExitUsage;
  }
  std::vector<std::string> files;
  for (auto it = fs::recursive_directory_iterator(dir, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    const fs::path rel = fs::relative(it->path(), dir, ec);
    if (GlobMatch(settings.glob, rel)) files.push_back(it->path().string());
  }
  if (ec) {
    err << "datasmell: cannot list " << dir << ": " << ec.message() << '\n';
    return kExitUsage;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "datasmell: no files in " << dir << " match '" << settings.glob
        << "'\n";
    return kExitUsage;
  }

  std::vector<std::optional<TableReport>> reports(files.size());
  std::vector<std::string> failures(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < files.size(); i = next++) {
      try {
        reports[i] = ScanFile(files[i], settings, 1);
      } catch (const IoError& e) {
        failures[i] = e.what();
      } catch (const FormatError& e) {
        failures[i] = e.what();
      }
    }
  };
  const size_t jobs = std::clamp<size_t>(settings.jobs, 1, files.size());
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  CorpusSummary summary;
  std::vector<TableReport> scanned;
  for (size_t i = 0; i < files.size(); ++i) {
    if (reports[i]) {
      summary.Add(Summarize(*reports[i]));
      scanned.push_back(std::move(*reports[i]));
    } else {
      summary.Skip({files[i], failures[i]});
      err << "datasmell: skipped " << files[i] << ": " << failures[i] << '\n';
    }
  }
  std::string text;
  if (settings.format == "json") {
    text = CanonicalJson(CorpusToJson(summary, scanned, settings.effective));
  } else {
    text = RenderCorpusText(summary);
    for (const TableReport& r : scanned) text += '\n' + RenderText(r);
  }
  try {
    WriteOutput(text, out_path, out);
    if (!summary_csv.empty()) {
      std::ofstream csv(summary_csv, std::ios::binary | std::ios::trunc);
      if (!csv || !(csv << CorpusCsv(summary))) {
        throw IoError("cannot write " + summary_csv);
      }
    }
  } catch (const IoError& e) {
    err << "datasmell: " << e.what() << '\n';
    return kExitUsage;
  }
  if (summary.datasets.empty()) return kExitInput;
  return summary.any_smelly() ? kExitSmelly : kExitClean;
}

std::string SuggestId(const std::string& unknown) {
  const std::u32string target = text::Decode(text::FoldCase(unknown));
  std::string best;
  size_t best_d = SIZE_MAX;
  for (const SmellDescriptor& d : RegisterDescriptors().descriptors()) {
    const size_t dist =
        DamerauLevenshtein(target, text::Decode(text::FoldCase(d.id)));
    if (dist < best_d) {
      best_d = dist;
      best = d.id;
    }
  }
  return best;
}

namespace {

void PrintDescriptor(const SmellDescriptor& d, const StrengthConfig& defaults,
                     std::ostream& out) {
  out << d.id << "  " << d.name << '\n';
  out << "  category:    " << CategoryName(d.category) << '\n';
  out << "  granularity: " << GranularityName(d.granularity) << '\n';
  out << "  applies to: ";
  for (BaseType t : d.applicable_types) out << ' ' << BaseTypeName(t);
  out << '\n';
  if (d.requires_resource) {
    out << "  requires:    " << *d.requires_resource << '\n';
  }
  out << "  definition:  " << d.doc << '\n';
  out << "  example:     " << d.example << '\n';
  const ParamMap& params = defaults.Params(d.id);
  if (!params.empty()) {
    out << "  default parameters:\n";
    for (const auto& [name, v] : params) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%g", v);
      out << "    " << name << " = " << buf << '\n';
    }
  }
}

}  // namespace

int RunExplain(const std::string& smell_id, bool all, std::ostream& out,
               std::ostream& err) {
  const Registry& registry = RegisterDescriptors();
  const StrengthConfig defaults = ResolvePreset("default");
  if (all) {
    bool first = true;
    for (SmellCategory cat :
         {SmellCategory::kBelievability,
          SmellCategory::kUnderstandabilityEncoding,
          SmellCategory::kUnderstandabilitySyntactic,
          SmellCategory::kConsistency}) {
      if (!first) out << '\n';
      first = false;
      out << "== " << CategoryName(cat) << " ==\n";
      for (const SmellDescriptor& d : registry.descriptors()) {
        if (d.category != cat) continue;
        out << '\n';
        PrintDescriptor(d, defaults, out);
      }
    }
    return kExitClean;
  }
  if (smell_id.empty()) {
    err << "datasmell: explain needs a smell id or --all\n";
    return kExitUsage;
  }
  const SmellDescriptor* d = registry.Find(smell_id);
  if (d == nullptr) {
    err << "datasmell: unknown smell id '" << smell_id << "'; did you mean "
        << SuggestId(smell_id) << "?\n";
    return kExitUsage;
  }
  PrintDescriptor(*d, defaults, out);
  return kExitClean;
}

int RunListDetectors(std::ostream& out) {
  for (const SmellDescriptor& d : RegisterDescriptors().descriptors()) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-16s %-8s %-28s %s\n", d.id.c_str(),
                  std::string(GranularityName(d.granularity)).c_str(),
                  std::string(CategoryName(d.category)).c_str(),
                  d.name.c_str());
    out << line;
  }
  return kExitClean;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Lint delimited tabular data for data smells.", "datasmell"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CliConfig flags;
  std::string config_path;
  std::string out_path;
  std::optional<std::string> delimiter;
  std::optional<std::string> mode;
  bool no_header = false;
  std::string target;
  std::string summary_csv;

  CLI::App* scan = app.add_subcommand("scan", "scan one file");
  scan->add_option("PATH", target, "delimited file")->required();
  AddScanFlags(scan, flags, config_path, out_path, delimiter, no_header, mode);

  CLI::App* corpus = app.add_subcommand("corpus", "scan every matching file");
  corpus->add_option("DIR", target, "directory")->required();
  AddScanFlags(corpus, flags, config_path, out_path, delimiter, no_header,
               mode);
  corpus->add_option("--glob", flags.glob, "file pattern (default *.csv)");
  corpus->add_option("--summary-csv", summary_csv,
                     "write the per-dataset CSV summary to FILE");

  std::string explain_id;
  bool explain_all = false;
  CLI::App* explain = app.add_subcommand("explain", "describe a smell");
  explain->add_option("ID", explain_id, "smell id");
  explain->add_flag("--all", explain_all, "describe every smell");

  CLI::App* list = app.add_subcommand("list-detectors", "list smell ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*list) return RunListDetectors(out);
    if (*explain) return RunExplain(explain_id, explain_all, out, err);

    if (mode) flags.mode = ParseVerdictMode(*mode);
    if (delimiter) flags.delimiter = ParseChar(*delimiter, "delimiter");
    if (no_header) flags.header = false;
    CliConfig layered;
    if (!config_path.empty()) layered = LoadConfigFile(config_path);
    layered.OverlayWith(flags);
    const Settings settings = Resolve(layered);
    if (*scan) return RunScan(target, settings, out_path, out, err);
    return RunCorpus(target, settings, out_path, summary_csv, out, err);
  } catch (const ConfigError& e) {
    err << "datasmell: configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "datasmell: internal error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace datasmell::cli
