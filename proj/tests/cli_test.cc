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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "datasmell/errors.h"
#include "doctest.h"

namespace datasmell::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "datasmell");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("datasmell_cli_" + std::to_string(++counter_));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string Write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const char kClean[] = "id,name\n1,alpha\n2,beta\n3,gamma\n";
const char kSmelly[] = "id,name\n1,alpha\n2,Alpha\n3,alpha\n";

TEST_CASE("scan exit codes") {
  TempDir d;
  CHECK(Invoke({"scan", d.Write("c.csv", kClean)}).code == kExitClean);
  const Run smelly = Invoke({"scan", d.Write("s.csv", kSmelly)});
  CHECK(smelly.code == kExitSmelly);
  CHECK(smelly.out.find("\"C-CASING\"") != std::string::npos);
  CHECK(Invoke({"scan", d.path() + "/missing.csv"}).code == kExitUsage);
  CHECK(Invoke({"scan", d.Write("bad.csv", "a\n\"open\n")}).code ==
        kExitInput);
  CHECK(Invoke({"scan"}).code == kExitUsage);
  CHECK(Invoke({"scan", "x.csv", "--bogus"}).code == kExitUsage);
  CHECK(Invoke({}).code == kExitUsage);
}

TEST_CASE("detector selection") {
  TempDir d;
  const std::string s = d.Write("s.csv", kSmelly);
  CHECK(Invoke({"scan", s, "--exclude", "C-CASING,US-CASING"}).code ==
        kExitClean);
  CHECK(Invoke({"scan", s, "--detectors", "B-DUMMY"}).code == kExitClean);
  const Run unknown = Invoke({"scan", s, "--detectors", "C-CASNG"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("C-CASING") != std::string::npos);
  CHECK(Invoke({"scan", s, "--detectors", "C-CASING", "--exclude",
                "C-CASING"})
            .code == kExitUsage);
}

TEST_CASE("text format and output file") {
  TempDir d;
  const std::string s = d.Write("s.csv", kSmelly);
  const Run text = Invoke({"scan", s, "--format", "text"});
  CHECK(text.out.find("SMELLY") != std::string::npos);
  const std::string out = d.path() + "/report.json";
  const Run to_file = Invoke({"scan", s, "--out", out});
  CHECK(to_file.code == kExitSmelly);
  CHECK(to_file.out.empty());
  CHECK(fs::file_size(out) > 0);
}

TEST_CASE("configuration precedence") {
  TempDir d;
  const std::string cfg = d.Write(
      "cfg.json",
      R"({"preset": "strict", "density_threshold": 0.3,
          "params": {"C-SYN": {"cosine": 0.7}}, "dialect": {"delimiter": ";"}})");
  CliConfig layered = LoadConfigFile(cfg);
  CliConfig flags;
  flags.density_threshold = 0.4;
  layered.OverlayWith(flags);
  const Settings s = Resolve(layered);
  CHECK(s.scan.config.preset == "strict");
  CHECK(s.scan.config.density_threshold == doctest::Approx(0.4));
  CHECK(s.scan.config.Param("C-SYN", "cosine") == doctest::Approx(0.7));
  CHECK(s.scan.config.Param("US-LONG", "min_run") == doctest::Approx(20));
  CHECK(s.load.dialect.delimiter == ';');
  CHECK(s.effective["strength"]["preset"] == "strict");

  const Settings plain = Resolve(CliConfig{});
  CHECK(plain.scan.config.preset == "default");
  CHECK(plain.scan.enabled.size() == 17);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(ParseConfigFile(R"({"colour": 1})", ""), ConfigError);
  CHECK_THROWS_AS(ParseConfigFile("[1]", ""), ConfigError);
  CHECK_THROWS_AS(ParseConfigFile("{", ""), ConfigError);
  CHECK_THROWS_AS(ParseConfigFile(R"({"dialect": {"sep": ","}})", ""),
                  ConfigError);
  CHECK_THROWS_AS(ParseConfigFile(R"({"mode": "some"})", ""), ConfigError);
  CHECK_THROWS_AS(ParseConfigFile(R"({"jobs": "four"})", ""), ConfigError);
  CliConfig bad;
  bad.preset = "extreme";
  CHECK_THROWS_AS(Resolve(bad), ConfigError);
  CliConfig param;
  param.params["C-SYN"]["nope"] = 1;
  CHECK_THROWS_AS(Resolve(param), ConfigError);
  TempDir d;
  const std::string cfg = d.Write("cfg.json", R"({"colour": 1})");
  const Run r = Invoke({"scan", d.Write("c.csv", kClean), "--config", cfg});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("resources resolve relative to the config file") {
  TempDir d;
  d.Write("res/thesaurus.txt", "car: automobile\n");
  const std::string cfg = d.Write(
      "cfg.json", R"({"resources": {"thesaurus": "res/thesaurus.txt"}})");
  const Settings s = Resolve(LoadConfigFile(cfg));
  CHECK(s.scan.resources.ThesaurusLinked("car", "automobile"));
  CHECK(s.effective["resources"].contains("thesaurus"));
  const std::string csv =
      d.Write("cars.csv", "v\ncar\ncar\ncar\nautomobile\nbike\n");
  const Run r = Invoke({"scan", csv, "--config", cfg});
  CHECK(r.code == kExitSmelly);
  CHECK(r.out.find("\"C-SYN\"") != std::string::npos);
  const std::string missing =
      d.Write("missing.json", R"({"resources": {"vectors": "nope.vec"}})");
  CHECK(Invoke({"scan", csv, "--config", missing}).code == kExitUsage);
}

TEST_CASE("corpus mode") {
  TempDir d;
  d.Write("a.csv", kClean);
  d.Write("sub/b.csv", kSmelly);
  d.Write("notes.txt", "ignored");
  const std::string csv = d.path() + "/summary.csv";
  const Run r = Invoke({"corpus", d.path(), "--summary-csv", csv});
  CHECK(r.code == kExitSmelly);
  std::ifstream in(csv);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string summary = buf.str();
  CHECK(summary.rfind("path,rows,columns,smelly_attributes,findings_total\n",
                      0) == 0);
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 3);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["histogram"][0]["datasets"] == 1);
  CHECK(j["summary"]["datasets"] == 2);

  CHECK(Invoke({"corpus", d.path(), "--glob", "*.tsv"}).code == kExitUsage);
  CHECK(Invoke({"corpus", d.path() + "/none"}).code == kExitUsage);
  TempDir broken;
  broken.Write("x.csv", "a\n\"open\n");
  CHECK(Invoke({"corpus", broken.path()}).code == kExitInput);
  broken.Write("y.csv", kClean);
  const Run partial = Invoke({"corpus", broken.path(), "--format", "text"});
  CHECK(partial.code == kExitClean);
  CHECK(partial.err.find("skipped") != std::string::npos);
}

TEST_CASE("explain and list") {
  const Run one = Invoke({"explain", "C-ABBREV"});
  CHECK(one.code == kExitClean);
  CHECK(one.out.find("min_acronym_len") != std::string::npos);
  const Run all = Invoke({"explain", "--all"});
  CHECK(all.code == kExitClean);
  CHECK(all.out.find("UE-INTERMINGLED") != std::string::npos);
  const Run typo = Invoke({"explain", "B-DUMY"});
  CHECK(typo.code == kExitUsage);
  CHECK(typo.err.find("did you mean B-DUMMY") != std::string::npos);
  const Run list = Invoke({"list-detectors"});
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 17);
  CHECK(SuggestId("c-syn") == "C-SYN");
}

}  // namespace
}  // namespace datasmell::cli
