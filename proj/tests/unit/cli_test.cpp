// Copyright 2026 The tvb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "tvb/cli.hpp"
#include "tvb/io.hpp"

namespace tvb {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example(std::vector<std::string> args) {
  args.insert(args.begin(), "example");
  const Result r = invoke(args);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return r.out.substr(0, r.out.find_last_not_of('\n') + 1);
}

json report(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = invoke(args);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, ClassifyTangentP2) {
  const json j = report({"classify", example({"tangent", "--variety", "pn", "--dim", "2"})});
  EXPECT_EQ(j["dim_h"], 1);
  EXPECT_EQ(j["commutative"], true);
  EXPECT_EQ(j["parameters"], 2);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
}

TEST(Cli, ClassifyTangentP1xP1) {
  const json j = report({"classify", example({"tangent", "--variety", "p1xp1"})});
  EXPECT_EQ(j["dim_h"], 2);
  EXPECT_EQ(j["parameters"], 4);
}

TEST(Cli, CheckThreeLines) {
  const std::string in = example({"three-lines"});
  const json j = report({"check", in});
  EXPECT_EQ(j["compatible"], false);
  EXPECT_EQ(j["cone"], 0);
  EXPECT_FALSE(j["certificate"].get<std::string>().empty());
  EXPECT_EQ(invoke({"check", in}).code, cli::kOk);
  EXPECT_EQ(invoke({"--strict", "check", in}).code, cli::kNegativeVerdict);
  EXPECT_EQ(invoke({"check", in, "--strict"}).code, cli::kNegativeVerdict);
  EXPECT_EQ(invoke({"chern", in}).code, cli::kOk);
  EXPECT_EQ(invoke({"chern", in, "--strict"}).code, cli::kNegativeVerdict);
}

TEST(Cli, OtherVerbs) {
  const json e = report({"endalg", example({"hirzebruch", "--a", "1"})});
  EXPECT_EQ(e["dim"], 1);
  EXPECT_EQ(e["commutative"], true);

  const json c = report({"chern", example({"tangent", "--variety", "pn", "--dim", "1"})});
  EXPECT_EQ(c["chern"].size(), 2u);

  const std::string canon = example({"canonical", "--variety", "pn", "--dim", "1"});
  const json v = report({"validate-field", canon});
  EXPECT_EQ(v["valid"], false);
  EXPECT_EQ(invoke({"validate-field", canon, "--strict"}).code, cli::kNegativeVerdict);
  const json shifted =
      report({"validate-field", example({"canonical", "--variety", "pn", "--dim", "1", "--shift", "1"})});
  EXPECT_EQ(shifted["valid"], true);

  const Result text = invoke({"classify", example({"tangent", "--variety", "p1xp2"})});
  EXPECT_EQ(text.code, cli::kOk);
  EXPECT_FALSE(text.out.empty());
}

TEST(Cli, MalformedInputExitsOne) {
  EXPECT_EQ(invoke({}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"check"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"check", "{\"fan\": 3}"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"check", "/does/not/exist.json"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"check", "{oops"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"example", "nonsense"}).code, cli::kMalformedInput);
  EXPECT_EQ(invoke({"--format", "xml", "check", example({"three-lines"})}).code, cli::kMalformedInput);
  // rank 0 bundles are internal only
  const std::string rank0 =
      R"({"fan": {"n": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]}, "rank": 0,
          "filtrations": [{"ray": 0, "steps": [{"j": 0, "basis": []}]}, {"ray": 1, "steps": [{"j": 0, "basis": []}]}]})";
  EXPECT_EQ(invoke({"check", rank0}).code, cli::kMalformedInput);
}

TEST(Cli, DeterministicOutput) {
  const std::string in = example({"tangent", "--variety", "p1xp2"});
  for (const char* verb : {"classify", "check", "endalg", "chern"}) {
    const Result a = invoke({verb, in, "--format", "json"});
    const Result b = invoke({verb, in, "--format", "json"});
    EXPECT_EQ(a.out, b.out) << verb;
  }
}

TEST(Cli, OutputFileAndOracleLimit) {
  const auto dir = std::filesystem::temp_directory_path() / ("tvb_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "tl.json").string();
  EXPECT_EQ(invoke({"example", "three-lines", "--output", path}).code, cli::kOk);
  ::setenv("TVB_ORACLE_LIMIT", "1", 1);
  const json j = report({"check", path});
  ::unsetenv("TVB_ORACLE_LIMIT");
  EXPECT_EQ(j["status"], "indeterminate");
  const std::string rep = (dir / "rep.json").string();
  EXPECT_EQ(invoke({"check", path, "--output", rep}).code, cli::kOk);
  std::ifstream in(rep);
  EXPECT_EQ(json::parse(in)["compatible"], false);
  std::filesystem::remove_all(dir);
}

TEST(Cli, EveryExampleReparses) {
  const std::vector<std::vector<std::string>> bundles{
      {"tangent", "--variety", "pn", "--dim", "1"}, {"tangent", "--variety", "pn", "--dim", "3"},
      {"tangent", "--variety", "p1xp1"},            {"tangent", "--variety", "p1xp2"},
      {"hirzebruch", "--a", "2"},                   {"trivial", "--variety", "pn", "--dim", "2"},
      {"three-lines"}};
  for (const auto& args : bundles) {
    const std::string text = example(args);
    const ToricBundle b = bundle_from_json(json::parse(text));
    EXPECT_EQ(to_json(b).dump(), text) << args[0];
  }
  for (const char* v : {"pn", "p1xp1", "hirzebruch"}) {
    const std::string fan = example({"fan", "--variety", v});
    EXPECT_TRUE(validate_fan(fan_from_json(json::parse(fan)), true)) << v;
  }
  const std::string canon = example({"canonical", "--variety", "pn", "--dim", "2", "--shift", "1"});
  EXPECT_EQ(field_from_json(json::parse(canon)).tuple.size(), 2u);
}

TEST(Cli, Sha256KnownVector) {
  EXPECT_EQ(cli::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace tvb
