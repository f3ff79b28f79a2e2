// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "test_support.hpp"

namespace anticart::cli {
namespace {

using anticart::testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, ParsePrintsWitness) {
  const CliRun r = run_cli({"parse", data_path("demo.json"), "Alice hates Bob"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("links:    (0,1) (3,4)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("residual: s"), std::string::npos);
}

TEST(Cli, ParseJson) {
  const CliRun r = run_cli({"--format", "json", "parse", data_path("demo.json"), "Alice hates Bob"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["witnesses"].size(), 1u);
  EXPECT_EQ(doc["witnesses"][0]["residual"], "s");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"parse", data_path("demo.json"), "Alice Bob"}).code, kNegative);
  EXPECT_EQ(run_cli({"parse", data_path("demo.json"), "Alice frobs Bob"}).code, kInputError);
  EXPECT_EQ(run_cli({"normalize", data_path("missing.json")}).code, kInputError);
  EXPECT_EQ(run_cli({"teleport", "--dim", "1"}).code, kInputError);
  EXPECT_EQ(run_cli({"bogus"}).code, kInputError);
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, AmbiguousMeaningNeedsIndex) {
  const std::string lex = temp_file("ambiguous.json", R"({"bases": {"n": 2}, "words": [
    {"word": "a", "type": "n n.R", "payload": "dense", "data": [1, 0, 0, 1]},
    {"word": "b", "type": "n n.L", "payload": "dense", "data": [1, 0, 0, 1]},
    {"word": "c", "type": "n", "payload": "dense", "data": [0.5, 2]}]})");
  EXPECT_EQ(run_cli({"meaning", lex, "a b c", "--target", "n"}).code, kAmbiguous);
  const CliRun first = run_cli({"meaning", lex, "a b c", "--target", "n", "--parse-index", "1"});
  EXPECT_EQ(first.code, kOk) << first.err;
  EXPECT_EQ(run_cli({"meaning", lex, "a b c", "--target", "n", "--parse-index", "5"}).code, kInputError);
}

TEST(Cli, ThickMeaningReportsEntropy) {
  const CliRun r = run_cli({"--format", "json", "meaning", "--thick", data_path("demo.json"), "queen"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["entropy"].get<double>(), std::log2(3.0), 1e-9);
}

TEST(Cli, Similarity) {
  const CliRun same = run_cli({"similarity", data_path("demo.json"), "Alice likes Bob", "Alice likes Bob"});
  ASSERT_EQ(same.code, kOk) << same.err;
  EXPECT_NEAR(std::stod(same.out), 1.0, 1e-9);
  const CliRun overlap = run_cli({"similarity", "--kind", "overlap", data_path("demo.json"), "Alice likes Bob",
                               "Alice hates Bob"});
  ASSERT_EQ(overlap.code, kOk) << overlap.err;
  EXPECT_GE(std::stod(overlap.out), 0.0);
}

TEST(Cli, Disambiguate) {
  const CliRun r =
      run_cli({"--format", "json", "disambiguate", data_path("demo.json"), "queen", "who sings"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["before"].get<double>(), std::log2(3.0), 1e-9);
  EXPECT_NEAR(doc["after"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, NormalizeRoundTrips) {
  const CliRun r = run_cli({"--format", "json", "normalize", data_path("snake.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string again = temp_file("normal.json", r.out);
  EXPECT_EQ(run_cli({"--format", "json", "normalize", again}).out, r.out);
  const std::string broken = temp_file(
      "broken.json", R"({"types": {"n": true}, "nodes": [], "edges": [], "inputs": ["n"], "outputs": []})");
  EXPECT_EQ(run_cli({"normalize", broken}).code, kInputError);
}

TEST(Cli, TeleportTable) {
  const CliRun r = run_cli({"--seed", "1", "teleport", "--dim", "2", "--trials", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "branch\tfidelity\tprobability");
  EXPECT_NE(r.out.find("3\t1.000000000000\t0.250000000000"), std::string::npos) << r.out;
}

TEST(Cli, Rate) {
  const CliRun r = run_cli({"rate", data_path("resources.json"), "A", "B", "--nmax", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2/1 at n=1,m=2\n");
  const std::string grow = temp_file("grow.json", R"({"atoms": ["A", "B"], "rules": [{"from": ["A"], "to": ["A", "A"]}]})");
  EXPECT_EQ(run_cli({"rate", grow, "A", "B", "--nmax", "2", "--max-states", "10", "--max-steps", "50"}).code,
            kExhausted);
}

}  // namespace
}  // namespace anticart::cli
