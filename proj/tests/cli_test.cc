// Copyright 2023 The Authors.
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

#include "deltamat/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "deltamat/text_format.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace deltamat {
namespace {

using testing::GoldenPath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "deltamat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("deltamat_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(CliTest, Check) {
  CliRun r = Cli({"check", GoldenPath("example.dm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "delta-matroid: yes\nmatroid: no\n");
  r = Cli({"check", TempFile("empty_set.dm", "ground:\nfeasible:\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "delta-matroid: yes\nmatroid: yes\n");
  r = Cli({"-q", "check",
           TempFile("bad.dm", "ground: 1 2 3\nfeasible: 1\nfeasible: 2 3\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "delta-matroid: no\n");
}

TEST(CliTest, Profile) {
  const CliRun r = Cli({"profile", GoldenPath("example_s12_s34_s13.dm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "min_size: 1\nmax_size: 3\nparity: even\nloops: 1\n"
            "everywhere: 2\n");
}

TEST(CliTest, SlideReplaysGoldenChain) {
  const CliRun r = Cli({"slide", GoldenPath("example.dm"), "--trace",
                     GoldenPath("example.trace")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, testing::ReadGolden("example_s12_s34_s13.dm"));
}

TEST(CliTest, TwistDualMinor) {
  CliRun r = Cli({"twist", GoldenPath("example.dm"), "--set", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(ParseSetSystem(r.out),
            Twist(testing::PaperExample(), testing::Labels({1})));
  r = Cli({"dual", GoldenPath("example.dm")});
  EXPECT_EQ(ParseSetSystem(r.out), Dual(testing::PaperExample()));
  r = Cli({"minor", GoldenPath("example.dm"), "--contract", "1 2"});
  EXPECT_EQ(r.out, "ground: 3 4\nfeasible: 3\nfeasible: 4\n");
  r = Cli({"twist", GoldenPath("example.dm"), "--set", "9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unknown element: 9"), std::string::npos);
}

TEST(CliTest, Binary) {
  CliRun r = Cli({"binary", GoldenPath("example.dm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "binary: yes\nbase: 1\n" +
                       FormatMatrix(testing::ExampleAdjacency()));
  r = Cli({"binary", GoldenPath("u24.dm")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not binary\n");
}

TEST(CliTest, Canon) {
  const CliRun r = Cli({"canon", GoldenPath("example.dm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("canonical: i=1 j=1 k=0 l=1\n", 0), 0u);
  // The printed system re-parses and is itself canonical.
  const std::size_t ground = r.out.find("ground:");
  ASSERT_NE(ground, std::string::npos);
  const SetSystem reduced = ParseSetSystem(r.out.substr(ground));
  EXPECT_EQ(reduced.family().size(), 2u);
}

TEST(CliTest, Census) {
  CliRun r = Cli({"census", "-n", "2", "--dump"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta_matroids: 15"), std::string::npos);
  r = Cli({"-q", "census", "-n", "1"});
  EXPECT_EQ(r.out, "failures: 0\n");
  EXPECT_EQ(Cli({"census", "-n", "5"}).code, 2);
}

TEST(CliTest, FromGraph) {
  const CliRun r = Cli({"from-graph", GoldenPath("k4.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(ParseSetSystem(r.out).family().size(), 16u);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"check", "/nonexistent/file"}).code, 2);
  const CliRun r = Cli({"check", GoldenPath("malformed.dm")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

}  // namespace
}  // namespace deltamat
