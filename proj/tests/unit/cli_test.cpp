// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnpoly/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hnpoly::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = HNPOLY_TEST_DATA_DIR;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hnpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hnpoly_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeP1BundleMatchesExplicitHN) {
  RunResult bundle = invoke({"analyze", (kData / "p1_bundle.json").string()});
  RunResult hn = invoke({"analyze", (kData / "p1_equivalent_hn.json").string()});
  ASSERT_EQ(bundle.code, kExitOk) << bundle.err;
  EXPECT_EQ(bundle.out, hn.out);
  EXPECT_NE(bundle.out.find("slopes: 3,1\n"), std::string::npos);
  EXPECT_NE(bundle.out.find("ranks: 1,2\n"), std::string::npos);
}

TEST_F(CliTest, AnalyzeSingleBlock) {
  RunResult r = invoke({"analyze", (kData / "single_block.json").string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "length: 1\nslopes: 3/2\nranks: 5\ndegrees: 15/2\ntotal_rank: 5\n"
            "total_degree: 15/2\nprobabilities: 1\nmean: 3/2\nvariance: 0\n"
            "positive_degree: yes\n");
}

TEST_F(CliTest, AnalyzeFiltration) {
  RunResult r = invoke({"analyze", (kData / "filtration.json").string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("slopes: 1,0\nranks: 1,2\n"), std::string::npos);
}

TEST_F(CliTest, NegativeJumpIsWarned) {
  auto p = write("neg.json", R"({"filtration":{"jumps":["-1","2"],"step_dims":[3,1]}})");
  RunResult r = invoke({"analyze", p});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("# warning: filtration has a negative jump", 0), 0u);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  for (const char* bad : {
           "{not json",
           R"([1,2])",
           R"({})",
           R"({"hn":{"slopes":["1"],"ranks":[1]},"p1_bundle":{"degrees":[1],"mults":[1]}})",
           R"({"hn":{"slopes":["1"],"ranks":[1],"extra":1}})",
           R"({"vector_bundle":{}})",
           R"({"hn":{"slopes":[1],"ranks":[1]}})",
           R"({"hn":{"slopes":["1/0"],"ranks":[1]}})",
           R"({"hn":{"slopes":["1.5"],"ranks":[1]}})",
           R"({"hn":{"slopes":["1"],"ranks":[1.5]}})",
           R"({"hn":{"slopes":["1"]}})",
           R"({"p1_bundle":{"degrees":[1],"multiplicities":[1]}})",
       }) {
    auto p = write("bad.json", bad);
    RunResult r = invoke({"analyze", p});
    EXPECT_EQ(r.code, kExitParse) << bad << "\n" << r.err;
  }
}

TEST_F(CliTest, ValidationErrorsExitThree) {
  for (const char* bad : {
           R"({"hn":{"slopes":["-1","2"],"ranks":[1,1]}})",
           R"({"hn":{"slopes":["1"],"ranks":[0]}})",
           R"({"hn":{"slopes":["1","0"],"ranks":[1]}})",
           R"({"hn":{"slopes":[],"ranks":[]}})",
           R"({"filtration":{"jumps":["0","1"],"step_dims":[2,2]}})",
           R"({"p1_bundle":{"degrees":[3,1],"mults":[1,1]}})",
       }) {
    auto p = write("invalid.json", bad);
    RunResult r = invoke({"analyze", p});
    EXPECT_EQ(r.code, kExitValidation) << bad << "\n" << r.err;
  }
}

TEST_F(CliTest, MissingInputExitsFour) {
  EXPECT_EQ(invoke({"analyze", (dir_ / "nope.json").string()}).code, kExitIo);
  EXPECT_EQ(invoke({"polygon", (dir_ / "nope.json").string()}).code, kExitIo);
}

TEST_F(CliTest, PolygonCsvToStdout) {
  RunResult r = invoke({"polygon", (kData / "two_block.json").string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "R,D\n0,0\n1,2\n2,1\n\nr_i,d_i\n1,2\n1,-1\n");
}

TEST_F(CliTest, PolygonWritesFilesDeterministically) {
  auto svg1 = (dir_ / "a.svg").string(), svg2 = (dir_ / "b.svg").string();
  auto csv = (dir_ / "p.csv").string();
  RunResult a = invoke({"polygon", (kData / "two_block.json").string(), "--svg", svg1,
                        "--csv", csv});
  RunResult b = invoke({"polygon", (kData / "two_block.json").string(), "--svg", svg2});
  ASSERT_EQ(a.code, kExitOk);
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_TRUE(a.out.empty());
  EXPECT_EQ(slurp(csv), b.out);
  EXPECT_EQ(slurp(svg1), slurp(svg2));
  EXPECT_EQ(slurp(svg1).rfind("<?xml", 0), 0u);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp."), std::string::npos);
  }
}

TEST_F(CliTest, UnwritableOutputExitsFourWithoutPartialFile) {
  auto target = (dir_ / "missing_dir" / "out.svg").string();
  RunResult r = invoke({"polygon", (kData / "two_block.json").string(), "--svg", target});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_FALSE(fs::exists(target));
}

TEST_F(CliTest, ProbTable) {
  RunResult r = invoke({"prob", (kData / "two_block.json").string(), "--z", "0",
                        "--m-list", "2,16"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row2, row16;
  std::getline(lines, header);
  std::getline(lines, row2);
  std::getline(lines, row16);
  EXPECT_EQ(header,
            "m,exact_tail,exact_tail_decimal,clt_approx,chebyshev_bound,abs_error_clt");
  EXPECT_EQ(row2.rfind("2,3/4,0.75000000000000000000,", 0), 0u) << row2;
  EXPECT_EQ(row16.rfind("16,58651/65536,0.89494323730468750000,", 0), 0u) << row16;
}

TEST_F(CliTest, ProbSingleBlockMarksApproximationsNA) {
  RunResult r = invoke({"prob", (kData / "single_block.json").string(), "--m-list", "1,8"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\n1,1,1.0000000000000000000,n/a,n/a,n/a\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n8,1,1.0000000000000000000,n/a,n/a,n/a\n"), std::string::npos);
}

TEST_F(CliTest, ProbNegativeDegreeWarns) {
  RunResult r = invoke({"prob", (kData / "negative_degree.json").string(), "--m-list", "64"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("# warning: data does not have positive degree", 0), 0u);
  EXPECT_NE(r.out.find("\n64,75141910203168229/18446744073709551616,"), std::string::npos);
}

TEST_F(CliTest, ProbMonteCarloIsSeeded) {
  std::vector<std::string> args{"prob", (kData / "two_block.json").string(),
                                "--m-list", "8,32", "--mc", "2000", "--seed", "5"};
  RunResult a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(",mc_estimate\n"), std::string::npos);
}

TEST_F(CliTest, GridOverflowExitsFive) {
  auto csv = (dir_ / "prob.csv").string();
  RunResult r = invoke({"prob", (kData / "two_block.json").string(), "--m-list", "10,100",
                        "--grid-bound", "50", "--csv", csv});
  EXPECT_EQ(r.code, kExitRange);
  EXPECT_FALSE(fs::exists(csv));
  EXPECT_EQ(invoke({"tensor", (kData / "two_block.json").string(), "--m-list", "100",
                    "--grid-bound", "50"}).code,
            kExitRange);
}

TEST_F(CliTest, BadFlagValuesExitTwo) {
  auto in = (kData / "two_block.json").string();
  EXPECT_EQ(invoke({"prob", in, "--m-list", "0"}).code, kExitParse);
  EXPECT_EQ(invoke({"prob", in, "--m-list", "4,,8"}).code, kExitParse);
  EXPECT_EQ(invoke({"prob", in, "--m-list", "4", "--z", "x"}).code, kExitParse);
  EXPECT_EQ(invoke({"prob", in, "--m-list", "4", "--grid-bound", "-3"}).code, kExitParse);
}

TEST_F(CliTest, TensorTable) {
  RunResult r = invoke({"tensor", (kData / "two_block.json").string(), "--z", "0",
                        "--m-list", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "m,card_S,dim_H,dim_total,ratio,ratio_decimal,consistency\n"
            "2,3,3,4,3/4,0.75000000000000000000,ok\n");
  RunResult one = invoke({"tensor", (kData / "single_block.json").string(),
                          "--m-list", "1,3"});
  EXPECT_NE(one.out.find("\n3,1,125,125,1,"), std::string::npos);
}

TEST(ResolveGridBoundTest, FlagWinsOverEnvironment) {
  EXPECT_EQ(resolve_grid_bound(std::nullopt, nullptr), 10'000'000u);
  EXPECT_EQ(resolve_grid_bound(std::nullopt, ""), 10'000'000u);
  EXPECT_EQ(resolve_grid_bound(std::nullopt, "500"), 500u);
  EXPECT_EQ(resolve_grid_bound(std::string("70"), "500"), 70u);
  EXPECT_THROW(resolve_grid_bound(std::nullopt, "lots"), ParseError);
}

TEST(ParseMListTest, Values) {
  EXPECT_EQ(parse_m_list("16,64,256"), (std::vector<std::uint64_t>{16, 64, 256}));
  EXPECT_EQ(parse_m_list("3"), std::vector<std::uint64_t>{3});
  EXPECT_THROW(parse_m_list(""), ParseError);
  EXPECT_THROW(parse_m_list("1,"), ParseError);
  EXPECT_THROW(parse_m_list("1, 2"), ParseError);
}

}  // namespace
}  // namespace hnpoly::cli
