// Copyright 2026 The Isotone Authors. All Rights Reserved.
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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isotone/ingest.h"
#include "isotone/wav.h"
#include "test_util.h"

namespace isotone::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("isotone_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"curve", "--alpha", "2:1:0.1"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"curve", "--model", "nope"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cents"}).code, kExitUsage);
}

TEST_F(CliTest, MissingFileIsDataError) {
  const Result r = RunCli({"fit-scale", (dir_ / "absent.csv").string()});
  EXPECT_EQ(r.code, kExitDataError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, CentsToRatio) {
  const Result r = RunCli({"cents", "--cents", "1200"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "cents,ratio\n1200,2\n");
}

TEST_F(CliTest, CurveBarMinima) {
  const Result r = RunCli({"curve", "bar", "--base-hz", "300", "--alpha",
                           "1.0:1.6:0.001", "-o", dir_.string(), "--round",
                           "2", "--svg"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "curve.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "curve.svg"));
  const std::string extrema = Slurp(dir_ / "extrema.csv");
  EXPECT_NE(extrema.find("minimum,1.26"), std::string::npos) << extrema;
  EXPECT_NE(extrema.find("minimum,1.40"), std::string::npos) << extrema;
  EXPECT_NE(extrema.find("minimum,1.49"), std::string::npos) << extrema;
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> args = {"family", "experimental", "--bases",
                                         "332.8,366,402.6", "-o",
                                         dir_.string()};
  ASSERT_EQ(RunCli(args).code, kExitOk);
  const std::string first = Slurp(dir_ / "steps.csv");
  ASSERT_EQ(RunCli(args).code, kExitOk);
  EXPECT_EQ(Slurp(dir_ / "steps.csv"), first);
  EXPECT_TRUE(fs::exists(dir_ / "family_2.csv"));
}

TEST_F(CliTest, FitScaleFromCents) {
  const fs::path cents = testing::TestDataDir() / "survey_marimba_1_cents.csv";
  ASSERT_EQ(RunCli({"cents", "--deviations", cents.string(), "--id", "m1",
                    "-o", dir_.string()})
                .code,
            kExitOk);
  const Result r = RunCli({"fit-scale", (dir_ / "m1.csv").string(), "-o",
                           dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("m1: p=7"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "scale.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "scale_summary.csv"));
}

TEST_F(CliTest, IntervalsAndScheme) {
  const fs::path manifest = testing::TestDataDir() / "corpus" / "manifest.csv";
  ASSERT_EQ(RunCli({"intervals", manifest.string(), "-o", dir_.string()}).code,
            kExitOk);
  EXPECT_EQ(Slurp(dir_ / "intervals.csv").substr(0, 19),
            "size,piece_1,piece_");
  const Result r = RunCli({"scheme", "--scale", "pentatonic", "--derive", "-o",
                           dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("ABSXABX 4"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "scheme_pentatonic.csv"));
}

TEST_F(CliTest, AnalyzeWav) {
  fs::create_directories(dir_);
  const fs::path wav = dir_ / "bar_a.wav";
  WriteWavFile(RenderSpectrum(ExperimentalSpectrum(), 366), wav);
  const Result r = RunCli({"analyze", wav.string(), "-o", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "bar_a_spectrum.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "histogram.csv"));
}

}  // namespace
}  // namespace isotone::cli
