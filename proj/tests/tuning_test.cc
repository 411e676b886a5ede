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

#include "isotone/tuning.h"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "isotone/errors.h"
#include "test_util.h"

namespace isotone {
namespace {

TuningRecord Geometric(double f0, double step_ratio, int bars) {
  TuningRecord r;
  r.id = "geo";
  for (int i = 0; i < bars; ++i) r.fundamentals.push_back(f0 * std::pow(step_ratio, i));
  return r;
}

TEST(RatioTableTest, ExactGeometricSequence) {
  const auto table = RatioTable(Geometric(300, std::exp2(1.0 / 7), 15), 7);
  ASSERT_EQ(table.size(), 7u);
  for (const RatioStats& row : table) {
    const double expected = std::exp2(row.distance / 7.0);
    EXPECT_EQ(row.count, 15u - row.distance);
    EXPECT_NEAR(row.avg, expected, 1e-12);
    EXPECT_NEAR(row.min, expected, 1e-12);
    EXPECT_NEAR(row.max, expected, 1e-12);
    EXPECT_NEAR(row.geometric_mean, expected, 1e-12);
    EXPECT_NEAR(row.sigma, 0.0, 1e-12);
  }
  EXPECT_NEAR(table[0].avg, 1.1041, 1e-4);
  EXPECT_NEAR(table[6].avg, 2.0, 1e-12);
}

TEST(RatioTableTest, MissingBarsDropPairs) {
  TuningRecord r;
  r.id = "gaps";
  r.fundamentals = {100.0, std::nullopt, 120.0, 150.0};
  const auto table = RatioTable(r, 5);
  // distance 1: (120,150); distance 2: (100,120); distance 3: (100,150).
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].count, 1u);
  EXPECT_DOUBLE_EQ(table[0].avg, 1.25);
  EXPECT_DOUBLE_EQ(table[1].avg, 1.2);
  EXPECT_DOUBLE_EQ(table[2].avg, 1.5);
}

TEST(RatioTableTest, PopulationSigma) {
  TuningRecord r;
  r.id = "s";
  r.fundamentals = {100.0, 110.0, 132.0};
  const auto table = RatioTable(r, 1);
  EXPECT_DOUBLE_EQ(table[0].avg, 1.15);
  EXPECT_NEAR(table[0].sigma, 0.05, 1e-12);
  EXPECT_NEAR(table[0].geometric_mean, std::sqrt(1.1 * 1.2), 1e-12);
}

TEST(RatioTableTest, Errors) {
  TuningRecord r;
  r.id = "one";
  r.fundamentals = {100.0, std::nullopt};
  EXPECT_THROW(RatioTable(r, 3), InvalidInputError);
  r.fundamentals = {100.0, -5.0};
  EXPECT_THROW(RatioTable(r, 3), InvalidInputError);
  EXPECT_THROW(RatioTable(Geometric(100, 1.1, 5), 0), InvalidInputError);
}

TEST(FitIsotonicTest, ExactOctatonic) {
  const IsotonicScale s = FitIsotonic(Geometric(200, std::exp2(1.0 / 8), 20));
  EXPECT_EQ(s.period_steps, 8);
  EXPECT_NEAR(s.period_ratio, 2.0, 1e-12);
  EXPECT_NEAR(s.max_relative_error, 0.0, 1e-12);
  EXPECT_NEAR(s.PredictedRatio(4), std::sqrt(2.0), 1e-12);
}

TEST(FitIsotonicTest, RecoversPeriodUnderNoise) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> noise(-0.005, 0.005);
  for (int p : {7, 8, 9}) {
    for (int trial = 0; trial < 20; ++trial) {
      TuningRecord r;
      r.id = "noisy";
      for (int i = 0; i < 22; ++i) {
        r.fundamentals.push_back(250 * std::exp2(double(i) / p) *
                                 (1 + noise(rng)));
      }
      const IsotonicScale s = FitIsotonic(r);
      EXPECT_EQ(s.period_steps, p);
      EXPECT_NEAR(s.period_ratio, 2.0, 0.02);
    }
  }
}

TEST(FitIsotonicTest, TieGoesToSmallerPeriod) {
  std::vector<RatioStats> table;
  for (int d = 1; d <= 8; ++d) {
    RatioStats row;
    row.distance = d;
    row.count = 1;
    row.avg = row.min = row.max = row.geometric_mean =
        d == 7 ? 1.98 : d == 8 ? 2.02 : 1.0 + 0.1 * d;
    table.push_back(row);
  }
  EXPECT_EQ(FitIsotonic(table).period_steps, 7);
}

TEST(FitIsotonicTest, CandidatesWithoutData) {
  auto table = RatioTable(Geometric(100, 1.1, 5), 4);
  EXPECT_THROW(FitIsotonic(table), InvalidInputError);
  const int far[] = {30};
  EXPECT_THROW(FitIsotonic(Geometric(100, 1.1, 20), far), InvalidInputError);
  const int zero[] = {0};
  EXPECT_THROW(FitIsotonic(Geometric(100, 1.1, 20), zero), InvalidInputError);
}

TEST(FitIsotonicTest, GeometricEstimator) {
  TuningRecord r;
  r.id = "g";
  for (int i = 0; i < 16; ++i) {
    r.fundamentals.push_back(300 * std::exp2(i / 7.0) * (i % 2 ? 1.01 : 0.99));
  }
  const IsotonicScale a = FitIsotonic(r, kDefaultPeriods,
                                      PeriodEstimator::kArithmeticMean);
  const IsotonicScale g = FitIsotonic(r, kDefaultPeriods,
                                      PeriodEstimator::kGeometricMean);
  EXPECT_LT(g.period_ratio, a.period_ratio);
}

TEST(FitIsotonicTest, PublishedMarimbaTwo) {
  const auto tables = testing::LoadRatioTables();
  const IsotonicScale s = FitIsotonic(tables.at({"field", "2"}));
  EXPECT_EQ(s.period_steps, 7);
  EXPECT_NEAR(s.period_ratio, 2.01, 1e-12);
  EXPECT_NEAR(s.PredictedRatio(1), 1.10, 0.005);
}

TEST(FitIsotonicTest, PublishedMarimbaEleven) {
  const auto tables = testing::LoadRatioTables();
  const IsotonicScale s = FitIsotonic(tables.at({"field", "11"}));
  EXPECT_EQ(s.period_steps, 9);
  EXPECT_NEAR(s.period_ratio, 1.99, 1e-12);
  EXPECT_NEAR(s.PredictedRatio(5), 1.47, 0.005);
}

TEST(CentsTest, Inverses) {
  EXPECT_EQ(CentsToRatio(0), 1.0);
  EXPECT_NEAR(CentsToRatio(1200), 2.0, 1e-12);
  EXPECT_NEAR(CentsToRatio(100), 1.059463, 1e-6);
  for (double e = -2400; e <= 2400; e += 0.37) {
    EXPECT_NEAR(RatioToCents(CentsToRatio(e)), e, 1e-12 * std::max(1.0, std::abs(e)));
    const double r = CentsToRatio(e);
    EXPECT_NEAR(CentsToRatio(RatioToCents(r)), r, 1e-12 * r);
  }
  EXPECT_THROW(RatioToCents(0), InvalidInputError);
}

TEST(CentsTest, ReconstructFrequency) {
  EXPECT_EQ(ReconstructFrequency(440, 0), 440.0);
  EXPECT_NEAR(ReconstructFrequency(440, 1200), 880.0, 1e-12);
  EXPECT_NEAR(ReconstructFrequency(440, -50), 427.47, 0.005);
  EXPECT_NEAR(ReconstructFrequency(440, -50), 440 * CentsToRatio(-50), 1e-12);
  EXPECT_THROW(ReconstructFrequency(0, 10), InvalidInputError);
}

TEST(SemitoneSizeTest, Rounding) {
  EXPECT_EQ(SemitoneSize(2.0), 12);
  EXPECT_EQ(SemitoneSize(1.0), 0);
  EXPECT_EQ(SemitoneSize(1.22), 3);
  EXPECT_EQ(SemitoneSize(std::exp2(2.501 / 12)), 3);
  EXPECT_EQ(SemitoneSize(std::exp2(-2.501 / 12)), -3);
  EXPECT_EQ(SemitoneSize(std::exp2(2.499 / 12)), 2);
  for (double r = 1.01; r < 4; r *= 1.0137) {
    EXPECT_EQ(SemitoneSize(1 / r), -SemitoneSize(r));
  }
  EXPECT_THROW(SemitoneSize(-1), InvalidInputError);
}

TEST(NoteFrequencyTest, Names) {
  EXPECT_DOUBLE_EQ(NoteFrequency("A4"), 440.0);
  EXPECT_NEAR(NoteFrequency("C4"), 261.6256, 1e-4);
  EXPECT_NEAR(NoteFrequency("A#4"), NoteFrequency("Bb4"), 1e-12);
  EXPECT_NEAR(NoteFrequency("C#5"), 554.3653, 1e-4);
  EXPECT_NEAR(NoteFrequency("F##2"), NoteFrequency("G2"), 1e-12);
  EXPECT_NEAR(NoteFrequency("A3", 432), 216.0, 1e-12);
  EXPECT_THROW(NoteFrequency("H4"), InvalidInputError);
  EXPECT_THROW(NoteFrequency("C"), InvalidInputError);
  EXPECT_THROW(NoteFrequency(""), InvalidInputError);
}

TEST(TuningRecordIoTest, RoundTrip) {
  TuningRecord r;
  r.id = "m7";
  r.maker = "Some Maker";
  r.place = "Coast";
  r.kind = TuningKind::kTempered;
  r.fundamentals = {220.5, std::nullopt, 271.25, 301.0};
  std::stringstream buf;
  WriteTuningRecord(r, buf);
  const TuningRecord back = ReadTuningRecord(buf);
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.maker, r.maker);
  EXPECT_EQ(back.place, r.place);
  EXPECT_EQ(back.kind, r.kind);
  EXPECT_EQ(back.fundamentals, r.fundamentals);
}

TEST(TuningRecordIoTest, Malformed) {
  std::istringstream no_header("1,220\n");
  EXPECT_THROW(ReadTuningRecord(no_header), InvalidInputError);
  std::istringstream skipped(
      "id,maker,place,kind\nx,,,traditional\n1,220\n3,250\n");
  EXPECT_THROW(ReadTuningRecord(skipped), InvalidInputError);
  std::istringstream bad_freq(
      "id,maker,place,kind\nx,,,traditional\n1,220\n2,abc\n");
  EXPECT_THROW(ReadTuningRecord(bad_freq), InvalidInputError);
}

TEST(CentsDeviationTest, MarimbaOneFixture) {
  std::ifstream in(testing::TestDataDir() / "survey_marimba_1_cents.csv");
  ASSERT_TRUE(in);
  const auto devs = ReadCentsDeviations(in);
  ASSERT_EQ(devs.size(), 22u);
  EXPECT_EQ(devs[9].note, "*");
  const TuningRecord r = ReconstructRecord(devs, "survey_1");
  EXPECT_EQ(r.PresentCount(), 21u);
  EXPECT_FALSE(r.fundamentals[9].has_value());
  EXPECT_NEAR(*r.fundamentals[0], NoteFrequency("C3") * CentsToRatio(-11),
              1e-9);
  const auto table = RatioTable(r, 7);
  ASSERT_EQ(table.size(), 7u);
  EXPECT_NEAR(table[6].avg, 1.98, 0.005);
  const auto published = testing::LoadRatioTables().at({"survey", "1"});
  for (std::size_t s = 0; s < 7; ++s) {
    EXPECT_NEAR(table[s].avg, published[s].avg, 0.005) << "distance " << s + 1;
  }
}

TEST(RatioTableCsvTest, Header) {
  std::ostringstream out;
  WriteRatioTableCsv(RatioTable(Geometric(100, 2, 3), 1), out);
  EXPECT_EQ(out.str(),
            "distance,count,min,max,avg,sigma,geometric_mean\n"
            "1,2,2,2,2,0,2\n");
}

}  // namespace
}  // namespace isotone
