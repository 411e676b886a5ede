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

#include "isotone/roughness.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "isotone/errors.h"
#include "test_util.h"

namespace isotone {
namespace {

constexpr Model kModels[] = {Model::kSethares1993, Model::kVassilakis2001,
                             Model::kSethares2005};

TEST(PairDissonanceTest, VanishesAtUnison) {
  for (Model m : kModels) {
    EXPECT_EQ(PairDissonance({300, 1}, {300, 1}, m), 0.0);
  }
}

TEST(PairDissonanceTest, VanishesWithSilentTone) {
  for (Model m : kModels) {
    EXPECT_EQ(PairDissonance({300, 1}, {400, 0}, m), 0.0);
    EXPECT_EQ(PairDissonance({300, 0}, {400, 0}, m), 0.0);
  }
}

TEST(PairDissonanceTest, MatchesOracle) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> freq(50, 3000);
  std::uniform_real_distribution<double> amp(0, 1);
  for (int i = 0; i < 500; ++i) {
    const double f1 = freq(rng), f2 = freq(rng), a1 = amp(rng), a2 = amp(rng);
    for (int m = 0; m < 3; ++m) {
      const double expected = testing::OraclePair(f1, a1, f2, a2, m);
      EXPECT_NEAR(PairDissonance({f1, a1}, {f2, a2}, kModels[m]), expected,
                  1e-14 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(PairDissonanceTest, SymmetricInArguments) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> freq(20, 5000);
  std::uniform_real_distribution<double> amp(0, 1);
  for (int i = 0; i < 200; ++i) {
    const ToneComponent a{freq(rng), amp(rng)};
    const ToneComponent b{freq(rng), amp(rng)};
    for (Model m : kModels) {
      EXPECT_EQ(PairDissonance(a, b, m), PairDissonance(b, a, m));
    }
  }
}

TEST(PairDissonanceTest, PeakAtStationaryPoint) {
  const RoughnessConstants c;
  const double expected = c.StationaryPoint() / c.BandScale(300.0);
  EXPECT_NEAR(c.StationaryPoint(), 0.2206, 5e-5);
  EXPECT_NEAR(expected, 23.1, 0.05);
  double best_df = 0.0;
  double best = -1.0;
  for (int k = 0; k <= 30000; ++k) {
    const double df = 0.01 * k;
    const double d =
        PairDissonance({300, 1}, {300 + df, 1}, Model::kSethares1993);
    if (d > best) best = d, best_df = df;
  }
  EXPECT_NEAR(best_df, expected, 0.01);
}

TEST(PairDissonanceTest, DecaysBeyondStationaryPoint) {
  const RoughnessConstants c;
  const double peak = c.StationaryPoint() / c.BandScale(300.0);
  double previous = PairDissonance({300, 1}, {300 + peak, 1},
                                   Model::kSethares1993);
  for (double df = peak + 0.5; df < 1000; df += 0.5) {
    const double d = PairDissonance({300, 1}, {300 + df, 1},
                                    Model::kSethares1993);
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(PairDissonanceTest, QuadraticInAmplitudeScale) {
  const double base = PairDissonance({300, 0.3}, {320, 0.5},
                                     Model::kSethares1993);
  EXPECT_NEAR(PairDissonance({300, 0.6}, {320, 1.0}, Model::kSethares1993),
              4.0 * base, 1e-15);
}

TEST(PairDissonanceTest, ModelsProportionalForEqualAmplitudes) {
  const double a = 0.7;
  const double ratio12 =
      PairDissonance({200, a}, {215, a}, Model::kSethares1993) /
      PairDissonance({200, a}, {215, a}, Model::kVassilakis2001);
  const double ratio13 =
      PairDissonance({200, a}, {215, a}, Model::kSethares1993) /
      PairDissonance({200, a}, {215, a}, Model::kSethares2005);
  for (double f = 60; f < 2000; f *= 1.37) {
    for (double df = 1; df < 200; df *= 1.9) {
      const double d1 = PairDissonance({f, a}, {f + df, a},
                                       Model::kSethares1993);
      EXPECT_NEAR(d1 / PairDissonance({f, a}, {f + df, a},
                                      Model::kVassilakis2001),
                  ratio12, 1e-9 * ratio12);
      EXPECT_NEAR(d1 / PairDissonance({f, a}, {f + df, a},
                                      Model::kSethares2005),
                  ratio13, 1e-9 * ratio13);
    }
  }
}

TEST(PairDissonanceTest, LowerRegisterIsRougher) {
  const RoughnessConstants c;
  EXPECT_GT(c.BandScale(100), c.BandScale(400));
  // Same ratio: the wider critical band in the upper register smooths it.
  EXPECT_GT(PairDissonance({200, 1}, {230, 1}, Model::kSethares1993),
            PairDissonance({800, 1}, {920, 1}, Model::kSethares1993));
}

TEST(PairDissonanceTest, RejectsBadTones) {
  EXPECT_THROW(PairDissonance({0, 1}, {300, 1}, Model::kSethares1993),
               InvalidInputError);
  EXPECT_THROW(PairDissonance({-5, 1}, {300, 1}, Model::kSethares1993),
               InvalidInputError);
  EXPECT_THROW(PairDissonance({NAN, 1}, {300, 1}, Model::kSethares1993),
               InvalidInputError);
  EXPECT_THROW(PairDissonance({300, -0.1}, {300, 1}, Model::kSethares1993),
               InvalidInputError);
}

TEST(LoudnessTest, NormalizedLaw) {
  EXPECT_EQ(LoudnessNormalized(1.0), 1.0);
  EXPECT_EQ(LoudnessNormalized(0.0), 0.0);
  EXPECT_NEAR(LoudnessNormalized(0.5), std::exp(0.6 * std::log(0.5)), 1e-15);
  EXPECT_NEAR(LoudnessNormalized(0.5), 0.6598, 5e-5);
  EXPECT_THROW(LoudnessNormalized(1.2), InvalidInputError);
  EXPECT_THROW(LoudnessNormalized(-0.1), InvalidInputError);
}

TEST(LoudnessTest, Sones) {
  const double p_ref_peak = std::sqrt(2.0) * 20e-6;
  EXPECT_NEAR(SoundPressureLevel(p_ref_peak), 0.0, 1e-12);
  EXPECT_NEAR(LoudnessSones(p_ref_peak), 1.0 / 16.0, 1e-15);
  const double at_40_db = p_ref_peak * 100.0;
  EXPECT_NEAR(SoundPressureLevel(at_40_db), 40.0, 1e-12);
  EXPECT_NEAR(LoudnessSones(at_40_db), 1.0, 1e-12);
  EXPECT_NEAR(LoudnessSones(at_40_db * std::sqrt(10.0)),
              2.0 * LoudnessSones(at_40_db), 1e-12);
  EXPECT_THROW(LoudnessSones(0.0), InvalidInputError);
}

TEST(ModelNameTest, RoundTrip) {
  for (Model m : kModels) EXPECT_EQ(ParseModel(ModelName(m)), m);
  EXPECT_EQ(ParseModel("Sethares2005"), Model::kSethares2005);
  EXPECT_THROW(ParseModel("plomp"), InvalidInputError);
}

}  // namespace
}  // namespace isotone
