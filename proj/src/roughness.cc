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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "isotone/errors.h"

namespace isotone {

namespace {

constexpr double kVassilakisScale = 0.5;
constexpr double kVassilakisIntensityExponent = 0.1;
constexpr double kVassilakisDegreeExponent = 3.11;

void CheckTone(const ToneComponent& tone) {
  if (!std::isfinite(tone.frequency) || tone.frequency <= 0.0) {
    throw InvalidInputError("tone frequency must be finite and > 0, got " +
                            std::to_string(tone.frequency));
  }
  if (!std::isfinite(tone.amplitude) || tone.amplitude < 0.0) {
    throw InvalidInputError("tone amplitude must be finite and >= 0, got " +
                            std::to_string(tone.amplitude));
  }
}

double Weight(double a_min, double a_max, Model model) {
  switch (model) {
    case Model::kSethares1993:
      return a_max * a_min;
    case Model::kVassilakis2001: {
      // 0/0 at a_min = a_max = 0 is taken as its limit, 0.
      if (a_min + a_max == 0.0) return 0.0;
      const double degree = 2.0 * a_min / (a_min + a_max);
      return kVassilakisScale *
             std::pow(a_max * a_min, kVassilakisIntensityExponent) *
             std::pow(degree, kVassilakisDegreeExponent);
    }
    case Model::kSethares2005:
      return std::pow(a_min, LoudnessParams{}.stevens_exponent);
  }
  return 0.0;
}

}  // namespace

double RoughnessConstants::StationaryPoint() const {
  return std::log(b2 / b1) / (b2 - b1);
}

double RoughnessConstants::BandScale(double lower_frequency) const {
  return s_num / (s_c1 * lower_frequency + s_c2);
}

std::string_view ModelName(Model model) {
  switch (model) {
    case Model::kSethares1993:
      return "sethares1993";
    case Model::kVassilakis2001:
      return "vassilakis2001";
    case Model::kSethares2005:
      return "sethares2005";
  }
  return "unknown";
}

Model ParseModel(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Model m : {Model::kSethares1993, Model::kVassilakis2001,
                  Model::kSethares2005}) {
    if (lower == ModelName(m)) return m;
  }
  throw InvalidInputError("unknown dissonance model '" + std::string(name) +
                          "'");
}

double PairDissonance(const ToneComponent& t1, const ToneComponent& t2,
                      Model model, const RoughnessConstants& constants) {
  CheckTone(t1);
  CheckTone(t2);
  const double f_min = std::min(t1.frequency, t2.frequency);
  const double f_max = std::max(t1.frequency, t2.frequency);
  const double a_min = std::min(t1.amplitude, t2.amplitude);
  const double a_max = std::max(t1.amplitude, t2.amplitude);

  const double x = constants.BandScale(f_min) * (f_max - f_min);
  const double bracket =
      std::exp(-constants.b1 * x) - std::exp(-constants.b2 * x);
  return Weight(a_min, a_max, model) * bracket;
}

double LoudnessNormalized(double amplitude_norm, const LoudnessParams& params) {
  if (!(amplitude_norm >= 0.0 && amplitude_norm <= 1.0)) {
    throw InvalidInputError("normalized amplitude must lie in [0, 1], got " +
                            std::to_string(amplitude_norm));
  }
  return std::pow(amplitude_norm, params.stevens_exponent);
}

double SoundPressureLevel(double amplitude, const LoudnessParams& params) {
  if (!std::isfinite(amplitude) || amplitude <= 0.0) {
    throw InvalidInputError("amplitude must be finite and > 0");
  }
  const double rms_pressure = amplitude / std::sqrt(2.0);
  return 20.0 * std::log10(rms_pressure / params.reference_pressure);
}

double LoudnessSones(double amplitude, const LoudnessParams& params) {
  return std::exp2(SoundPressureLevel(amplitude, params) / 10.0) / 16.0;
}

}  // namespace isotone
