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

#ifndef ISOTONE_ROUGHNESS_H_
#define ISOTONE_ROUGHNESS_H_

#include <string>
#include <string_view>

namespace isotone {

// A pure tone: frequency in Hz and a normalized linear amplitude.
struct ToneComponent {
  double frequency = 0.0;
  double amplitude = 0.0;
};

// Constants of the Plomp-Levelt parameterization. The critical-band scale is
// s(f) = s_num / (s_c1 * f + s_c2), evaluated at the lower frequency of a pair.
struct RoughnessConstants {
  double b1 = 3.5;
  double b2 = 5.75;
  double s_num = 0.24;
  double s_c1 = 0.0207;
  double s_c2 = 18.96;

  // Scaled frequency difference x = s * delta_f at which
  // exp(-b1 x) - exp(-b2 x) peaks.
  double StationaryPoint() const;
  double BandScale(double lower_frequency) const;
};

enum class Model {
  kSethares1993,    // weight a_max * a_min
  kVassilakis2001,  // weight 0.5 (a_max a_min)^0.1 (2 a_min / (a_min + a_max))^3.11
  kSethares2005,    // weight l_min, Stevens-law loudness of the quieter tone
};

std::string_view ModelName(Model model);
// Accepts the names produced by ModelName (case-insensitive).
Model ParseModel(std::string_view name);

struct LoudnessParams {
  double reference_pressure = 20e-6;  // Pa
  double stevens_exponent = 0.60;
};

// Sensory dissonance of two simultaneous pure tones. Symmetric in argument
// order; zero at unison and whenever either amplitude is zero. Throws
// InvalidInputError for non-finite or non-positive frequencies and for
// negative or non-finite amplitudes.
double PairDissonance(const ToneComponent& t1, const ToneComponent& t2,
                      Model model, const RoughnessConstants& constants = {});

// (a_norm)^exponent; input must lie in [0, 1].
double LoudnessNormalized(double amplitude_norm,
                          const LoudnessParams& params = {});

// Sound pressure level in dB of a sinusoid with peak amplitude `amplitude`
// (Pa), using the RMS pressure a / sqrt(2).
double SoundPressureLevel(double amplitude, const LoudnessParams& params = {});

// Loudness in sones, (1/16) 2^(SPL/10). Amplitude must be > 0.
double LoudnessSones(double amplitude, const LoudnessParams& params = {});

}  // namespace isotone

#endif  // ISOTONE_ROUGHNESS_H_
