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

#ifndef ISOTONE_TIMBRE_H_
#define ISOTONE_TIMBRE_H_

#include <istream>
#include <ostream>
#include <span>
#include <vector>

namespace isotone {

// One spectral component, relative to the fundamental.
struct Partial {
  double ratio = 1.0;      // frequency / fundamental frequency
  double amplitude = 1.0;  // normalized, in [0, 1]

  bool operator==(const Partial&) const = default;
};

// A register-independent timbre: partial ratios and normalized amplitudes.
// Invariants (checked on construction): the first ratio is exactly 1, ratios
// strictly increase, amplitudes lie in [0, 1] and at least one equals 1.
class Spectrum {
 public:
  // Validates `partials` as given; throws InvalidInputError on violation.
  explicit Spectrum(std::vector<Partial> partials);

  // Scales amplitudes so the largest is 1 before validating.
  static Spectrum Normalized(std::vector<Partial> partials);

  std::span<const Partial> partials() const { return partials_; }
  std::size_t size() const { return partials_.size(); }
  const Partial& operator[](std::size_t i) const { return partials_[i]; }

  // Same ratios, every amplitude set to 1.
  Spectrum WithEqualAmplitudes() const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<Partial> partials_;
};

enum class AmplitudeModel {
  kEqual,
  // A_n = 0.16 exp(-(n - 2.758) / 5) for overtone ratio n; fundamental at 1.
  kExponential,
};

// Free-free bar transverse modes.
inline constexpr double kBarOvertoneRatios[] = {2.758, 5.406, 8.936, 13.350,
                                                18.645};

double ExponentialOvertoneAmplitude(double ratio);

// Fundamental plus the first `num_overtones` (1..5) bar modes.
Spectrum BarSpectrum(int num_overtones, bool equal_amplitudes = true);

// Ratios 1, 2, ..., num_partials.
Spectrum HarmonicSpectrum(int num_partials, bool equal_amplitudes = true);

// Bar modes merged with the odd harmonics 3..17 of a closed pipe tuned to the
// same fundamental: 14 partials in all.
Spectrum BarResonatorSpectrum(AmplitudeModel amplitudes);

// The representative measured timbre: ratios {1, 2.758, 5.0, 5.406} with
// amplitudes {1, 0.16, 0.13, 0.06}, or all ones.
Spectrum ExperimentalSpectrum(bool equal_amplitudes = false);

// Two-column text, "ratio amplitude" per line (comma or blank separated,
// '#' comments allowed). Amplitudes are normalized on read.
Spectrum ReadSpectrum(std::istream& in);
void WriteSpectrum(const Spectrum& spectrum, std::ostream& out);

}  // namespace isotone

#endif  // ISOTONE_TIMBRE_H_
