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

#ifndef ISOTONE_CURVES_H_
#define ISOTONE_CURVES_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "isotone/roughness.h"
#include "isotone/timbre.h"
#include "isotone/tuning.h"

namespace isotone {

// Uniform grid of frequency ratios. Sample i is lo + i * step; the grid ends
// at the last sample not exceeding hi (within a 1e-9 step tolerance).
struct AlphaGrid {
  double lo = 1.0;
  double hi = 2.3;
  double step = 0.001;

  std::size_t size() const;
  double at(std::size_t i) const { return lo + static_cast<double>(i) * step; }

  // Throws InvalidInputError unless 1 <= lo < hi and step > 0.
  void Validate() const;

  // "lo:hi:step".
  static AlphaGrid Parse(std::string_view text);
};

struct DissonanceCurve {
  double base_frequency = 0.0;
  Model model = Model::kSethares1993;
  std::vector<double> alpha;
  std::vector<double> values;      // raw D_F(alpha)
  std::vector<double> normalized;  // values / normalization
  double normalization = 1.0;

  // Builds a curve from arbitrary samples, normalized by their maximum (or
  // left unscaled when the maximum is not positive).
  static DissonanceCurve FromSamples(std::vector<double> alpha,
                                     std::vector<double> values,
                                     double base_frequency = 0.0,
                                     Model model = Model::kSethares1993);
};

enum class ExtremumKind { kMinimum, kMaximum };

struct Extremum {
  double alpha = 0.0;  // refined by a parabola through the bracketing samples
  double value = 0.0;  // normalized dissonance at the refined position
  ExtremumKind kind = ExtremumKind::kMinimum;
  // Alpha-span over which the curve stays within 10% of the prominence of the
  // extremum value; larger means broader.
  double width = 0.0;
  double prominence = 0.0;
  std::size_t index = 0;  // grid sample (plateau midpoint)
};

struct SlopeSample {
  double alpha = 0.0;
  double slope = 0.0;
};

struct StepDissonance {
  int step = 0;
  double alpha = 0.0;
  double raw = 0.0;
  double normalized = 0.0;
};

inline constexpr double kDefaultProminence = 0.005;

// Total dissonance of one complex tone whose partials sit at
// base_frequency * ratio; sum of PairDissonance over unordered partial pairs.
double IntrinsicDissonance(const Spectrum& spectrum, double base_frequency,
                           Model model);

// Two copies of the same timbre at base_frequency and alpha * base_frequency:
// both intrinsic terms plus every cross pair (i, j), coincident ones included.
double TwoToneDissonance(const Spectrum& spectrum, double base_frequency,
                         double alpha, Model model);

DissonanceCurve SampleCurve(const Spectrum& spectrum, double base_frequency,
                            const AlphaGrid& grid, Model model);

// Interior local extrema of the normalized curve whose prominence is at least
// `min_prominence`, sorted by alpha. Plateaus report their midpoint.
std::vector<Extremum> FindExtrema(const DissonanceCurve& curve,
                                  double min_prominence = kDefaultProminence);

// dD/dalpha of the normalized values: central differences inside, one-sided
// at the two ends. Requires at least 3 samples.
std::vector<SlopeSample> CurveDerivative(const DissonanceCurve& curve);

// One curve per base frequency, all normalized by the family-wide maximum.
std::vector<DissonanceCurve> CurveFamily(const Spectrum& spectrum,
                                         std::span<const double> bases,
                                         const AlphaGrid& grid, Model model);

// Dissonance at the ratios r_p^(s/p) of an isotonic scale. `normalization`
// <= 0 means: divide by the maximum of the curve over the default AlphaGrid
// at the same base.
std::vector<StepDissonance> DissonanceAtSteps(const Spectrum& spectrum,
                                              double base_frequency,
                                              const IsotonicScale& scale,
                                              std::span<const int> steps,
                                              Model model,
                                              double normalization = 0.0);

std::string_view ExtremumKindName(ExtremumKind kind);

// CSV writers. decimals < 0 keeps full round-trip precision.
void WriteCurveCsv(const DissonanceCurve& curve, std::ostream& out,
                   int decimals = -1);
void WriteExtremaCsv(std::span<const Extremum> extrema, std::ostream& out,
                     int decimals = -1);
void WriteDerivativeCsv(std::span<const SlopeSample> slope, std::ostream& out,
                        int decimals = -1);

}  // namespace isotone

#endif  // ISOTONE_CURVES_H_
