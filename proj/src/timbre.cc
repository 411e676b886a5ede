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

#include "isotone/timbre.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "isotone/errors.h"
#include "isotone/text_io.h"

namespace isotone {

namespace {

constexpr double kFirstOvertoneAmplitude = 0.16;
constexpr double kFirstOvertoneRatio = 2.758;
constexpr double kDecayRatioScale = 5.0;

constexpr double kPipeOddHarmonics[] = {3, 5, 7, 9, 11, 13, 15, 17};

constexpr Partial kExperimentalPartials[] = {
    {1.0, 1.0}, {2.758, 0.16}, {5.000, 0.13}, {5.406, 0.06}};

Spectrum FromOvertones(const std::vector<double>& overtones,
                       bool equal_amplitudes) {
  std::vector<Partial> partials;
  partials.reserve(overtones.size() + 1);
  partials.push_back({1.0, 1.0});
  for (double n : overtones) {
    partials.push_back(
        {n, equal_amplitudes ? 1.0 : ExponentialOvertoneAmplitude(n)});
  }
  return Spectrum(std::move(partials));
}

}  // namespace

Spectrum::Spectrum(std::vector<Partial> partials)
    : partials_(std::move(partials)) {
  if (partials_.empty()) throw InvalidInputError("spectrum has no partials");
  if (partials_.front().ratio != 1.0) {
    throw InvalidInputError("first partial must have ratio 1");
  }
  double max_amplitude = 0.0;
  for (std::size_t i = 0; i < partials_.size(); ++i) {
    const Partial& p = partials_[i];
    if (!std::isfinite(p.ratio) || p.ratio < 1.0) {
      throw InvalidInputError("partial ratios must be finite and >= 1");
    }
    if (i > 0 && !(p.ratio > partials_[i - 1].ratio)) {
      throw InvalidInputError("partial ratios must strictly increase");
    }
    if (!(p.amplitude >= 0.0 && p.amplitude <= 1.0)) {
      throw InvalidInputError("partial amplitudes must lie in [0, 1]");
    }
    max_amplitude = std::max(max_amplitude, p.amplitude);
  }
  if (max_amplitude != 1.0) {
    throw InvalidInputError("spectrum amplitudes must be normalized to max 1");
  }
}

Spectrum Spectrum::Normalized(std::vector<Partial> partials) {
  double max_amplitude = 0.0;
  for (const Partial& p : partials) {
    if (!std::isfinite(p.amplitude) || p.amplitude < 0.0) {
      throw InvalidInputError("partial amplitudes must be finite and >= 0");
    }
    max_amplitude = std::max(max_amplitude, p.amplitude);
  }
  if (max_amplitude <= 0.0) {
    throw InvalidInputError("spectrum has no non-zero amplitude");
  }
  for (Partial& p : partials) p.amplitude /= max_amplitude;
  return Spectrum(std::move(partials));
}

Spectrum Spectrum::WithEqualAmplitudes() const {
  std::vector<Partial> equal = partials_;
  for (Partial& p : equal) p.amplitude = 1.0;
  return Spectrum(std::move(equal));
}

double ExponentialOvertoneAmplitude(double ratio) {
  return kFirstOvertoneAmplitude *
         std::exp(-(ratio - kFirstOvertoneRatio) / kDecayRatioScale);
}

Spectrum BarSpectrum(int num_overtones, bool equal_amplitudes) {
  constexpr int kMax = static_cast<int>(std::size(kBarOvertoneRatios));
  if (num_overtones < 1 || num_overtones > kMax) {
    throw InvalidInputError("bar spectrum supports 1.." +
                            std::to_string(kMax) + " overtones, got " +
                            std::to_string(num_overtones));
  }
  return FromOvertones(
      std::vector<double>(kBarOvertoneRatios,
                          kBarOvertoneRatios + num_overtones),
      equal_amplitudes);
}

Spectrum HarmonicSpectrum(int num_partials, bool equal_amplitudes) {
  if (num_partials < 1) {
    throw InvalidInputError("harmonic spectrum needs at least one partial");
  }
  std::vector<double> overtones;
  for (int n = 2; n <= num_partials; ++n) overtones.push_back(n);
  return FromOvertones(overtones, equal_amplitudes);
}

Spectrum BarResonatorSpectrum(AmplitudeModel amplitudes) {
  std::vector<double> overtones(std::begin(kBarOvertoneRatios),
                                std::end(kBarOvertoneRatios));
  overtones.insert(overtones.end(), std::begin(kPipeOddHarmonics),
                   std::end(kPipeOddHarmonics));
  std::sort(overtones.begin(), overtones.end());
  return FromOvertones(overtones, amplitudes == AmplitudeModel::kEqual);
}

Spectrum ExperimentalSpectrum(bool equal_amplitudes) {
  Spectrum measured(std::vector<Partial>(std::begin(kExperimentalPartials),
                                         std::end(kExperimentalPartials)));
  return equal_amplitudes ? measured.WithEqualAmplitudes() : measured;
}

Spectrum ReadSpectrum(std::istream& in) {
  std::vector<Partial> partials;
  std::string line;
  while (ReadDataLine(in, line)) {
    const auto fields = SplitFields(line);
    if (fields.size() != 2) {
      throw InvalidInputError("spectrum line needs 2 fields: '" + line + "'");
    }
    partials.push_back({ParseDouble(fields[0], "partial ratio"),
                        ParseDouble(fields[1], "partial amplitude")});
  }
  return Spectrum::Normalized(std::move(partials));
}

void WriteSpectrum(const Spectrum& spectrum, std::ostream& out) {
  out << "# ratio amplitude\n";
  for (const Partial& p : spectrum.partials()) {
    out << FormatDouble(p.ratio) << ' ' << FormatDouble(p.amplitude) << '\n';
  }
}

}  // namespace isotone
