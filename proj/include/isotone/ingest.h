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

#ifndef ISOTONE_INGEST_H_
#define ISOTONE_INGEST_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "isotone/timbre.h"
#include "isotone/wav.h"

namespace isotone {

struct SpectralPeak {
  double frequency = 0.0;  // Hz
  double amplitude = 0.0;  // normalized to the strongest retained peak
};

struct MeasuredSpectrum {
  std::string id;
  std::vector<SpectralPeak> peaks;  // increasing frequency
  std::optional<std::size_t> fundamental_index;

  const SpectralPeak* fundamental() const;
};

struct FundamentalPolicy {
  enum class Kind { kLargestPeak, kLowestProminent };
  Kind kind = Kind::kLargestPeak;
  // For kLowestProminent: lowest peak with amplitude >= threshold * max.
  double threshold = 0.3;

  static FundamentalPolicy LargestPeak() { return {}; }
  static FundamentalPolicy LowestProminent(double threshold) {
    return {Kind::kLowestProminent, threshold};
  }
  // "largest" or "lowest:THRESHOLD".
  static FundamentalPolicy Parse(std::string_view text);
};

struct AnalysisOptions {
  // Power of two. 0 picks the largest one that fits in the gated segment.
  std::size_t window_length = 0;
  FundamentalPolicy fundamental;
  // The segment starts where the short-time RMS first reaches
  // onset_gate * max and ends where it last reaches release_gate * max.
  double onset_gate = 0.10;
  double release_gate = 0.05;
  double rms_frame_seconds = 0.01;
  double noise_floor_db = -60.0;  // relative to the largest bin
  std::size_t max_peaks = 11;
  // A peak must be the largest bin within this many bins on either side,
  // which keeps window side lobes out of the peak list.
  std::size_t peak_neighborhood = 8;

  void Validate() const;
};

// Hann-windowed magnitude spectrum of the gated segment, peak picking with
// log-parabolic refinement, then fundamental selection. A clip without any
// peak above the floor yields an empty spectrum and no fundamental. Throws
// InvalidInputError when the clip is shorter than the window or the gated
// segment is too short to analyze.
MeasuredSpectrum AnalyzeClip(const AudioClip& clip,
                             const AnalysisOptions& options = {});

std::vector<MeasuredSpectrum> AnalyzeClips(std::span<const AudioClip> clips,
                                           const AnalysisOptions& options = {});

struct HistogramBin {
  double center = 0.0;
  double mean_amplitude = 0.0;
  std::size_t count = 0;
};

struct OvertoneHistogram {
  std::vector<HistogramBin> bins;  // non-empty bins, increasing center
  std::size_t skipped_spectra = 0;  // spectra without a fundamental
  std::size_t contributions = 0;
};

// Bins peak ratios f / f_fundamental with width `bin_width`; bin k covers
// [k w, (k + 1) w).
OvertoneHistogram OvertoneRatioHistogram(
    std::span<const MeasuredSpectrum> spectra, double bin_width);

struct RenderOptions {
  int sample_rate = 48000;
  double duration_seconds = 2.0;
  double decay_seconds = 0.5;  // exponential amplitude time constant
  double attack_seconds = 0.002;
  double peak_level = 0.9;  // bound on |sample|
};

// Sum of decaying sinusoids at base * ratio with the spectrum's amplitudes.
AudioClip RenderSpectrum(const Spectrum& spectrum, double base_frequency,
                         const RenderOptions& options = {});

void WriteMeasuredSpectrumCsv(const MeasuredSpectrum& spectrum,
                              std::ostream& out, int decimals = -1);
void WriteHistogramCsv(const OvertoneHistogram& histogram, std::ostream& out,
                       int decimals = -1);

}  // namespace isotone

#endif  // ISOTONE_INGEST_H_
