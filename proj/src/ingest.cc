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

#include "isotone/ingest.h"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "isotone/errors.h"
#include "isotone/text_io.h"
#include "parallel.h"

namespace isotone {

namespace {

constexpr std::size_t kMinWindow = 256;

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

// Amplitude spectrum of a Hann-windowed block, scaled so that a sinusoid of
// amplitude a centered on a bin reads a.
std::vector<double> HannMagnitudes(std::span<const double> block) {
  const std::size_t n = block.size();
  std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
  std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                FFTW_ESTIMATE);
  }
  double window_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(n));
    in.get()[i] = block[i] * w;
    window_sum += w;
  }
  fftw_execute(plan);
  std::vector<double> magnitude(n / 2 + 1);
  for (std::size_t k = 0; k < magnitude.size(); ++k) {
    magnitude[k] = 2.0 * std::hypot(out.get()[k][0], out.get()[k][1]) /
                   window_sum;
  }
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
  }
  return magnitude;
}

struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool silent = false;
};

Segment GateSegment(const AudioClip& clip, const AnalysisOptions& options) {
  const std::size_t n = clip.samples.size();
  const std::size_t frame = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::lround(options.rms_frame_seconds * clip.sample_rate)));
  std::vector<double> rms;
  for (std::size_t start = 0; start < n; start += frame) {
    const std::size_t stop = std::min(n, start + frame);
    double sum = 0.0;
    for (std::size_t i = start; i < stop; ++i) {
      sum += clip.samples[i] * clip.samples[i];
    }
    rms.push_back(std::sqrt(sum / static_cast<double>(stop - start)));
  }
  const double max_rms = *std::max_element(rms.begin(), rms.end());
  if (max_rms <= 0.0) return {0, n, true};
  std::size_t first = 0;
  while (rms[first] < options.onset_gate * max_rms) ++first;
  std::size_t last = rms.size() - 1;
  while (last > first && rms[last] < options.release_gate * max_rms) --last;
  return {first * frame, std::min(n, (last + 1) * frame), false};
}

std::size_t ChooseFundamental(const std::vector<SpectralPeak>& peaks,
                              const FundamentalPolicy& policy) {
  std::size_t largest = 0;
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    if (peaks[i].amplitude > peaks[largest].amplitude) largest = i;
  }
  if (policy.kind == FundamentalPolicy::Kind::kLargestPeak) return largest;
  const double cut = policy.threshold * peaks[largest].amplitude;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (peaks[i].amplitude >= cut) return i;
  }
  return largest;
}

}  // namespace

const SpectralPeak* MeasuredSpectrum::fundamental() const {
  if (!fundamental_index || *fundamental_index >= peaks.size()) return nullptr;
  return &peaks[*fundamental_index];
}

FundamentalPolicy FundamentalPolicy::Parse(std::string_view text) {
  if (text == "largest") return LargestPeak();
  constexpr std::string_view kLowest = "lowest";
  if (text.substr(0, kLowest.size()) == kLowest) {
    std::string_view rest = text.substr(kLowest.size());
    if (rest.empty()) return LowestProminent(FundamentalPolicy{}.threshold);
    if (rest.front() == ':') {
      const double t = ParseDouble(rest.substr(1), "fundamental threshold");
      if (!(t > 0.0 && t <= 1.0)) {
        throw InvalidInputError("fundamental threshold must lie in (0, 1]");
      }
      return LowestProminent(t);
    }
  }
  throw InvalidInputError("fundamental policy must be 'largest' or "
                          "'lowest[:THRESHOLD]', got '" + std::string(text) +
                          "'");
}

void AnalysisOptions::Validate() const {
  if (window_length != 0 &&
      (window_length < 4 || !std::has_single_bit(window_length))) {
    throw InvalidInputError("window length must be a power of two >= 4");
  }
  if (!(onset_gate > 0.0 && onset_gate <= 1.0) ||
      !(release_gate > 0.0 && release_gate <= 1.0)) {
    throw InvalidInputError("energy gates must lie in (0, 1]");
  }
  if (!(rms_frame_seconds > 0.0)) {
    throw InvalidInputError("RMS frame must be positive");
  }
  if (max_peaks == 0) throw InvalidInputError("max_peaks must be >= 1");
  if (!(fundamental.threshold > 0.0 && fundamental.threshold <= 1.0)) {
    throw InvalidInputError("fundamental threshold must lie in (0, 1]");
  }
}

MeasuredSpectrum AnalyzeClip(const AudioClip& clip,
                             const AnalysisOptions& options) {
  options.Validate();
  clip.Validate();
  MeasuredSpectrum result;
  result.id = clip.id;
  const std::size_t n = clip.samples.size();
  if (options.window_length > n) {
    throw InvalidInputError("clip '" + clip.id + "' is shorter than the " +
                            std::to_string(options.window_length) +
                            "-sample window");
  }
  const Segment segment = GateSegment(clip, options);
  if (segment.silent) return result;

  std::size_t window = options.window_length;
  std::size_t begin = segment.begin;
  if (window == 0) {
    window = std::bit_floor(segment.end - segment.begin);
    if (window < kMinWindow) {
      throw InvalidInputError("clip '" + clip.id +
                              "' has too short a sounding segment");
    }
  }
  begin = std::min(begin, n - window);

  const std::vector<double> magnitude = HannMagnitudes(
      std::span<const double>(clip.samples).subspan(begin, window));
  const double max_bin = *std::max_element(magnitude.begin(), magnitude.end());
  if (max_bin <= 0.0) return result;
  const double floor = max_bin * std::pow(10.0, options.noise_floor_db / 20.0);
  const double bin_hz = static_cast<double>(clip.sample_rate) /
                        static_cast<double>(window);

  std::vector<SpectralPeak> peaks;
  const std::size_t reach = std::max<std::size_t>(1, options.peak_neighborhood);
  for (std::size_t k = 1; k + 1 < magnitude.size(); ++k) {
    const double m = magnitude[k];
    if (m < floor) continue;
    bool is_peak = true;
    const std::size_t lo = k > reach ? k - reach : 0;
    const std::size_t hi = std::min(magnitude.size() - 1, k + reach);
    for (std::size_t j = lo; j < k && is_peak; ++j) is_peak = magnitude[j] < m;
    for (std::size_t j = k + 1; j <= hi && is_peak; ++j) {
      is_peak = magnitude[j] <= m;
    }
    if (!is_peak) continue;
    constexpr double kTiny = 1e-300;
    const double a = std::log(std::max(magnitude[k - 1], kTiny));
    const double b = std::log(m);
    const double c = std::log(std::max(magnitude[k + 1], kTiny));
    const double denom = a - 2.0 * b + c;
    double offset = 0.0;
    if (denom < 0.0) offset = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
    peaks.push_back({(static_cast<double>(k) + offset) * bin_hz,
                     std::exp(b - 0.25 * (a - c) * offset)});
  }
  if (peaks.empty()) return result;

  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const SpectralPeak& x, const SpectralPeak& y) {
                     return x.amplitude > y.amplitude;
                   });
  if (peaks.size() > options.max_peaks) peaks.resize(options.max_peaks);
  std::sort(peaks.begin(), peaks.end(),
            [](const SpectralPeak& x, const SpectralPeak& y) {
              return x.frequency < y.frequency;
            });
  double strongest = 0.0;
  for (const SpectralPeak& p : peaks) {
    strongest = std::max(strongest, p.amplitude);
  }
  for (SpectralPeak& p : peaks) p.amplitude /= strongest;
  result.peaks = std::move(peaks);
  result.fundamental_index = ChooseFundamental(result.peaks,
                                               options.fundamental);
  return result;
}

std::vector<MeasuredSpectrum> AnalyzeClips(std::span<const AudioClip> clips,
                                           const AnalysisOptions& options) {
  std::vector<MeasuredSpectrum> out(clips.size());
  internal::ParallelFor(clips.size(), [&](std::size_t i) {
    out[i] = AnalyzeClip(clips[i], options);
  });
  return out;
}

OvertoneHistogram OvertoneRatioHistogram(
    std::span<const MeasuredSpectrum> spectra, double bin_width) {
  if (!std::isfinite(bin_width) || bin_width <= 0.0) {
    throw InvalidInputError("bin width must be finite and > 0");
  }
  std::vector<double> sums;
  std::vector<std::size_t> counts;
  OvertoneHistogram histogram;
  for (const MeasuredSpectrum& s : spectra) {
    const SpectralPeak* f0 = s.fundamental();
    if (f0 == nullptr || !(f0->frequency > 0.0)) {
      ++histogram.skipped_spectra;
      continue;
    }
    for (const SpectralPeak& p : s.peaks) {
      const auto bin =
          static_cast<std::size_t>(std::floor(p.frequency / f0->frequency /
                                              bin_width));
      if (bin >= sums.size()) {
        sums.resize(bin + 1, 0.0);
        counts.resize(bin + 1, 0);
      }
      sums[bin] += p.amplitude;
      ++counts[bin];
      ++histogram.contributions;
    }
  }
  for (std::size_t b = 0; b < sums.size(); ++b) {
    if (counts[b] == 0) continue;
    histogram.bins.push_back({(static_cast<double>(b) + 0.5) * bin_width,
                              sums[b] / static_cast<double>(counts[b]),
                              counts[b]});
  }
  return histogram;
}

AudioClip RenderSpectrum(const Spectrum& spectrum, double base_frequency,
                         const RenderOptions& options) {
  if (!std::isfinite(base_frequency) || base_frequency <= 0.0) {
    throw InvalidInputError("base frequency must be finite and > 0");
  }
  if (options.sample_rate <= 0 || !(options.duration_seconds > 0.0) ||
      !(options.decay_seconds > 0.0) || !(options.attack_seconds >= 0.0) ||
      !(options.peak_level > 0.0 && options.peak_level <= 1.0)) {
    throw InvalidInputError("invalid render options");
  }
  const double nyquist = options.sample_rate / 2.0;
  double amplitude_sum = 0.0;
  for (const Partial& p : spectrum.partials()) {
    if (base_frequency * p.ratio >= nyquist) {
      throw InvalidInputError("partial above the Nyquist frequency");
    }
    amplitude_sum += p.amplitude;
  }
  const double gain = options.peak_level / amplitude_sum;
  AudioClip clip;
  clip.sample_rate = options.sample_rate;
  clip.samples.resize(static_cast<std::size_t>(
      std::lround(options.duration_seconds * options.sample_rate)));
  const double dt = 1.0 / options.sample_rate;
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double t = static_cast<double>(i) * dt;
    double envelope = std::exp(-t / options.decay_seconds);
    if (t < options.attack_seconds) envelope *= t / options.attack_seconds;
    double value = 0.0;
    for (const Partial& p : spectrum.partials()) {
      value += p.amplitude *
               std::sin(2.0 * std::numbers::pi * base_frequency * p.ratio * t);
    }
    clip.samples[i] = gain * envelope * value;
  }
  return clip;
}

void WriteMeasuredSpectrumCsv(const MeasuredSpectrum& spectrum,
                              std::ostream& out, int decimals) {
  out << "frequency_hz,normalized_amplitude,is_fundamental\n";
  for (std::size_t i = 0; i < spectrum.peaks.size(); ++i) {
    out << FormatDouble(spectrum.peaks[i].frequency, decimals) << ','
        << FormatDouble(spectrum.peaks[i].amplitude, decimals) << ','
        << (spectrum.fundamental_index == i ? 1 : 0) << '\n';
  }
}

void WriteHistogramCsv(const OvertoneHistogram& histogram, std::ostream& out,
                       int decimals) {
  out << "bin_center,mean_amplitude,count\n";
  for (const HistogramBin& b : histogram.bins) {
    out << FormatDouble(b.center, decimals) << ','
        << FormatDouble(b.mean_amplitude, decimals) << ',' << b.count << '\n';
  }
}

}  // namespace isotone
