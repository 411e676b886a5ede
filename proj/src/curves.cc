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

#include "isotone/curves.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "isotone/errors.h"
#include "isotone/text_io.h"
#include "parallel.h"

namespace isotone {

namespace {

void CheckBase(double base_frequency) {
  if (!std::isfinite(base_frequency) || base_frequency <= 0.0) {
    throw InvalidInputError("base frequency must be finite and > 0");
  }
}

double CrossDissonance(const Spectrum& spectrum, double f_low, double f_high,
                       Model model) {
  double total = 0.0;
  for (const Partial& p : spectrum.partials()) {
    for (const Partial& q : spectrum.partials()) {
      total += PairDissonance({f_low * p.ratio, p.amplitude},
                              {f_high * q.ratio, q.amplitude}, model);
    }
  }
  return total;
}

std::vector<double> SampleRaw(const Spectrum& spectrum, double base_frequency,
                              const AlphaGrid& grid, Model model) {
  std::vector<double> raw(grid.size());
  const double intrinsic_low =
      IntrinsicDissonance(spectrum, base_frequency, model);
  internal::ParallelFor(raw.size(), [&](std::size_t i) {
    const double f_high = grid.at(i) * base_frequency;
    raw[i] = intrinsic_low + IntrinsicDissonance(spectrum, f_high, model) +
             CrossDissonance(spectrum, base_frequency, f_high, model);
  });
  return raw;
}

std::vector<double> GridAlphas(const AlphaGrid& grid) {
  std::vector<double> alpha(grid.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = grid.at(i);
  return alpha;
}

DissonanceCurve MakeCurve(std::vector<double> alpha, std::vector<double> raw,
                          double normalization, double base_frequency,
                          Model model) {
  DissonanceCurve curve;
  curve.base_frequency = base_frequency;
  curve.model = model;
  curve.alpha = std::move(alpha);
  curve.values = std::move(raw);
  curve.normalization = normalization > 0.0 ? normalization : 1.0;
  curve.normalized.resize(curve.values.size());
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    curve.normalized[i] = curve.values[i] / curve.normalization;
  }
  return curve;
}

// Alpha at which the segment y[k] -> y[k + 1] crosses `level`.
double Crossing(const std::vector<double>& alpha, const std::vector<double>& y,
                std::size_t k, double level) {
  const double dy = y[k + 1] - y[k];
  if (dy == 0.0) return alpha[k];
  const double t = (level - y[k]) / dy;
  return alpha[k] + t * (alpha[k + 1] - alpha[k]);
}

// Local minima of y; callers negate the data to find maxima.
std::vector<Extremum> Minima(const std::vector<double>& alpha,
                             const std::vector<double>& y,
                             double min_prominence) {
  std::vector<Extremum> out;
  const std::size_t n = y.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    std::size_t j = i;
    while (j + 1 < n && y[j + 1] == y[i]) ++j;
    if (j + 1 >= n || !(y[i - 1] > y[i]) || !(y[j + 1] > y[i])) {
      i = j + 1;
      continue;
    }
    const double v = y[i];

    std::size_t left = i;
    double left_ref = y[i - 1];
    while (left > 0 && y[left - 1] >= v) {
      --left;
      left_ref = std::max(left_ref, y[left]);
    }
    std::size_t right = j;
    double right_ref = y[j + 1];
    while (right + 1 < n && y[right + 1] >= v) {
      ++right;
      right_ref = std::max(right_ref, y[right]);
    }
    const double prominence = std::min(left_ref, right_ref) - v;
    if (prominence >= min_prominence && prominence > 0.0) {
      Extremum e;
      e.kind = ExtremumKind::kMinimum;
      e.prominence = prominence;
      e.index = (i + j) / 2;
      e.alpha = (alpha[i] + alpha[j]) / 2.0;
      e.value = v;
      if (i == j) {
        const double y0 = y[i - 1];
        const double y1 = y[i];
        const double y2 = y[i + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        if (denom > 0.0) {
          const double offset = 0.5 * (y0 - y2) / denom;
          const double half_step = offset < 0.0 ? alpha[i] - alpha[i - 1]
                                                : alpha[i + 1] - alpha[i];
          e.alpha = alpha[i] + offset * half_step;
          e.value = y1 - 0.25 * (y0 - y2) * offset;
        }
      }

      const double level = v + 0.1 * prominence;
      std::size_t k = i;
      while (k > 0 && y[k - 1] < level) --k;
      const double left_alpha = k > 0 ? Crossing(alpha, y, k - 1, level)
                                      : alpha.front();
      k = j;
      while (k + 1 < n && y[k + 1] < level) ++k;
      const double right_alpha = k + 1 < n ? Crossing(alpha, y, k, level)
                                           : alpha.back();
      e.width = right_alpha - left_alpha;
      out.push_back(e);
    }
    i = j + 1;
  }
  return out;
}

}  // namespace

std::size_t AlphaGrid::size() const {
  Validate();
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void AlphaGrid::Validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw InvalidInputError("alpha grid bounds must be finite");
  }
  if (!(lo >= 1.0) || !(hi > lo)) {
    throw InvalidInputError("alpha grid needs 1 <= lo < hi");
  }
  if (!(step > 0.0)) throw InvalidInputError("alpha step must be > 0");
}

AlphaGrid AlphaGrid::Parse(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.emplace_back(text.substr(start, colon == std::string_view::npos
                                              ? std::string_view::npos
                                              : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw InvalidInputError("alpha grid must look like lo:hi:step, got '" +
                            std::string(text) + "'");
  }
  AlphaGrid grid{ParseDouble(parts[0], "alpha lo"),
                 ParseDouble(parts[1], "alpha hi"),
                 ParseDouble(parts[2], "alpha step")};
  grid.Validate();
  return grid;
}

DissonanceCurve DissonanceCurve::FromSamples(std::vector<double> alpha,
                                             std::vector<double> values,
                                             double base_frequency,
                                             Model model) {
  if (alpha.size() != values.size()) {
    throw InvalidInputError("alpha and values differ in length");
  }
  const double max_value =
      values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  return MakeCurve(std::move(alpha), std::move(values), max_value,
                   base_frequency, model);
}

double IntrinsicDissonance(const Spectrum& spectrum, double base_frequency,
                           Model model) {
  CheckBase(base_frequency);
  const auto partials = spectrum.partials();
  double total = 0.0;
  for (std::size_t i = 0; i < partials.size(); ++i) {
    for (std::size_t j = i + 1; j < partials.size(); ++j) {
      total += PairDissonance(
          {base_frequency * partials[i].ratio, partials[i].amplitude},
          {base_frequency * partials[j].ratio, partials[j].amplitude}, model);
    }
  }
  return total;
}

double TwoToneDissonance(const Spectrum& spectrum, double base_frequency,
                         double alpha, Model model) {
  CheckBase(base_frequency);
  if (!std::isfinite(alpha) || alpha < 1.0) {
    throw InvalidInputError("alpha must be finite and >= 1");
  }
  const double f_high = alpha * base_frequency;
  return IntrinsicDissonance(spectrum, base_frequency, model) +
         IntrinsicDissonance(spectrum, f_high, model) +
         CrossDissonance(spectrum, base_frequency, f_high, model);
}

DissonanceCurve SampleCurve(const Spectrum& spectrum, double base_frequency,
                            const AlphaGrid& grid, Model model) {
  CheckBase(base_frequency);
  std::vector<double> raw = SampleRaw(spectrum, base_frequency, grid, model);
  const double max_value = *std::max_element(raw.begin(), raw.end());
  return MakeCurve(GridAlphas(grid), std::move(raw), max_value,
                   base_frequency, model);
}

std::vector<Extremum> FindExtrema(const DissonanceCurve& curve,
                                  double min_prominence) {
  const std::vector<double>& y = curve.normalized;
  if (y.size() != curve.alpha.size()) {
    throw InvalidInputError("curve alpha and values differ in length");
  }
  if (y.size() < 3) throw InvalidInputError("need at least 3 samples");
  std::vector<Extremum> out = Minima(curve.alpha, y, min_prominence);
  std::vector<double> negated(y.size());
  std::transform(y.begin(), y.end(), negated.begin(),
                 [](double v) { return -v; });
  for (Extremum e : Minima(curve.alpha, negated, min_prominence)) {
    e.kind = ExtremumKind::kMaximum;
    e.value = -e.value;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Extremum& a, const Extremum& b) {
    return a.alpha < b.alpha;
  });
  return out;
}

std::vector<SlopeSample> CurveDerivative(const DissonanceCurve& curve) {
  const std::vector<double>& a = curve.alpha;
  const std::vector<double>& y = curve.normalized;
  if (y.size() != a.size()) {
    throw InvalidInputError("curve alpha and values differ in length");
  }
  if (y.size() < 3) throw InvalidInputError("need at least 3 samples");
  const std::size_t n = y.size();
  std::vector<SlopeSample> out(n);
  out[0] = {a[0], (y[1] - y[0]) / (a[1] - a[0])};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = {a[i], (y[i + 1] - y[i - 1]) / (a[i + 1] - a[i - 1])};
  }
  out[n - 1] = {a[n - 1], (y[n - 1] - y[n - 2]) / (a[n - 1] - a[n - 2])};
  return out;
}

std::vector<DissonanceCurve> CurveFamily(const Spectrum& spectrum,
                                         std::span<const double> bases,
                                         const AlphaGrid& grid, Model model) {
  if (bases.empty()) throw InvalidInputError("no base frequencies given");
  for (double base : bases) CheckBase(base);
  std::vector<std::vector<double>> raw;
  raw.reserve(bases.size());
  double family_max = 0.0;
  for (double base : bases) {
    raw.push_back(SampleRaw(spectrum, base, grid, model));
    family_max = std::max(family_max,
                          *std::max_element(raw.back().begin(),
                                            raw.back().end()));
  }
  std::vector<DissonanceCurve> curves;
  curves.reserve(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k) {
    curves.push_back(MakeCurve(GridAlphas(grid), std::move(raw[k]), family_max,
                               bases[k], model));
  }
  return curves;
}

std::vector<StepDissonance> DissonanceAtSteps(const Spectrum& spectrum,
                                              double base_frequency,
                                              const IsotonicScale& scale,
                                              std::span<const int> steps,
                                              Model model,
                                              double normalization) {
  CheckBase(base_frequency);
  if (scale.period_steps < 1 || !(scale.period_ratio > 0.0)) {
    throw InvalidInputError("scale needs period_steps >= 1, period_ratio > 0");
  }
  if (normalization <= 0.0) {
    normalization =
        SampleCurve(spectrum, base_frequency, AlphaGrid{}, model).normalization;
  }
  std::vector<StepDissonance> out;
  out.reserve(steps.size());
  for (int s : steps) {
    if (s < 1) throw InvalidInputError("steps must be >= 1");
    StepDissonance d;
    d.step = s;
    d.alpha = scale.PredictedRatio(s);
    d.raw = TwoToneDissonance(spectrum, base_frequency, d.alpha, model);
    d.normalized = d.raw / normalization;
    out.push_back(d);
  }
  return out;
}

std::string_view ExtremumKindName(ExtremumKind kind) {
  return kind == ExtremumKind::kMinimum ? "minimum" : "maximum";
}

void WriteCurveCsv(const DissonanceCurve& curve, std::ostream& out,
                   int decimals) {
  out << "alpha,normalized,raw\n";
  for (std::size_t i = 0; i < curve.alpha.size(); ++i) {
    out << FormatDouble(curve.alpha[i], decimals) << ','
        << FormatDouble(curve.normalized[i], decimals) << ','
        << FormatDouble(curve.values[i], decimals) << '\n';
  }
}

void WriteExtremaCsv(std::span<const Extremum> extrema, std::ostream& out,
                     int decimals) {
  out << "kind,alpha,value,width,prominence\n";
  for (const Extremum& e : extrema) {
    out << ExtremumKindName(e.kind) << ',' << FormatDouble(e.alpha, decimals)
        << ',' << FormatDouble(e.value, decimals) << ','
        << FormatDouble(e.width, decimals) << ','
        << FormatDouble(e.prominence, decimals) << '\n';
  }
}

void WriteDerivativeCsv(std::span<const SlopeSample> slope, std::ostream& out,
                        int decimals) {
  out << "alpha,slope\n";
  for (const SlopeSample& s : slope) {
    out << FormatDouble(s.alpha, decimals) << ','
        << FormatDouble(s.slope, decimals) << '\n';
  }
}

}  // namespace isotone
