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

// Python bindings for the isotone core. Enumerations cross the boundary as
// their lowercase names; spectra, curves and extrema as small classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isotone/corpus.h"
#include "isotone/curves.h"
#include "isotone/errors.h"
#include "isotone/ingest.h"
#include "isotone/roughness.h"
#include "isotone/schemes.h"
#include "isotone/timbre.h"
#include "isotone/tuning.h"

namespace py = pybind11;

namespace isotone {
namespace {

Spectrum MakeSpectrum(const std::vector<double>& ratios,
                      const std::vector<double>& amplitudes, bool normalize) {
  if (ratios.size() != amplitudes.size()) {
    throw InvalidInputError("ratios and amplitudes differ in length");
  }
  std::vector<Partial> partials;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    partials.push_back({ratios[i], amplitudes[i]});
  }
  return normalize ? Spectrum::Normalized(std::move(partials))
                   : Spectrum(std::move(partials));
}

AmplitudeModel ParseAmplitudeModel(const std::string& name) {
  if (name == "equal") return AmplitudeModel::kEqual;
  if (name == "exponential") return AmplitudeModel::kExponential;
  throw InvalidInputError("amplitude model must be 'equal' or 'exponential'");
}

Weighting ParseWeighting(const std::string& name) {
  if (name == "occurrence") return Weighting::kOccurrence;
  if (name == "duration") return Weighting::kDuration;
  throw InvalidInputError("weighting must be 'occurrence' or 'duration'");
}

TuningRecord MakeRecord(const std::vector<std::optional<double>>& freqs,
                        const std::string& id) {
  TuningRecord r;
  r.id = id;
  r.fundamentals = freqs;
  return r;
}

Piece MakePiece(const std::vector<std::pair<int, double>>& events) {
  Piece p;
  for (const auto& [size, duration] : events) p.events.push_back({size, duration});
  return p;
}

}  // namespace
}  // namespace isotone

PYBIND11_MODULE(_isotone, m) {
  using namespace isotone;
  m.doc() = "Sensory dissonance, isotonic tunings and interval statistics.";

  py::register_exception<InvalidInputError>(m, "InvalidInputError",
                                            PyExc_ValueError);
  py::register_exception<DataInconsistencyError>(m, "DataInconsistencyError",
                                                 PyExc_RuntimeError);

  // Roughness.
  m.def(
      "pair_dissonance",
      [](double f1, double a1, double f2, double a2, const std::string& model) {
        return PairDissonance({f1, a1}, {f2, a2}, ParseModel(model));
      },
      py::arg("f1"), py::arg("a1"), py::arg("f2"), py::arg("a2"),
      py::arg("model") = "sethares1993");
  m.def("loudness_normalized",
        [](double a) { return LoudnessNormalized(a); });

  // Timbre.
  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init(&MakeSpectrum), py::arg("ratios"), py::arg("amplitudes"),
           py::arg("normalize") = true)
      .def_property_readonly("ratios",
                             [](const Spectrum& s) {
                               std::vector<double> out;
                               for (const Partial& p : s.partials()) {
                                 out.push_back(p.ratio);
                               }
                               return out;
                             })
      .def_property_readonly("amplitudes",
                             [](const Spectrum& s) {
                               std::vector<double> out;
                               for (const Partial& p : s.partials()) {
                                 out.push_back(p.amplitude);
                               }
                               return out;
                             })
      .def("with_equal_amplitudes", &Spectrum::WithEqualAmplitudes)
      .def("__len__", &Spectrum::size)
      .def("__eq__", [](const Spectrum& a, const Spectrum& b) { return a == b; })
      .def("__repr__", [](const Spectrum& s) {
        return "<Spectrum with " + std::to_string(s.size()) + " partials>";
      });
  m.def("bar_spectrum", &BarSpectrum, py::arg("num_overtones") = 5,
        py::arg("equal_amplitudes") = true);
  m.def("harmonic_spectrum", &HarmonicSpectrum, py::arg("num_partials"),
        py::arg("equal_amplitudes") = true);
  m.def(
      "bar_resonator_spectrum",
      [](const std::string& amplitudes) {
        return BarResonatorSpectrum(ParseAmplitudeModel(amplitudes));
      },
      py::arg("amplitudes") = "exponential");
  m.def("experimental_spectrum", &ExperimentalSpectrum,
        py::arg("equal_amplitudes") = false);

  // Curves.
  py::class_<DissonanceCurve>(m, "DissonanceCurve")
      .def_readonly("base_frequency", &DissonanceCurve::base_frequency)
      .def_readonly("alpha", &DissonanceCurve::alpha)
      .def_readonly("values", &DissonanceCurve::values)
      .def_readonly("normalized", &DissonanceCurve::normalized)
      .def_readonly("normalization", &DissonanceCurve::normalization)
      .def_property_readonly("model", [](const DissonanceCurve& c) {
        return std::string(ModelName(c.model));
      });
  py::class_<Extremum>(m, "Extremum")
      .def_readonly("alpha", &Extremum::alpha)
      .def_readonly("value", &Extremum::value)
      .def_readonly("width", &Extremum::width)
      .def_readonly("prominence", &Extremum::prominence)
      .def_readonly("index", &Extremum::index)
      .def_property_readonly("kind", [](const Extremum& e) {
        return std::string(ExtremumKindName(e.kind));
      })
      .def("__repr__", [](const Extremum& e) {
        return "<Extremum " + std::string(ExtremumKindName(e.kind)) + " at " +
               std::to_string(e.alpha) + ">";
      });

  m.def(
      "intrinsic_dissonance",
      [](const Spectrum& s, double base, const std::string& model) {
        return IntrinsicDissonance(s, base, ParseModel(model));
      },
      py::arg("spectrum"), py::arg("base_frequency"),
      py::arg("model") = "sethares1993");
  m.def(
      "two_tone_dissonance",
      [](const Spectrum& s, double base, double alpha,
         const std::string& model) {
        return TwoToneDissonance(s, base, alpha, ParseModel(model));
      },
      py::arg("spectrum"), py::arg("base_frequency"), py::arg("alpha"),
      py::arg("model") = "sethares1993");
  m.def(
      "sample_curve",
      [](const Spectrum& s, double base, double lo, double hi, double step,
         const std::string& model) {
        py::gil_scoped_release release;
        return SampleCurve(s, base, AlphaGrid{lo, hi, step}, ParseModel(model));
      },
      py::arg("spectrum"), py::arg("base_frequency"), py::arg("lo") = 1.0,
      py::arg("hi") = 2.3, py::arg("step") = 0.001,
      py::arg("model") = "sethares1993");
  m.def("find_extrema", &FindExtrema, py::arg("curve"),
        py::arg("min_prominence") = kDefaultProminence);
  m.def(
      "curve_derivative",
      [](const DissonanceCurve& c) {
        std::vector<std::pair<double, double>> out;
        for (const SlopeSample& s : CurveDerivative(c)) {
          out.emplace_back(s.alpha, s.slope);
        }
        return out;
      },
      py::arg("curve"));
  m.def(
      "dissonance_at_steps",
      [](const Spectrum& s, double base, int period_steps, double period_ratio,
         const std::vector<int>& steps, const std::string& model) {
        const IsotonicScale scale{period_steps, period_ratio, 0.0};
        std::vector<std::pair<int, double>> out;
        for (const StepDissonance& d :
             DissonanceAtSteps(s, base, scale, steps, ParseModel(model))) {
          out.emplace_back(d.step, d.normalized);
        }
        return out;
      },
      py::arg("spectrum"), py::arg("base_frequency"), py::arg("period_steps"),
      py::arg("period_ratio"), py::arg("steps"),
      py::arg("model") = "sethares1993");

  // Tuning.
  py::class_<RatioStats>(m, "RatioStats")
      .def_readonly("distance", &RatioStats::distance)
      .def_readonly("count", &RatioStats::count)
      .def_readonly("min", &RatioStats::min)
      .def_readonly("max", &RatioStats::max)
      .def_readonly("avg", &RatioStats::avg)
      .def_readonly("sigma", &RatioStats::sigma)
      .def_readonly("geometric_mean", &RatioStats::geometric_mean);
  py::class_<IsotonicScale>(m, "IsotonicScale")
      .def_readonly("period_steps", &IsotonicScale::period_steps)
      .def_readonly("period_ratio", &IsotonicScale::period_ratio)
      .def_readonly("max_relative_error", &IsotonicScale::max_relative_error)
      .def("predicted_ratio", &IsotonicScale::PredictedRatio);
  m.def(
      "ratio_table",
      [](const std::vector<std::optional<double>>& freqs, int max_distance) {
        return RatioTable(MakeRecord(freqs, "record"), max_distance);
      },
      py::arg("fundamentals"), py::arg("max_distance") = 9);
  m.def(
      "fit_isotonic",
      [](const std::vector<std::optional<double>>& freqs,
         const std::vector<int>& periods, bool geometric) {
        return FitIsotonic(MakeRecord(freqs, "record"), periods,
                           geometric ? PeriodEstimator::kGeometricMean
                                     : PeriodEstimator::kArithmeticMean);
      },
      py::arg("fundamentals"), py::arg("candidate_periods") =
                                   std::vector<int>{7, 8, 9},
      py::arg("geometric") = false);
  m.def("cents_to_ratio", &CentsToRatio, py::arg("cents"));
  m.def("ratio_to_cents", &RatioToCents, py::arg("ratio"));
  m.def("reconstruct_frequency", &ReconstructFrequency,
        py::arg("tempered_frequency"), py::arg("deviation_cents"));
  m.def("semitone_size", &SemitoneSize, py::arg("ratio"));
  m.def(
      "note_frequency",
      [](const std::string& note, double a4) { return NoteFrequency(note, a4); },
      py::arg("note"), py::arg("a4") = 440.0);

  // Corpus. Events are (size_semitones, duration_beats) pairs; results are
  // 14 probabilities for sizes 0..12 and ">12".
  m.def(
      "interval_probabilities",
      [](const std::vector<std::pair<int, double>>& events,
         const std::string& weighting) {
        const IntervalDistribution d =
            Probabilities(MakePiece(events), ParseWeighting(weighting));
        return std::vector<double>(d.begin(), d.end());
      },
      py::arg("events"), py::arg("weighting") = "occurrence");

  // Schemes.
  m.def(
      "pair_counts",
      [](const std::string& pattern, int size, int max_distance) {
        return PairCounts(SchemePattern::Parse(pattern), size, max_distance);
      },
      py::arg("pattern"), py::arg("marimba_size"), py::arg("max_distance") = 7);
  m.def(
      "canonical_pattern",
      [](const std::string& kind) {
        return CanonicalPattern(ParseScaleKind(kind)).ToString();
      },
      py::arg("scale"));
  m.def(
      "derive_patterns",
      [](const std::string& kind) {
        const ScaleKind k = ParseScaleKind(kind);
        std::vector<std::string> out;
        for (const SchemePattern& p : DerivePatterns(ReferenceCounts(k), k)) {
          out.push_back(p.ToString());
        }
        return out;
      },
      py::arg("scale"));

  // Ingest.
  m.def(
      "render_spectrum",
      [](const Spectrum& s, double base, int sample_rate, double seconds) {
        RenderOptions o;
        o.sample_rate = sample_rate;
        o.duration_seconds = seconds;
        return RenderSpectrum(s, base, o).samples;
      },
      py::arg("spectrum"), py::arg("base_frequency"),
      py::arg("sample_rate") = 48000, py::arg("seconds") = 2.0);
  m.def(
      "analyze_samples",
      [](std::vector<double> samples, int sample_rate,
         const std::string& fundamental) {
        AudioClip clip;
        clip.samples = std::move(samples);
        clip.sample_rate = sample_rate;
        AnalysisOptions o;
        o.fundamental = FundamentalPolicy::Parse(fundamental);
        const MeasuredSpectrum ms = AnalyzeClip(clip, o);
        std::vector<std::pair<double, double>> peaks;
        for (const SpectralPeak& p : ms.peaks) {
          peaks.emplace_back(p.frequency, p.amplitude);
        }
        return py::make_tuple(peaks, ms.fundamental_index);
      },
      py::arg("samples"), py::arg("sample_rate"),
      py::arg("fundamental") = "largest");
}
