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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isotone/corpus.h"
#include "isotone/curves.h"
#include "isotone/errors.h"
#include "isotone/ingest.h"
#include "isotone/roughness.h"
#include "isotone/schemes.h"
#include "isotone/text_io.h"
#include "isotone/timbre.h"
#include "isotone/tuning.h"
#include "isotone/wav.h"
#include "svg.h"

namespace isotone::cli {

namespace {

namespace fs = std::filesystem;

// Argument combinations that CLI11 cannot express; reported with exit 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CommonArgs {
  std::string output_dir = ".";
  int round = -1;
  bool svg = false;
};

struct SpectrumArgs {
  std::string preset;
  std::string file;
  std::string amplitudes = "auto";
  int overtones = 5;
  int partials = 6;
};

struct CurveArgs {
  SpectrumArgs spectrum;
  double base_hz = 300.0;
  std::string model = "sethares1993";
  std::string alpha = "1.0:2.3:0.001";
  double prominence = kDefaultProminence;
};

struct ScaleArg {
  int period = 7;
  double ratio = 2.0;
};

// "r7=2.0", "r=2.0,p=7" or "p=7,r=2.0".
ScaleArg ParseScaleArg(const std::string& text) {
  ScaleArg scale;
  bool have_ratio = false;
  for (const std::string& field : SplitCsvLine(text)) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw InvalidInputError("expected key=value in '" + field + "'");
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "p") {
      scale.period = static_cast<int>(ParseInt(value, "period"));
    } else if (key == "r") {
      scale.ratio = ParseDouble(value, "period ratio");
      have_ratio = true;
    } else if (key.size() > 1 && key[0] == 'r') {
      scale.period = static_cast<int>(ParseInt(key.substr(1), "period"));
      scale.ratio = ParseDouble(value, "period ratio");
      have_ratio = true;
    } else {
      throw InvalidInputError("unknown scale key '" + key + "'");
    }
  }
  if (!have_ratio) throw InvalidInputError("scale needs a period ratio");
  if (scale.period < 1 || !(scale.ratio > 0.0)) {
    throw InvalidInputError("scale needs p >= 1 and r > 0");
  }
  return scale;
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = static_cast<int>(ParseInt(text, "range"));
    return {v, v};
  }
  const int lo = static_cast<int>(ParseInt(text.substr(0, colon), "range"));
  const int hi = static_cast<int>(ParseInt(text.substr(colon + 1), "range"));
  if (lo > hi) throw InvalidInputError("range must satisfy lo <= hi");
  return {lo, hi};
}

// Wraps a parser so CLI11 reports its exceptions as validation errors.
CLI::Validator Parses(std::function<void(const std::string&)> parse,
                      std::string description) {
  return CLI::Validator(
      [parse](std::string& value) -> std::string {
        try {
          parse(value);
        } catch (const std::exception& e) {
          return e.what();
        }
        return "";
      },
      std::move(description));
}

void AddCommonOptions(CLI::App* cmd, CommonArgs& common, bool plots) {
  cmd->add_option("-o,--output", common.output_dir, "Output directory");
  cmd->add_option("--round", common.round,
                  "Decimals in CSV output (-1 keeps full precision)")
      ->check(CLI::Range(-1, 17));
  if (plots) cmd->add_flag("--svg", common.svg, "Also write an SVG plot");
}

void AddSpectrumOptions(CLI::App* cmd, SpectrumArgs& s) {
  cmd->add_option("preset", s.preset, "Timbre preset")
      ->check(CLI::IsMember(
          {"bar", "bar-resonator", "experimental", "harmonic"}));
  cmd->add_option("--spectrum-file", s.file,
                  "Spectrum file with 'ratio amplitude' lines (instead of a "
                  "preset)");
  cmd->add_option("--amplitudes", s.amplitudes,
                  "auto: the preset's usual amplitudes; equal: all 1; "
                  "decaying: exponential overtone law (measured values for "
                  "experimental)")
      ->check(CLI::IsMember({"auto", "equal", "decaying"}));
  cmd->add_option("--overtones", s.overtones, "Overtones of the bar preset")
      ->check(CLI::Range(1, 5));
  cmd->add_option("--partials", s.partials, "Partials of the harmonic preset")
      ->check(CLI::Range(1, 64));
}

void AddCurveOptions(CLI::App* cmd, CurveArgs& a) {
  AddSpectrumOptions(cmd, a.spectrum);
  cmd->add_option("--base-hz", a.base_hz, "Lower fundamental in Hz")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--model", a.model, "Dissonance model")
      ->check(CLI::IsMember({"sethares1993", "vassilakis2001", "sethares2005"},
                            CLI::ignore_case));
  cmd->add_option("--alpha", a.alpha, "Ratio grid lo:hi:step")
      ->check(Parses([](const std::string& v) { AlphaGrid::Parse(v); },
                     "LO:HI:STEP"));
}

Spectrum BuildSpectrum(const SpectrumArgs& s) {
  if (!s.preset.empty() && !s.file.empty()) {
    throw UsageError("give either a preset or --spectrum-file, not both");
  }
  if (s.preset.empty() && s.file.empty()) {
    throw UsageError("a preset or --spectrum-file is required");
  }
  if (!s.file.empty()) {
    std::ifstream in(s.file);
    if (!in) throw std::runtime_error("cannot open " + s.file);
    Spectrum spectrum = ReadSpectrum(in);
    return s.amplitudes == "equal" ? spectrum.WithEqualAmplitudes() : spectrum;
  }
  const bool equal = s.amplitudes == "equal";
  const bool decaying = s.amplitudes == "decaying";
  if (s.preset == "bar") return BarSpectrum(s.overtones, !decaying);
  if (s.preset == "harmonic") return HarmonicSpectrum(s.partials, !decaying);
  if (s.preset == "bar-resonator") {
    return BarResonatorSpectrum(equal ? AmplitudeModel::kEqual
                                      : AmplitudeModel::kExponential);
  }
  return ExperimentalSpectrum(equal);
}

class Context {
 public:
  Context(const CommonArgs& common, std::ostream& out)
      : common_(common), out_(out) {}

  int decimals() const { return common_.round; }
  bool svg() const { return common_.svg; }
  std::ostream& out() { return out_; }

  void Emit(const std::string& name, const std::string& contents) {
    const fs::path dir(common_.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw std::runtime_error("cannot create " + dir.string() + ": " +
                               ec.message());
    }
    const fs::path path = dir / name;
    WriteFileAtomically(path, contents);
    out_ << "wrote " << path.string() << '\n';
  }

 private:
  const CommonArgs& common_;
  std::ostream& out_;
};

template <typename Writer>
std::string Render(Writer&& writer) {
  std::ostringstream s;
  writer(s);
  return s.str();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

TuningRecord LoadRecord(const std::string& path) {
  std::ifstream in = OpenInput(path);
  TuningRecord record = ReadTuningRecord(in);
  if (record.id.empty()) record.id = fs::path(path).stem().string();
  return record;
}

std::vector<double> MinimaAlphas(std::span<const Extremum> extrema) {
  std::vector<double> out;
  for (const Extremum& e : extrema) {
    if (e.kind == ExtremumKind::kMinimum) out.push_back(e.alpha);
  }
  return out;
}

void RunCurve(const CurveArgs& a, Context& ctx) {
  const Spectrum spectrum = BuildSpectrum(a.spectrum);
  const DissonanceCurve curve = SampleCurve(
      spectrum, a.base_hz, AlphaGrid::Parse(a.alpha), ParseModel(a.model));
  const std::vector<Extremum> extrema = FindExtrema(curve, a.prominence);
  ctx.Emit("curve.csv", Render([&](std::ostream& s) {
             WriteCurveCsv(curve, s, ctx.decimals());
           }));
  ctx.Emit("extrema.csv", Render([&](std::ostream& s) {
             WriteExtremaCsv(extrema, s, ctx.decimals());
           }));
  if (ctx.svg()) {
    ctx.Emit("curve.svg",
             LinePlotSvg({{std::string(ModelName(curve.model)), curve.alpha,
                           curve.normalized}},
                         "alpha", "normalized dissonance",
                         MinimaAlphas(extrema)));
  }
}

void RunDerivative(const CurveArgs& a, Context& ctx) {
  const Spectrum spectrum = BuildSpectrum(a.spectrum);
  const DissonanceCurve curve = SampleCurve(
      spectrum, a.base_hz, AlphaGrid::Parse(a.alpha), ParseModel(a.model));
  const std::vector<SlopeSample> slope = CurveDerivative(curve);
  ctx.Emit("derivative.csv", Render([&](std::ostream& s) {
             WriteDerivativeCsv(slope, s, ctx.decimals());
           }));
  if (ctx.svg()) {
    Series series{"dD/dalpha", {}, {}};
    for (const SlopeSample& p : slope) {
      series.x.push_back(p.alpha);
      series.y.push_back(p.slope);
    }
    ctx.Emit("derivative.svg", LinePlotSvg({series}, "alpha", "dD/dalpha"));
  }
}

struct FamilyArgs {
  CurveArgs curve;
  std::vector<double> bases;
  std::string scale;
  std::string steps;
};

void RunFamily(const FamilyArgs& a, Context& ctx) {
  const Spectrum spectrum = BuildSpectrum(a.curve.spectrum);
  const Model model = ParseModel(a.curve.model);
  const std::vector<DissonanceCurve> curves = CurveFamily(
      spectrum, a.bases, AlphaGrid::Parse(a.curve.alpha), model);
  std::vector<Series> series;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const std::string label = FormatDouble(curves[k].base_frequency);
    ctx.Emit("family_" + std::to_string(k + 1) + ".csv",
             Render([&](std::ostream& s) {
               s << "# base_hz " << label << '\n';
               WriteCurveCsv(curves[k], s, ctx.decimals());
             }));
    series.push_back({label + " Hz", curves[k].alpha, curves[k].normalized});
  }
  std::vector<double> markers;
  if (!a.scale.empty()) {
    const ScaleArg scale_arg = ParseScaleArg(a.scale);
    const IsotonicScale scale{scale_arg.period, scale_arg.ratio, 0.0};
    std::vector<int> steps;
    if (a.steps.empty()) {
      for (int s = 1; s <= scale.period_steps; ++s) steps.push_back(s);
    } else {
      const auto [lo, hi] = ParseRange(a.steps);
      if (lo < 1) throw UsageError("--steps must start at 1 or above");
      for (int s = lo; s <= hi; ++s) steps.push_back(s);
    }
    std::ostringstream csv;
    csv << "base_hz,step,alpha,normalized,raw\n";
    for (const DissonanceCurve& c : curves) {
      for (const StepDissonance& d :
           DissonanceAtSteps(spectrum, c.base_frequency, scale, steps, model,
                             c.normalization)) {
        csv << FormatDouble(c.base_frequency) << ',' << d.step << ','
            << FormatDouble(d.alpha, ctx.decimals()) << ','
            << FormatDouble(d.normalized, ctx.decimals()) << ','
            << FormatDouble(d.raw, ctx.decimals()) << '\n';
      }
    }
    for (int s : steps) markers.push_back(scale.PredictedRatio(s));
    ctx.Emit("steps.csv", csv.str());
  }
  if (ctx.svg()) {
    ctx.Emit("family.svg", LinePlotSvg(series, "alpha",
                                       "normalized dissonance", markers));
  }
}

struct TuningArgs {
  std::vector<std::string> records;
  std::vector<int> periods = {7, 8, 9};
  std::string estimator = "arithmetic";
  int max_distance = 7;
};

void RunFitScale(const TuningArgs& a, Context& ctx) {
  const PeriodEstimator estimator = a.estimator == "geometric"
                                        ? PeriodEstimator::kGeometricMean
                                        : PeriodEstimator::kArithmeticMean;
  const int max_period = *std::max_element(a.periods.begin(), a.periods.end());
  const int d = ctx.decimals();
  std::ostringstream table;
  table << "id,distance,count,min,max,avg,sigma,theoretical,relative_error\n";
  std::ostringstream summary;
  summary << "id,period_steps,period_ratio,max_relative_error\n";
  for (const std::string& path : a.records) {
    const TuningRecord record = LoadRecord(path);
    const std::vector<RatioStats> rows = RatioTable(record, max_period);
    const IsotonicScale scale = FitIsotonic(rows, a.periods, estimator);
    for (const RatioStats& r : rows) {
      if (r.distance > scale.period_steps) continue;
      const double predicted = scale.PredictedRatio(r.distance);
      table << record.id << ',' << r.distance << ',' << r.count << ','
            << FormatDouble(r.min, d) << ',' << FormatDouble(r.max, d) << ','
            << FormatDouble(r.avg, d) << ',' << FormatDouble(r.sigma, d)
            << ',' << FormatDouble(predicted, d) << ','
            << FormatDouble(std::abs(predicted - r.avg) / r.avg, d) << '\n';
    }
    const std::string line =
        record.id + ',' + std::to_string(scale.period_steps) + ',' +
        FormatDouble(scale.period_ratio, d) + ',' +
        FormatDouble(scale.max_relative_error, d);
    summary << line << '\n';
    ctx.out() << record.id << ": p=" << scale.period_steps
              << " r_p=" << FormatDouble(scale.period_ratio, 4)
              << " max_relative_error="
              << FormatDouble(100.0 * scale.max_relative_error, 3) << "%\n";
  }
  ctx.Emit("scale.csv", table.str());
  ctx.Emit("scale_summary.csv", summary.str());
}

void RunRatios(const TuningArgs& a, Context& ctx) {
  const int d = ctx.decimals();
  std::ostringstream csv;
  csv << "id,distance,count,min,max,avg,sigma,geometric_mean\n";
  for (const std::string& path : a.records) {
    const TuningRecord record = LoadRecord(path);
    for (const RatioStats& r : RatioTable(record, a.max_distance)) {
      csv << record.id << ',' << r.distance << ',' << r.count << ','
          << FormatDouble(r.min, d) << ',' << FormatDouble(r.max, d) << ','
          << FormatDouble(r.avg, d) << ',' << FormatDouble(r.sigma, d) << ','
          << FormatDouble(r.geometric_mean, d) << '\n';
    }
  }
  ctx.Emit("ratios.csv", csv.str());
}

struct CentsArgs {
  std::optional<double> cents;
  std::optional<double> ratio;
  std::string deviations;
  std::string id;
  std::string maker;
  std::string place;
  std::string kind = "traditional";
};

void RunCents(const CentsArgs& a, Context& ctx) {
  const int count = (a.cents ? 1 : 0) + (a.ratio ? 1 : 0) +
                    (a.deviations.empty() ? 0 : 1);
  if (count != 1) {
    throw UsageError("give exactly one of --cents, --ratio, --deviations");
  }
  const int d = ctx.decimals();
  if (a.cents) {
    ctx.out() << "cents,ratio\n"
              << FormatDouble(*a.cents) << ','
              << FormatDouble(CentsToRatio(*a.cents), d) << '\n';
    return;
  }
  if (a.ratio) {
    if (!(*a.ratio > 0.0)) throw UsageError("--ratio must be positive");
    ctx.out() << "ratio,cents,semitones\n"
              << FormatDouble(*a.ratio) << ','
              << FormatDouble(RatioToCents(*a.ratio), d) << ','
              << SemitoneSize(*a.ratio) << '\n';
    return;
  }
  std::ifstream in = OpenInput(a.deviations);
  const std::vector<CentsDeviation> rows = ReadCentsDeviations(in);
  const std::string id =
      a.id.empty() ? fs::path(a.deviations).stem().string() : a.id;
  const TuningRecord record = ReconstructRecord(rows, id, a.maker, a.place,
                                                ParseTuningKind(a.kind));
  ctx.Emit(id + ".csv", Render([&](std::ostream& s) {
             WriteTuningRecord(record, s);
           }));
}

struct IntervalArgs {
  std::string manifest;
  std::string weighting = "occurrence";
  std::string averaging = "per-piece";
  bool include_unison = false;
};

void RunIntervals(const IntervalArgs& a, Context& ctx) {
  const std::vector<Piece> pieces = LoadCorpus(a.manifest);
  const Weighting weighting = a.weighting == "duration"
                                  ? Weighting::kDuration
                                  : Weighting::kOccurrence;
  std::vector<IntervalDistribution> columns;
  for (const Piece& p : pieces) columns.push_back(Probabilities(p, weighting));
  const IntervalDistribution average = CorpusAverage(
      pieces, weighting,
      a.averaging == "pooled" ? Averaging::kPooled : Averaging::kPerPiece);
  ctx.Emit("intervals.csv", Render([&](std::ostream& s) {
             WriteIntervalTableCsv(pieces, columns, average, s,
                                   ctx.decimals(), a.include_unison);
           }));
}

struct SchemeArgs {
  std::string scale;
  std::string sizes = "14:24";
  int max_distance = 7;
  std::string pattern;
  bool derive = false;
};

void RunScheme(const SchemeArgs& a, Context& ctx) {
  const ScaleKind kind = ParseScaleKind(a.scale);
  const auto [lo, hi] = ParseRange(a.sizes);
  if (lo < 2) throw UsageError("--sizes must start at 2 or above");
  SchemePattern pattern = CanonicalPattern(kind);
  if (a.derive) {
    const std::vector<SchemePattern> found =
        DerivePatterns(ReferenceCounts(kind), kind);
    ctx.out() << "patterns reproducing the reference counts:\n";
    for (const SchemePattern& p : found) ctx.out() << "  " << p.ToString() << '\n';
    pattern = found.front();
  }
  if (!a.pattern.empty()) pattern = SchemePattern::Parse(a.pattern);
  ctx.out() << "pattern " << pattern.ToString() << '\n';
  const SchemeCountTable table = CountTable(pattern, lo, hi, a.max_distance);
  ctx.Emit("scheme_" + std::string(ScaleKindName(kind)) + ".csv",
           Render([&](std::ostream& s) { WriteSchemeCountsCsv(table, s); }));
}

struct AnalyzeArgs {
  std::vector<std::string> wavs;
  std::string policy = "largest";
  double bin_width = 0.25;
  std::size_t window = 0;
};

void RunAnalyze(const AnalyzeArgs& a, Context& ctx) {
  AnalysisOptions options;
  options.fundamental = FundamentalPolicy::Parse(a.policy);
  options.window_length = a.window;
  std::vector<AudioClip> clips;
  for (const std::string& path : a.wavs) clips.push_back(ReadWavFile(path));
  const std::vector<MeasuredSpectrum> spectra = AnalyzeClips(clips, options);
  std::map<std::string, int> seen;
  for (const MeasuredSpectrum& s : spectra) {
    std::string name = s.id;
    if (const int n = seen[s.id]++; n > 0) name += "_" + std::to_string(n + 1);
    ctx.Emit(name + "_spectrum.csv", Render([&](std::ostream& o) {
               WriteMeasuredSpectrumCsv(s, o, ctx.decimals());
             }));
  }
  const OvertoneHistogram histogram =
      OvertoneRatioHistogram(spectra, a.bin_width);
  if (histogram.skipped_spectra > 0) {
    ctx.out() << "warning: " << histogram.skipped_spectra
              << " spectra without a fundamental were left out of the "
                 "histogram\n";
  }
  ctx.Emit("histogram.csv", Render([&](std::ostream& o) {
             WriteHistogramCsv(histogram, o, ctx.decimals());
           }));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dissonance curves, isotonic tuning fits, interval statistics "
               "and harmonic-scheme counts for marimba studies.",
               "isotone"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();

  CommonArgs common;
  std::function<void(Context&)> action;

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand(
      "curve", "Sample a dissonance curve and locate its extrema");
  AddCurveOptions(curve, curve_args);
  curve->add_option("--prominence", curve_args.prominence,
                    "Minimum prominence of reported extrema")
      ->check(CLI::NonNegativeNumber);
  AddCommonOptions(curve, common, true);
  curve->callback([&] { action = [&](Context& c) { RunCurve(curve_args, c); }; });

  CurveArgs derivative_args;
  CLI::App* derivative = app.add_subcommand(
      "derivative", "Slope dD/dalpha of a normalized dissonance curve");
  AddCurveOptions(derivative, derivative_args);
  AddCommonOptions(derivative, common, true);
  derivative->callback([&] {
    action = [&](Context& c) { RunDerivative(derivative_args, c); };
  });

  FamilyArgs family_args;
  CLI::App* family = app.add_subcommand(
      "family", "Curves over several base frequencies, jointly normalized");
  AddCurveOptions(family, family_args.curve);
  family->add_option("--bases", family_args.bases,
                     "Comma-separated base frequencies in Hz")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  family->add_option("--scale", family_args.scale,
                     "Isotonic scale for step markers, e.g. r7=2.0")
      ->check(Parses([](const std::string& v) { ParseScaleArg(v); },
                     "rP=VALUE"));
  family->add_option("--steps", family_args.steps,
                     "Step range lo:hi for markers (default 1:p)")
      ->check(Parses([](const std::string& v) { ParseRange(v); }, "LO:HI"));
  AddCommonOptions(family, common, true);
  family->callback([&] { action = [&](Context& c) { RunFamily(family_args, c); }; });

  TuningArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit-scale", "Fit an isotonic scale to tuning records");
  fit->add_option("records", fit_args.records, "Tuning record CSV files")
      ->required();
  fit->add_option("--periods", fit_args.periods, "Candidate periods")
      ->delimiter(',')
      ->check(CLI::Range(1, 64));
  fit->add_option("--estimator", fit_args.estimator,
                  "Period-ratio estimator")
      ->check(CLI::IsMember({"arithmetic", "geometric"}));
  AddCommonOptions(fit, common, false);
  fit->callback([&] { action = [&](Context& c) { RunFitScale(fit_args, c); }; });

  TuningArgs ratio_args;
  CLI::App* ratios = app.add_subcommand(
      "ratios", "Per-distance frequency-ratio statistics");
  ratios->add_option("records", ratio_args.records, "Tuning record CSV files")
      ->required();
  ratios->add_option("--max-distance", ratio_args.max_distance,
                     "Largest bar distance")
      ->check(CLI::Range(1, 1000));
  AddCommonOptions(ratios, common, false);
  ratios->callback([&] { action = [&](Context& c) { RunRatios(ratio_args, c); }; });

  CentsArgs cents_args;
  CLI::App* cents = app.add_subcommand(
      "cents", "Cents/ratio conversion and tuning reconstruction");
  cents->add_option("--cents", cents_args.cents, "Cents to convert to a ratio");
  cents->add_option("--ratio", cents_args.ratio, "Ratio to convert to cents")
      ->check(CLI::PositiveNumber);
  cents->add_option("--deviations", cents_args.deviations,
                    "CSV 'tempered_note_name,deviation_cents' to turn into a "
                    "tuning record");
  cents->add_option("--id", cents_args.id, "Record id (default: file stem)");
  cents->add_option("--maker", cents_args.maker, "Record maker");
  cents->add_option("--place", cents_args.place, "Record place");
  cents->add_option("--kind", cents_args.kind, "Record kind")
      ->check(CLI::IsMember({"traditional", "tempered"}, CLI::ignore_case));
  AddCommonOptions(cents, common, false);
  cents->callback([&] { action = [&](Context& c) { RunCents(cents_args, c); }; });

  IntervalArgs interval_args;
  CLI::App* intervals = app.add_subcommand(
      "intervals", "Harmonic-interval probabilities over a corpus");
  intervals->add_option("manifest", interval_args.manifest,
                        "Manifest with 'id,path' lines")
      ->required();
  intervals->add_option("--weighting", interval_args.weighting,
                        "Count occurrences or durations")
      ->check(CLI::IsMember({"occurrence", "duration"}));
  intervals->add_option("--averaging", interval_args.averaging,
                        "Mean of per-piece distributions or pooled events")
      ->check(CLI::IsMember({"per-piece", "pooled"}));
  intervals->add_flag("--include-unison", interval_args.include_unison,
                      "Add a row for size 0");
  AddCommonOptions(intervals, common, false);
  intervals->callback([&] {
    action = [&](Context& c) { RunIntervals(interval_args, c); };
  });

  SchemeArgs scheme_args;
  CLI::App* scheme = app.add_subcommand(
      "scheme", "Same-family bar pairs per distance for a harmonic scheme");
  scheme->add_option("--scale", scheme_args.scale, "Scheme scale")
      ->required()
      ->check(CLI::IsMember({"hexatonic", "pentatonic"}));
  scheme->add_option("--sizes", scheme_args.sizes, "Marimba sizes lo:hi")
      ->check(Parses([](const std::string& v) { ParseRange(v); }, "LO:HI"));
  scheme->add_option("--max-distance", scheme_args.max_distance,
                     "Largest bar distance")
      ->check(CLI::Range(1, 1000));
  scheme->add_option("--pattern", scheme_args.pattern,
                     "Explicit pattern such as 'ABABASX 5'")
      ->check(Parses([](const std::string& v) { SchemePattern::Parse(v); },
                     "LABELS OFFSET"));
  scheme->add_flag("--derive", scheme_args.derive,
                   "Search all labelings against the reference counts and "
                   "list the matches");
  AddCommonOptions(scheme, common, false);
  scheme->callback([&] { action = [&](Context& c) { RunScheme(scheme_args, c); }; });

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Spectral peaks of recorded bars and their ratio histogram");
  analyze->add_option("wavs", analyze_args.wavs, "WAV files")->required();
  analyze->add_option("--fundamental-policy", analyze_args.policy,
                      "largest, or lowest:THRESHOLD")
      ->check(Parses([](const std::string& v) { FundamentalPolicy::Parse(v); },
                     "POLICY"));
  analyze->add_option("--bin-width", analyze_args.bin_width,
                      "Histogram bin width in ratio units")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--window", analyze_args.window,
                      "FFT length, a power of two (0 = fit the gated segment)")
      ->check(Parses(
          [](const std::string& v) {
            AnalysisOptions o;
            o.window_length = static_cast<std::size_t>(ParseInt(v, "window"));
            o.Validate();
          },
          "N"));
  AddCommonOptions(analyze, common, false);
  analyze->callback([&] {
    action = [&](Context& c) { RunAnalyze(analyze_args, c); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* cmd = &app;
    for (CLI::App* sub : app.get_subcommands()) cmd = sub;
    err << cmd->help();
    return kExitUsage;
  }

  Context context(common, out);
  try {
    action(context);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace isotone::cli
