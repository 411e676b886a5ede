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

#include "isotone/tuning.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "isotone/errors.h"
#include "isotone/text_io.h"

namespace isotone {

namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](char x, char y) {
                      return std::tolower(static_cast<unsigned char>(x)) ==
                             std::tolower(static_cast<unsigned char>(y));
                    });
}

bool IsMissingField(std::string_view field) {
  return field.empty() || field == "*";
}

// Semitone offset of a natural note from C.
int NaturalOffset(char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    case 'B': return 11;
    default: return -1;
  }
}

}  // namespace

std::string_view TuningKindName(TuningKind kind) {
  return kind == TuningKind::kTempered ? "Tempered" : "Traditional";
}

TuningKind ParseTuningKind(std::string_view name) {
  if (EqualsIgnoreCase(name, "traditional")) return TuningKind::kTraditional;
  if (EqualsIgnoreCase(name, "tempered")) return TuningKind::kTempered;
  throw InvalidInputError("unknown tuning kind '" + std::string(name) + "'");
}

std::size_t TuningRecord::PresentCount() const {
  return static_cast<std::size_t>(
      std::count_if(fundamentals.begin(), fundamentals.end(),
                    [](const auto& f) { return f.has_value(); }));
}

void TuningRecord::Validate() const {
  double previous = 0.0;
  for (std::size_t i = 0; i < fundamentals.size(); ++i) {
    if (!fundamentals[i]) continue;
    const double f = *fundamentals[i];
    if (!std::isfinite(f) || f <= 0.0) {
      throw InvalidInputError("bar " + std::to_string(i) +
                              ": fundamental must be finite and positive");
    }
    if (f <= previous) {
      throw InvalidInputError("bar " + std::to_string(i) +
                              ": fundamentals must strictly increase");
    }
    previous = f;
  }
}

std::vector<RatioStats> RatioTable(const TuningRecord& record,
                                   int max_distance) {
  if (max_distance < 1) throw InvalidInputError("max_distance must be >= 1");
  record.Validate();
  if (record.PresentCount() < 2) {
    throw InvalidInputError("at least two fundamentals are required");
  }
  const auto& f = record.fundamentals;
  std::vector<RatioStats> table;
  for (int s = 1; s <= max_distance; ++s) {
    std::vector<double> ratios;
    for (std::size_t i = 0; i + s < f.size(); ++i) {
      if (f[i] && f[i + s]) ratios.push_back(*f[i + s] / *f[i]);
    }
    if (ratios.empty()) continue;
    RatioStats row;
    row.distance = s;
    row.count = ratios.size();
    row.min = *std::min_element(ratios.begin(), ratios.end());
    row.max = *std::max_element(ratios.begin(), ratios.end());
    double sum = 0.0;
    double log_sum = 0.0;
    for (double r : ratios) {
      sum += r;
      log_sum += std::log(r);
    }
    const double n = static_cast<double>(ratios.size());
    row.avg = sum / n;
    row.geometric_mean = std::exp(log_sum / n);
    double squares = 0.0;
    for (double r : ratios) squares += (r - row.avg) * (r - row.avg);
    row.sigma = std::sqrt(squares / n);
    table.push_back(row);
  }
  return table;
}

double IsotonicScale::PredictedRatio(double distance) const {
  return std::pow(period_ratio, distance / period_steps);
}

IsotonicScale FitIsotonic(std::span<const RatioStats> table,
                          std::span<const int> candidate_periods,
                          PeriodEstimator estimator) {
  IsotonicScale best;
  double best_gap = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int p : candidate_periods) {
    if (p < 1) throw InvalidInputError("candidate periods must be >= 1");
    const auto row = std::find_if(table.begin(), table.end(),
                                  [p](const RatioStats& r) {
                                    return r.distance == p && r.count > 0;
                                  });
    if (row == table.end()) continue;
    const double r_p = estimator == PeriodEstimator::kGeometricMean
                           ? row->geometric_mean
                           : row->avg;
    if (!(r_p > 0.0)) continue;
    const double gap = std::abs(r_p - 2.0);
    if (!found || gap < best_gap || (gap == best_gap && p < best.period_steps)) {
      best.period_steps = p;
      best.period_ratio = r_p;
      best_gap = gap;
      found = true;
    }
  }
  if (!found) {
    throw InvalidInputError("no candidate period has pairs at its distance");
  }
  best.max_relative_error = 0.0;
  for (const RatioStats& row : table) {
    if (row.distance < 1 || row.distance > best.period_steps) continue;
    const double predicted = best.PredictedRatio(row.distance);
    best.max_relative_error = std::max(
        best.max_relative_error, std::abs(predicted - row.avg) / row.avg);
  }
  return best;
}

IsotonicScale FitIsotonic(const TuningRecord& record,
                          std::span<const int> candidate_periods,
                          PeriodEstimator estimator) {
  int max_distance = 1;
  for (int p : candidate_periods) max_distance = std::max(max_distance, p);
  const std::vector<RatioStats> table = RatioTable(record, max_distance);
  return FitIsotonic(table, candidate_periods, estimator);
}

double CentsToRatio(double cents) { return std::exp2(cents / 1200.0); }

double RatioToCents(double ratio) {
  if (!(ratio > 0.0)) throw InvalidInputError("ratio must be positive");
  return 1200.0 * std::log2(ratio);
}

double ReconstructFrequency(double tempered_frequency,
                            double deviation_cents) {
  if (!std::isfinite(tempered_frequency) || tempered_frequency <= 0.0) {
    throw InvalidInputError("tempered frequency must be positive");
  }
  return tempered_frequency * CentsToRatio(deviation_cents);
}

int SemitoneSize(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw InvalidInputError("ratio must be finite and positive");
  }
  return static_cast<int>(std::round(12.0 * std::log2(ratio)));
}

double NoteFrequency(std::string_view note, double a4_frequency) {
  const std::string text(note);
  if (note.empty() || NaturalOffset(note[0]) < 0) {
    throw InvalidInputError("bad note name '" + text + "'");
  }
  int semitone = NaturalOffset(note[0]);
  std::size_t i = 1;
  for (; i < note.size() && (note[i] == '#' || note[i] == 'b'); ++i) {
    semitone += note[i] == '#' ? 1 : -1;
  }
  const long octave = ParseInt(note.substr(i), "octave of note '" + text + "'");
  const double midi = 12.0 * (static_cast<double>(octave) + 1.0) + semitone;
  return a4_frequency * std::exp2((midi - 69.0) / 12.0);
}

std::vector<CentsDeviation> ReadCentsDeviations(std::istream& in) {
  std::vector<CentsDeviation> out;
  std::string line;
  bool first = true;
  while (ReadDataLine(in, line)) {
    const auto fields = SplitCsvLine(line);
    if (first && fields.size() >= 1 &&
        EqualsIgnoreCase(fields[0], "tempered_note_name")) {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 2) {
      throw InvalidInputError("expected 'note,cents' but got '" + line + "'");
    }
    CentsDeviation d;
    d.note = fields[0];
    if (!IsMissingField(d.note)) d.cents = ParseDouble(fields[1], "cents");
    if (d.note.empty()) d.note = "*";
    out.push_back(std::move(d));
  }
  return out;
}

TuningRecord ReconstructRecord(std::span<const CentsDeviation> deviations,
                               std::string id, std::string maker,
                               std::string place, TuningKind kind) {
  TuningRecord record;
  record.id = std::move(id);
  record.maker = std::move(maker);
  record.place = std::move(place);
  record.kind = kind;
  for (const CentsDeviation& d : deviations) {
    if (IsMissingField(d.note)) {
      record.fundamentals.push_back(std::nullopt);
    } else {
      record.fundamentals.push_back(
          ReconstructFrequency(NoteFrequency(d.note), d.cents));
    }
  }
  record.Validate();
  return record;
}

TuningRecord ReadTuningRecord(std::istream& in) {
  std::string line;
  if (!ReadDataLine(in, line)) throw InvalidInputError("empty tuning record");
  auto fields = SplitCsvLine(line);
  if (fields.size() != 4 || fields[0] != "id") {
    throw InvalidInputError("expected header 'id,maker,place,kind'");
  }
  if (!ReadDataLine(in, line)) {
    throw InvalidInputError("tuning record lacks a metadata line");
  }
  fields = SplitCsvLine(line);
  if (fields.size() != 4) {
    throw InvalidInputError("metadata line needs 4 fields: '" + line + "'");
  }
  TuningRecord record;
  record.id = fields[0];
  record.maker = fields[1];
  record.place = fields[2];
  record.kind = ParseTuningKind(fields[3]);
  long expected_index = -1;
  while (ReadDataLine(in, line)) {
    fields = SplitCsvLine(line);
    if (fields.size() != 2) {
      throw InvalidInputError("expected 'index,frequency_hz' but got '" +
                              line + "'");
    }
    if (fields[0] == "index") continue;
    const long index = ParseInt(fields[0], "bar index");
    if (expected_index >= 0 && index != expected_index) {
      throw InvalidInputError("bar indices must be consecutive at '" + line +
                              "'");
    }
    expected_index = index + 1;
    if (IsMissingField(fields[1])) {
      record.fundamentals.push_back(std::nullopt);
    } else {
      record.fundamentals.push_back(ParseDouble(fields[1], "frequency_hz"));
    }
  }
  record.Validate();
  return record;
}

void WriteTuningRecord(const TuningRecord& record, std::ostream& out) {
  out << "id,maker,place,kind\n"
      << record.id << ',' << record.maker << ',' << record.place << ','
      << TuningKindName(record.kind) << "\nindex,frequency_hz\n";
  for (std::size_t i = 0; i < record.fundamentals.size(); ++i) {
    out << i + 1 << ',';
    if (record.fundamentals[i]) out << FormatDouble(*record.fundamentals[i]);
    out << '\n';
  }
}

void WriteRatioTableCsv(std::span<const RatioStats> table, std::ostream& out,
                        int decimals) {
  out << "distance,count,min,max,avg,sigma,geometric_mean\n";
  for (const RatioStats& r : table) {
    out << r.distance << ',' << r.count << ',' << FormatDouble(r.min, decimals)
        << ',' << FormatDouble(r.max, decimals) << ','
        << FormatDouble(r.avg, decimals) << ','
        << FormatDouble(r.sigma, decimals) << ','
        << FormatDouble(r.geometric_mean, decimals) << '\n';
  }
}

}  // namespace isotone
