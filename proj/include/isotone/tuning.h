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

#ifndef ISOTONE_TUNING_H_
#define ISOTONE_TUNING_H_

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isotone {

enum class TuningKind { kTraditional, kTempered };

std::string_view TuningKindName(TuningKind kind);
TuningKind ParseTuningKind(std::string_view name);

// One instrument: bar fundamentals from low to high. A missing entry is a
// bar whose fundamental could not be identified; pairs touching it are
// skipped by every statistic.
struct TuningRecord {
  std::string id;
  std::string maker;
  std::string place;
  TuningKind kind = TuningKind::kTraditional;
  std::vector<std::optional<double>> fundamentals;

  std::size_t PresentCount() const;
  // Present fundamentals must be finite, positive and strictly increasing.
  void Validate() const;
};

// Statistics of f[i + distance] / f[i] over all pairs with both bars present.
struct RatioStats {
  int distance = 0;
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double avg = 0.0;
  double sigma = 0.0;  // population standard deviation
  double geometric_mean = 0.0;
};

// Rows for distances 1..max_distance that have at least one pair. Throws
// InvalidInputError when fewer than two fundamentals are present.
std::vector<RatioStats> RatioTable(const TuningRecord& record,
                                   int max_distance);

// Equal steps in log-frequency: distance s predicts period_ratio^(s/p).
struct IsotonicScale {
  int period_steps = 7;
  double period_ratio = 2.0;
  double max_relative_error = 0.0;

  double PredictedRatio(double distance) const;
};

enum class PeriodEstimator { kArithmeticMean, kGeometricMean };

inline constexpr int kDefaultPeriods[] = {7, 8, 9};

// For each candidate p with pairs at distance p, r_p is the (arithmetic by
// default) mean ratio at that distance; the chosen p minimizes |r_p - 2|,
// ties going to the smaller p. max_relative_error is the worst
// |r_p^(s/p) - avg_s| / avg_s over the rows with distance s <= p.
IsotonicScale FitIsotonic(
    std::span<const RatioStats> table,
    std::span<const int> candidate_periods = kDefaultPeriods,
    PeriodEstimator estimator = PeriodEstimator::kArithmeticMean);

IsotonicScale FitIsotonic(
    const TuningRecord& record,
    std::span<const int> candidate_periods = kDefaultPeriods,
    PeriodEstimator estimator = PeriodEstimator::kArithmeticMean);

// 2^(cents / 1200) and its inverse.
double CentsToRatio(double cents);
double RatioToCents(double ratio);

// Tempered pitch corrected by a deviation in cents.
double ReconstructFrequency(double tempered_frequency, double deviation_cents);

// round(12 log2 ratio), halves rounded away from zero.
int SemitoneSize(double ratio);

// Scientific pitch notation ("A4", "C#5", "Bb3", "F##2") in twelve-tone
// equal temperament with the given A4.
double NoteFrequency(std::string_view note, double a4_frequency = 440.0);

struct CentsDeviation {
  std::string note;  // "*" marks an unidentified bar
  double cents = 0.0;
};

// CSV "tempered_note_name,deviation_cents"; a header row is optional.
std::vector<CentsDeviation> ReadCentsDeviations(std::istream& in);

TuningRecord ReconstructRecord(std::span<const CentsDeviation> deviations,
                               std::string id, std::string maker = "",
                               std::string place = "",
                               TuningKind kind = TuningKind::kTraditional);

// Header "id,maker,place,kind", one metadata line, an optional
// "index,frequency_hz" header, then one "index,frequency_hz" line per bar
// (empty or '*' frequency = missing bar).
TuningRecord ReadTuningRecord(std::istream& in);
void WriteTuningRecord(const TuningRecord& record, std::ostream& out);

void WriteRatioTableCsv(std::span<const RatioStats> table, std::ostream& out,
                        int decimals = -1);

}  // namespace isotone

#endif  // ISOTONE_TUNING_H_
