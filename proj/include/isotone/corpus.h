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

#ifndef ISOTONE_CORPUS_H_
#define ISOTONE_CORPUS_H_

#include <array>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace isotone {

// A harmonic interval: size in semitones and how long it sounds, in beats.
struct IntervalEvent {
  int size = 0;
  double duration = 1.0;
};

struct Piece {
  std::string id;
  std::string musician;
  std::vector<IntervalEvent> events;
};

// Bins 0..12 hold those sizes; bin 13 collects every size above 12.
inline constexpr int kLargestTabulatedSize = 12;
inline constexpr int kOverflowBin = kLargestTabulatedSize + 1;
inline constexpr int kNumIntervalBins = kOverflowBin + 1;
using IntervalDistribution = std::array<double, kNumIntervalBins>;

int IntervalBin(int size);
// "0".."12", then ">12".
std::string IntervalBinLabel(int bin);

// Each throws InvalidInputError for an empty piece or an invalid event.
IntervalDistribution OccurrenceProbabilities(const Piece& piece);
IntervalDistribution DurationProbabilities(const Piece& piece);

enum class Weighting { kOccurrence, kDuration };
enum class Averaging {
  kPerPiece,  // mean of the per-piece distributions
  kPooled,    // all events of all pieces treated as one piece
};

IntervalDistribution Probabilities(const Piece& piece, Weighting weighting);

IntervalDistribution CorpusAverage(std::span<const Piece> pieces,
                                   Weighting weighting,
                                   Averaging averaging = Averaging::kPerPiece);

// A note pair on a timeline. Converted to events in onset order; equal
// onsets keep their input order.
struct TimedInterval {
  double onset = 0.0;
  double duration = 1.0;
  int size = 0;
};

std::vector<IntervalEvent> EventsFromTimeline(
    std::span<const TimedInterval> timeline);

// Reads "onset_beats,duration_beats,size_semitones" rows (header optional).
std::vector<TimedInterval> ReadTimeline(std::istream& in);

// CSV "size_semitones,duration_beats" (header optional).
Piece ReadPiece(std::istream& in, std::string id = "");
void WritePiece(const Piece& piece, std::ostream& out);

struct ManifestEntry {
  std::string id;
  std::filesystem::path path;
  std::string musician;
};

// Lines "id,path[,musician]"; an "id,path" header is optional. Relative
// paths are resolved against `base_dir`.
std::vector<ManifestEntry> ReadManifest(std::istream& in,
                                        const std::filesystem::path& base_dir);
std::vector<Piece> LoadCorpus(const std::filesystem::path& manifest_path);

// One row per bin from size 1 (or 0 with include_unison) to ">12", one column
// per piece and a final "avg" column.
void WriteIntervalTableCsv(std::span<const Piece> pieces,
                           std::span<const IntervalDistribution> columns,
                           const IntervalDistribution& average,
                           std::ostream& out, int decimals = -1,
                           bool include_unison = false);

}  // namespace isotone

#endif  // ISOTONE_CORPUS_H_
