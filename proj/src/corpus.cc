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

#include "isotone/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "isotone/errors.h"
#include "isotone/text_io.h"

namespace isotone {

namespace {

void CheckEvent(const IntervalEvent& e) {
  if (e.size < 0) throw InvalidInputError("interval size must be >= 0");
  if (!std::isfinite(e.duration) || e.duration <= 0.0) {
    throw InvalidInputError("interval duration must be finite and > 0");
  }
}

IntervalDistribution Weighted(const Piece& piece, bool by_duration) {
  if (piece.events.empty()) {
    throw InvalidInputError("piece '" + piece.id + "' has no events");
  }
  IntervalDistribution dist{};
  double total = 0.0;
  for (const IntervalEvent& e : piece.events) {
    CheckEvent(e);
    const double w = by_duration ? e.duration : 1.0;
    dist[IntervalBin(e.size)] += w;
    total += w;
  }
  for (double& p : dist) p /= total;
  return dist;
}

bool IsHeader(const std::vector<std::string>& fields) {
  return !fields.empty() && !fields[0].empty() &&
         !(std::isdigit(static_cast<unsigned char>(fields[0][0])) ||
           fields[0][0] == '-' || fields[0][0] == '+' || fields[0][0] == '.');
}

}  // namespace

int IntervalBin(int size) {
  if (size < 0) throw InvalidInputError("interval size must be >= 0");
  return std::min(size, kOverflowBin);
}

std::string IntervalBinLabel(int bin) {
  if (bin < 0 || bin > kOverflowBin) {
    throw InvalidInputError("interval bin out of range");
  }
  if (bin == kOverflowBin) {
    return ">" + std::to_string(kLargestTabulatedSize);
  }
  return std::to_string(bin);
}

IntervalDistribution OccurrenceProbabilities(const Piece& piece) {
  return Weighted(piece, false);
}

IntervalDistribution DurationProbabilities(const Piece& piece) {
  return Weighted(piece, true);
}

IntervalDistribution Probabilities(const Piece& piece, Weighting weighting) {
  return Weighted(piece, weighting == Weighting::kDuration);
}

IntervalDistribution CorpusAverage(std::span<const Piece> pieces,
                                   Weighting weighting, Averaging averaging) {
  if (pieces.empty()) throw InvalidInputError("corpus has no pieces");
  if (averaging == Averaging::kPooled) {
    Piece pooled;
    pooled.id = "pooled";
    for (const Piece& p : pieces) {
      if (p.events.empty()) {
        throw InvalidInputError("piece '" + p.id + "' has no events");
      }
      pooled.events.insert(pooled.events.end(), p.events.begin(),
                           p.events.end());
    }
    return Probabilities(pooled, weighting);
  }
  IntervalDistribution mean{};
  for (const Piece& p : pieces) {
    const IntervalDistribution d = Probabilities(p, weighting);
    for (int b = 0; b < kNumIntervalBins; ++b) mean[b] += d[b];
  }
  for (double& v : mean) v /= static_cast<double>(pieces.size());
  return mean;
}

std::vector<IntervalEvent> EventsFromTimeline(
    std::span<const TimedInterval> timeline) {
  std::vector<TimedInterval> sorted(timeline.begin(), timeline.end());
  for (const TimedInterval& t : sorted) {
    if (!std::isfinite(t.onset)) throw InvalidInputError("onset not finite");
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TimedInterval& a, const TimedInterval& b) {
                     return a.onset < b.onset;
                   });
  std::vector<IntervalEvent> events;
  events.reserve(sorted.size());
  for (const TimedInterval& t : sorted) {
    IntervalEvent e{t.size, t.duration};
    CheckEvent(e);
    events.push_back(e);
  }
  return events;
}

std::vector<TimedInterval> ReadTimeline(std::istream& in) {
  std::vector<TimedInterval> out;
  std::string line;
  while (ReadDataLine(in, line)) {
    const auto fields = SplitCsvLine(line);
    if (out.empty() && IsHeader(fields)) continue;
    if (fields.size() != 3) {
      throw InvalidInputError("expected 'onset,duration,size' but got '" +
                              line + "'");
    }
    out.push_back({ParseDouble(fields[0], "onset"),
                   ParseDouble(fields[1], "duration"),
                   static_cast<int>(ParseInt(fields[2], "size"))});
  }
  return out;
}

Piece ReadPiece(std::istream& in, std::string id) {
  Piece piece;
  piece.id = std::move(id);
  std::string line;
  bool first = true;
  while (ReadDataLine(in, line)) {
    const auto fields = SplitCsvLine(line);
    if (first && IsHeader(fields)) {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 2) {
      throw InvalidInputError("expected 'size_semitones,duration_beats' but "
                              "got '" + line + "'");
    }
    IntervalEvent e{static_cast<int>(ParseInt(fields[0], "size_semitones")),
                    ParseDouble(fields[1], "duration_beats")};
    CheckEvent(e);
    piece.events.push_back(e);
  }
  return piece;
}

void WritePiece(const Piece& piece, std::ostream& out) {
  out << "size_semitones,duration_beats\n";
  for (const IntervalEvent& e : piece.events) {
    out << e.size << ',' << FormatDouble(e.duration) << '\n';
  }
}

std::vector<ManifestEntry> ReadManifest(std::istream& in,
                                        const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> out;
  std::string line;
  bool first = true;
  while (ReadDataLine(in, line)) {
    const auto fields = SplitCsvLine(line);
    if (first && fields.size() >= 2 && fields[0] == "id" &&
        fields[1] == "path") {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() < 2 || fields.size() > 3 || fields[1].empty()) {
      throw InvalidInputError("expected 'id,path[,musician]' but got '" +
                              line + "'");
    }
    ManifestEntry entry;
    entry.id = fields[0];
    entry.path = fields[1];
    if (entry.path.is_relative()) entry.path = base_dir / entry.path;
    if (fields.size() == 3) entry.musician = fields[2];
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Piece> LoadCorpus(const std::filesystem::path& manifest_path) {
  std::ifstream manifest(manifest_path);
  if (!manifest) {
    throw std::runtime_error("cannot open manifest " + manifest_path.string());
  }
  std::vector<Piece> pieces;
  for (const ManifestEntry& entry :
       ReadManifest(manifest, manifest_path.parent_path())) {
    std::ifstream in(entry.path);
    if (!in) throw std::runtime_error("cannot open " + entry.path.string());
    Piece piece = ReadPiece(in, entry.id);
    piece.musician = entry.musician;
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

void WriteIntervalTableCsv(std::span<const Piece> pieces,
                           std::span<const IntervalDistribution> columns,
                           const IntervalDistribution& average,
                           std::ostream& out, int decimals,
                           bool include_unison) {
  if (pieces.size() != columns.size()) {
    throw InvalidInputError("one distribution per piece is required");
  }
  out << "size";
  for (const Piece& p : pieces) out << ',' << p.id;
  out << ",avg\n";
  for (int b = include_unison ? 0 : 1; b < kNumIntervalBins; ++b) {
    out << IntervalBinLabel(b);
    for (const IntervalDistribution& d : columns) {
      out << ',' << FormatDouble(d[b], decimals);
    }
    out << ',' << FormatDouble(average[b], decimals) << '\n';
  }
}

}  // namespace isotone
