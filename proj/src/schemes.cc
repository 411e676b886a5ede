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

#include "isotone/schemes.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "isotone/errors.h"
#include "isotone/text_io.h"
#include "parallel.h"

namespace isotone {

namespace {

constexpr int kSchemePeriod = 7;
constexpr int kNumRoles = 4;
constexpr int kReferenceMinSize = 14;

constexpr BarRole kRoles[kNumRoles] = {BarRole::kFamilyA, BarRole::kFamilyB,
                                       BarRole::kShared, BarRole::kDiscarded};

bool InFamilyA(BarRole r) {
  return r == BarRole::kFamilyA || r == BarRole::kShared;
}
bool InFamilyB(BarRole r) {
  return r == BarRole::kFamilyB || r == BarRole::kShared;
}

SchemeCountTable MakeTable(const std::vector<std::vector<int>>& by_distance) {
  SchemeCountTable table;
  const std::size_t num_sizes = by_distance.front().size();
  for (std::size_t k = 0; k < num_sizes; ++k) {
    std::vector<int> counts;
    for (const auto& row : by_distance) counts.push_back(row[k]);
    table[kReferenceMinSize + static_cast<int>(k)] = counts;
  }
  return table;
}

SchemePattern FromLabelString(std::string_view labels, int offset) {
  SchemePattern p;
  for (char c : labels) p.labels.push_back(ParseBarRole(c));
  p.start_offset = offset;
  p.Validate();
  return p;
}

}  // namespace

char BarRoleSymbol(BarRole role) {
  switch (role) {
    case BarRole::kFamilyA: return 'A';
    case BarRole::kFamilyB: return 'B';
    case BarRole::kShared: return 'S';
    case BarRole::kDiscarded: return 'X';
  }
  return '?';
}

BarRole ParseBarRole(char symbol) {
  switch (std::toupper(static_cast<unsigned char>(symbol))) {
    case 'A': return BarRole::kFamilyA;
    case 'B': return BarRole::kFamilyB;
    case 'S': return BarRole::kShared;
    case 'X': return BarRole::kDiscarded;
  }
  throw InvalidInputError(std::string("unknown bar role '") + symbol + "'");
}

std::string_view ScaleKindName(ScaleKind kind) {
  return kind == ScaleKind::kHexatonic ? "hexatonic" : "pentatonic";
}

ScaleKind ParseScaleKind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "hexatonic") return ScaleKind::kHexatonic;
  if (lower == "pentatonic") return ScaleKind::kPentatonic;
  throw InvalidInputError("unknown scheme scale '" + std::string(name) + "'");
}

int DiscardedPerPeriod(ScaleKind kind) {
  return kind == ScaleKind::kHexatonic ? 1 : 2;
}

int SchemePattern::DiscardedCount() const {
  return static_cast<int>(
      std::count(labels.begin(), labels.end(), BarRole::kDiscarded));
}

BarRole SchemePattern::RoleAt(int bar) const {
  return labels[static_cast<std::size_t>((start_offset + bar) % period())];
}

void SchemePattern::ValidateShape() const {
  if (labels.empty()) throw InvalidInputError("pattern has no labels");
  if (start_offset < 0 || start_offset >= period()) {
    throw InvalidInputError("pattern offset must lie in [0, period)");
  }
}

void SchemePattern::Validate() const {
  ValidateShape();
  if (std::none_of(labels.begin(), labels.end(), InFamilyA) ||
      std::none_of(labels.begin(), labels.end(), InFamilyB)) {
    throw InvalidInputError("pattern needs at least one bar in each family");
  }
}

std::string SchemePattern::ToString() const {
  std::string out;
  for (BarRole r : labels) out.push_back(BarRoleSymbol(r));
  return out + ' ' + std::to_string(start_offset);
}

SchemePattern SchemePattern::Parse(std::string_view text) {
  const std::vector<std::string> fields = SplitFields(text);
  if (fields.empty() || fields.size() > 2) {
    throw InvalidInputError("pattern must look like 'ABABASX 5'");
  }
  const int offset =
      fields.size() == 2
          ? static_cast<int>(ParseInt(fields[1], "pattern offset"))
          : 0;
  return FromLabelString(fields[0], offset);
}

bool SameFamily(BarRole a, BarRole b) {
  return (InFamilyA(a) && InFamilyA(b)) || (InFamilyB(a) && InFamilyB(b));
}

std::map<int, int> PairCounts(const SchemePattern& pattern, int marimba_size,
                              int max_distance) {
  pattern.ValidateShape();
  if (marimba_size < 2) throw InvalidInputError("marimba needs >= 2 bars");
  if (max_distance < 1) throw InvalidInputError("max_distance must be >= 1");
  std::map<int, int> counts;
  for (int s = 1; s <= max_distance; ++s) {
    int n = 0;
    for (int i = 0; i + s < marimba_size; ++i) {
      if (SameFamily(pattern.RoleAt(i), pattern.RoleAt(i + s))) ++n;
    }
    counts[s] = n;
  }
  return counts;
}

const SchemeCountTable& ReferenceCounts(ScaleKind kind) {
  static const SchemeCountTable hexatonic = MakeTable({
      {1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3},
      {9, 10, 10, 11, 11, 12, 13, 14, 15, 15, 16},
      {4, 5, 5, 6, 7, 7, 7, 7, 8, 8, 9},
      {5, 6, 6, 6, 6, 7, 7, 8, 9, 9, 9},
      {6, 7, 7, 8, 9, 10, 11, 11, 12, 12, 13},
      {2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3},
      {6, 7, 7, 8, 9, 10, 11, 12, 13, 13, 14},
  });
  static const SchemeCountTable pentatonic = MakeTable({
      {2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3},
      {3, 4, 4, 4, 4, 4, 5, 5, 6, 6, 6},
      {5, 5, 6, 6, 7, 8, 8, 8, 8, 9, 9},
      {4, 5, 6, 6, 6, 6, 7, 7, 8, 9, 9},
      {3, 3, 3, 3, 4, 4, 5, 5, 5, 5, 5},
      {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2},
      {5, 6, 7, 7, 8, 9, 10, 10, 11, 12, 12},
  });
  return kind == ScaleKind::kHexatonic ? hexatonic : pentatonic;
}

SchemeCountTable CountTable(const SchemePattern& pattern, int min_size,
                            int max_size, int max_distance) {
  if (min_size > max_size) throw InvalidInputError("empty size range");
  SchemeCountTable table;
  for (int size = min_size; size <= max_size; ++size) {
    std::vector<int> row;
    for (const auto& [s, n] : PairCounts(pattern, size, max_distance)) {
      row.push_back(n);
    }
    table[size] = std::move(row);
  }
  return table;
}

std::vector<SchemePattern> DerivePatterns(const SchemeCountTable& table,
                                          ScaleKind kind) {
  if (table.empty()) throw InvalidInputError("empty count table");
  const std::size_t max_distance = table.begin()->second.size();
  for (const auto& [size, row] : table) {
    if (row.size() != max_distance || row.empty()) {
      throw InvalidInputError("count table rows must share one length");
    }
  }
  const int discarded = DiscardedPerPeriod(kind);
  std::size_t num_labelings = 1;
  for (int i = 0; i < kSchemePeriod; ++i) num_labelings *= kNumRoles;

  // Index order enumerates label strings lexicographically (A < B < S < X),
  // so concatenating per-index results keeps the output sorted.
  std::vector<std::vector<SchemePattern>> found(num_labelings);
  internal::ParallelFor(num_labelings, [&](std::size_t code) {
    SchemePattern p;
    p.labels.resize(kSchemePeriod);
    std::size_t rest = code;
    for (int pos = kSchemePeriod - 1; pos >= 0; --pos) {
      p.labels[pos] = kRoles[rest % kNumRoles];
      rest /= kNumRoles;
    }
    if (p.DiscardedCount() != discarded) return;
    if (std::none_of(p.labels.begin(), p.labels.end(), InFamilyA) ||
        std::none_of(p.labels.begin(), p.labels.end(), InFamilyB)) {
      return;
    }
    for (int offset = 0; offset < kSchemePeriod; ++offset) {
      p.start_offset = offset;
      bool match = true;
      for (const auto& [size, row] : table) {
        for (std::size_t d = 0; d < max_distance && match; ++d) {
          const int s = static_cast<int>(d) + 1;
          int n = 0;
          for (int i = 0; i + s < size; ++i) {
            if (SameFamily(p.RoleAt(i), p.RoleAt(i + s))) ++n;
          }
          match = n == row[d];
        }
        if (!match) break;
      }
      if (match) found[code].push_back(p);
    }
  });

  std::vector<SchemePattern> out;
  for (auto& v : found) {
    for (auto& p : v) out.push_back(std::move(p));
  }
  if (out.empty()) {
    throw DataInconsistencyError(
        std::string("no ") + std::string(ScaleKindName(kind)) +
        " labeling reproduces the pair-count table");
  }
  return out;
}

SchemePattern DeriveCanonicalPattern(ScaleKind kind) {
  return DerivePatterns(ReferenceCounts(kind), kind).front();
}

const SchemePattern& CanonicalPattern(ScaleKind kind) {
  static const SchemePattern hexatonic = FromLabelString("ABABASX", 5);
  static const SchemePattern pentatonic = FromLabelString("ABSXABX", 4);
  return kind == ScaleKind::kHexatonic ? hexatonic : pentatonic;
}

void WriteSchemeCountsCsv(const SchemeCountTable& table, std::ostream& out) {
  if (table.empty()) throw InvalidInputError("empty count table");
  out << "distance";
  for (const auto& [size, row] : table) out << ',' << size;
  out << '\n';
  const std::size_t rows = table.begin()->second.size();
  for (std::size_t d = 0; d < rows; ++d) {
    out << d + 1;
    for (const auto& [size, row] : table) {
      out << ',' << (d < row.size() ? std::to_string(row[d]) : "");
    }
    out << '\n';
  }
}

}  // namespace isotone
