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

#ifndef ISOTONE_SCHEMES_H_
#define ISOTONE_SCHEMES_H_

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace isotone {

// Role of one bar within a harmonic scheme. A shared bar belongs to both
// families; a discarded bar to neither.
enum class BarRole { kFamilyA, kFamilyB, kShared, kDiscarded };

// 'A', 'B', 'S', 'X'.
char BarRoleSymbol(BarRole role);
BarRole ParseBarRole(char symbol);

enum class ScaleKind { kHexatonic, kPentatonic };

std::string_view ScaleKindName(ScaleKind kind);
ScaleKind ParseScaleKind(std::string_view name);
// Discarded bars per period: 1 for hexatonic, 2 for pentatonic.
int DiscardedPerPeriod(ScaleKind kind);

// A periodic labeling of the bars. Bar i (0 = lowest) has role
// labels[(start_offset + i) % period].
struct SchemePattern {
  std::vector<BarRole> labels;
  int start_offset = 0;

  int period() const { return static_cast<int>(labels.size()); }
  int DiscardedCount() const;
  BarRole RoleAt(int bar) const;

  // Non-empty labels and 0 <= start_offset < period.
  void ValidateShape() const;
  // ValidateShape plus at least one bar in each family.
  void Validate() const;

  // "ABABASX 5".
  std::string ToString() const;
  static SchemePattern Parse(std::string_view text);

  bool operator==(const SchemePattern&) const = default;
};

// Whether two bars may sound together: neither is discarded and they share a
// family.
bool SameFamily(BarRole a, BarRole b);

// distance -> number of unordered pairs (i, i + distance) of same-family bars
// on an instrument of `marimba_size` bars, for distance 1..max_distance.
// Only the pattern's shape is checked, so an all-discarded pattern yields
// zeros.
std::map<int, int> PairCounts(const SchemePattern& pattern, int marimba_size,
                              int max_distance = 7);

// marimba size -> counts for distances 1..N.
using SchemeCountTable = std::map<int, std::vector<int>>;

// Published pair counts for sizes 14..24 and distances 1..7.
const SchemeCountTable& ReferenceCounts(ScaleKind kind);

SchemeCountTable CountTable(const SchemePattern& pattern, int min_size,
                            int max_size, int max_distance = 7);

// Every period-7 labeling (with the kind's discarded count and both families
// present) and start offset whose counts equal `table` exactly, sorted by
// label string (A < B < S < X) and then offset. Throws
// DataInconsistencyError when nothing matches.
std::vector<SchemePattern> DerivePatterns(const SchemeCountTable& table,
                                          ScaleKind kind);

// First pattern of DerivePatterns over the reference table.
SchemePattern DeriveCanonicalPattern(ScaleKind kind);

// The patterns DeriveCanonicalPattern returns, stored so callers need not
// repeat the search.
const SchemePattern& CanonicalPattern(ScaleKind kind);

// Rows are distances, columns marimba sizes.
void WriteSchemeCountsCsv(const SchemeCountTable& table, std::ostream& out);

}  // namespace isotone

#endif  // ISOTONE_SCHEMES_H_
