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

#ifndef ISOTONE_TESTS_TEST_UTIL_H_
#define ISOTONE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isotone/ingest.h"
#include "isotone/tuning.h"

namespace isotone::testing {

std::filesystem::path TestDataDir();

// (group, marimba) -> per-distance rows, as printed.
using PublishedKey = std::pair<std::string, std::string>;
std::map<PublishedKey, std::vector<RatioStats>> LoadRatioTables();
// (group, marimba) -> distance -> theoretical ratio, as printed.
std::map<PublishedKey, std::map<int, double>> LoadIsotonicScales();

// Column name (occ_1, dur_avg, ...) -> values for the bins 1..12, ">12".
std::map<std::string, std::vector<double>> LoadIntervalTargets();

// Pair roughness written directly from the model formulas, sharing no code
// with the library. model: 0 = a_max a_min, 1 = fluctuation-degree weight,
// 2 = Stevens-law loudness of the quieter tone.
double OraclePair(double f1, double a1, double f2, double a2, int model);

// Centers of the `count` strongest local maxima of a histogram, ignoring bins
// centered at or below `min_ratio`; strength is mean amplitude times count.
// Ascending.
std::vector<double> HistogramPeaks(const OvertoneHistogram& histogram,
                                   double bin_width, double min_ratio,
                                   std::size_t count);

}  // namespace isotone::testing

#endif  // ISOTONE_TESTS_TEST_UTIL_H_
