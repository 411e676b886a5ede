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

#include "test_util.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isotone::testing {

namespace {

std::vector<std::vector<std::string>> ReadCsv(const std::string& name) {
  std::ifstream in(TestDataDir() / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

std::filesystem::path TestDataDir() { return ISOTONE_TEST_DATA_DIR; }

std::map<PublishedKey, std::vector<RatioStats>> LoadRatioTables() {
  std::map<PublishedKey, std::vector<RatioStats>> out;
  for (const auto& f : ReadCsv("ratio_tables.csv")) {
    RatioStats r;
    r.distance = std::stoi(f[2]);
    r.count = 1;
    r.min = std::stod(f[3]);
    r.max = std::stod(f[4]);
    r.avg = std::stod(f[5]);
    r.sigma = std::stod(f[6]);
    r.geometric_mean = r.avg;
    out[{f[0], f[1]}].push_back(r);
  }
  return out;
}

std::map<PublishedKey, std::map<int, double>> LoadIsotonicScales() {
  std::map<PublishedKey, std::map<int, double>> out;
  for (const auto& f : ReadCsv("isotonic_scales.csv")) {
    out[{f[0], f[1]}][std::stoi(f[2])] = std::stod(f[3]);
  }
  return out;
}

std::map<std::string, std::vector<double>> LoadIntervalTargets() {
  std::ifstream in(TestDataDir() / "interval_targets.csv");
  std::string line;
  std::vector<std::string> names;
  std::map<std::string, std::vector<double>> out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (names.empty()) {
      names = fields;
      continue;
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      out[names[i]].push_back(std::stod(fields[i]));
    }
  }
  return out;
}

double OraclePair(double f1, double a1, double f2, double a2, int model) {
  const double lo = f1 < f2 ? f1 : f2;
  const double hi = f1 < f2 ? f2 : f1;
  const double small = a1 < a2 ? a1 : a2;
  const double large = a1 < a2 ? a2 : a1;
  const double s = 0.24 / (0.0207 * lo + 18.96);
  const double shape = std::exp(-3.5 * s * (hi - lo)) -
                       std::exp(-5.75 * s * (hi - lo));
  double weight = 0.0;
  if (model == 0) {
    weight = small * large;
  } else if (model == 1) {
    weight = small + large == 0.0
                 ? 0.0
                 : 0.5 * std::pow(small * large, 0.1) *
                       std::pow(2.0 * small / (small + large), 3.11);
  } else {
    weight = std::pow(small, 0.6);
  }
  return weight * shape;
}

std::vector<double> HistogramPeaks(const OvertoneHistogram& histogram,
                                   double bin_width, double min_ratio,
                                   std::size_t count) {
  std::map<long, double> strength;
  for (const HistogramBin& b : histogram.bins) {
    if (b.center <= min_ratio) continue;
    strength[std::lround(b.center / bin_width - 0.5)] =
        b.mean_amplitude * static_cast<double>(b.count);
  }
  auto at = [&](long k) {
    const auto it = strength.find(k);
    return it == strength.end() ? 0.0 : it->second;
  };
  std::vector<std::pair<double, double>> peaks;  // (strength, center)
  for (const auto& [k, v] : strength) {
    if (v > at(k - 1) && v >= at(k + 1)) {
      peaks.emplace_back(v, (static_cast<double>(k) + 0.5) * bin_width);
    }
  }
  std::sort(peaks.rbegin(), peaks.rend());
  std::vector<double> out;
  for (std::size_t i = 0; i < std::min(count, peaks.size()); ++i) {
    out.push_back(peaks[i].second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isotone::testing
