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

#ifndef ISOTONE_TOOLS_SVG_H_
#define ISOTONE_TOOLS_SVG_H_

#include <string>
#include <vector>

namespace isotone::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal line chart with axes, tick labels and a legend.
std::string LinePlotSvg(const std::vector<Series>& series,
                        const std::string& x_label,
                        const std::string& y_label,
                        const std::vector<double>& markers = {});

}  // namespace isotone::cli

#endif  // ISOTONE_TOOLS_SVG_H_
