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

#ifndef ISOTONE_TEXT_IO_H_
#define ISOTONE_TEXT_IO_H_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace isotone {

// Splits one CSV record on commas and trims surrounding blanks. Quoting is
// not supported; none of the formats in this library need it.
std::vector<std::string> SplitCsvLine(std::string_view line);

// Splits on commas when present, otherwise on runs of blanks/tabs.
std::vector<std::string> SplitFields(std::string_view line);

// Reads the next line that is neither blank nor a '#' comment. Strips a
// trailing '\r'. Returns false at end of stream.
bool ReadDataLine(std::istream& in, std::string& line);

double ParseDouble(std::string_view field, std::string_view what);
long ParseInt(std::string_view field, std::string_view what);

// Shortest representation that round-trips when `decimals` < 0, otherwise
// fixed-point with that many decimals.
std::string FormatDouble(double value, int decimals = -1);

// Writes through a sibling temporary file and renames it over `path`.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

std::string ReadFileToString(const std::filesystem::path& path);

}  // namespace isotone

#endif  // ISOTONE_TEXT_IO_H_
