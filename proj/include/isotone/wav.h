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

#ifndef ISOTONE_WAV_H_
#define ISOTONE_WAV_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace isotone {

struct AudioClip {
  std::vector<double> samples;  // mono, nominally in [-1, 1]
  int sample_rate = 48000;
  std::string id;

  // Non-empty, finite samples in [-1, 1] and sample_rate >= 8000.
  void Validate() const;
};

enum class WavEncoding { kPcm16, kFloat32 };

// RIFF/WAVE with 16-bit PCM or 32-bit float data (plain or extensible
// format tag). Channels are averaged to mono. Throws InvalidInputError on
// malformed or unsupported input.
AudioClip ReadWav(std::istream& in, std::string id = "");
AudioClip ReadWavFile(const std::filesystem::path& path);

// Mono output; PCM samples are clipped to [-1, 1] before quantization.
void WriteWav(const AudioClip& clip, std::ostream& out,
              WavEncoding encoding = WavEncoding::kPcm16);
void WriteWavFile(const AudioClip& clip, const std::filesystem::path& path,
                  WavEncoding encoding = WavEncoding::kPcm16);

}  // namespace isotone

#endif  // ISOTONE_WAV_H_
