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

#include "isotone/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "isotone/errors.h"
#include "isotone/text_io.h"

namespace isotone {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;
constexpr int kMinSampleRate = 8000;

std::uint32_t ReadU32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t ReadU16(const std::string& b, std::size_t at) {
  return static_cast<std::uint16_t>(
      static_cast<unsigned char>(b[at]) |
      static_cast<unsigned char>(b[at + 1]) << 8);
}

void PutU32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xFF),
                         static_cast<char>((v >> 8) & 0xFF),
                         static_cast<char>((v >> 16) & 0xFF),
                         static_cast<char>((v >> 24) & 0xFF)};
  out.write(bytes, 4);
}

void PutU16(std::ostream& out, std::uint16_t v) {
  const char bytes[2] = {static_cast<char>(v & 0xFF),
                         static_cast<char>((v >> 8) & 0xFF)};
  out.write(bytes, 2);
}

}  // namespace

void AudioClip::Validate() const {
  if (samples.empty()) throw InvalidInputError("audio clip has no samples");
  if (sample_rate < kMinSampleRate) {
    throw InvalidInputError("sample rate must be >= 8000 Hz");
  }
  for (double s : samples) {
    if (!std::isfinite(s) || s < -1.0 || s > 1.0) {
      throw InvalidInputError("audio samples must be finite and in [-1, 1]");
    }
  }
}

AudioClip ReadWav(std::istream& in, std::string id) {
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    throw InvalidInputError("not a RIFF/WAVE stream");
  }
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  std::size_t data_at = 0;
  std::size_t data_size = 0;
  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::string tag = bytes.substr(at, 4);
    const std::size_t size = ReadU32(bytes, at + 4);
    const std::size_t body = at + 8;
    if (tag == "fmt ") {
      if (size < 16 || body + size > bytes.size()) {
        throw InvalidInputError("truncated fmt chunk");
      }
      format = ReadU16(bytes, body);
      channels = ReadU16(bytes, body + 2);
      rate = ReadU32(bytes, body + 4);
      bits = ReadU16(bytes, body + 14);
      if (format == kFormatExtensible) {
        if (size < 26) throw InvalidInputError("truncated extensible format");
        format = ReadU16(bytes, body + 24);
      }
    } else if (tag == "data") {
      data_at = body;
      data_size = std::min(size, bytes.size() - body);
    }
    at = body + size + (size & 1);
  }
  if (channels == 0 || data_at == 0) {
    throw InvalidInputError("WAV stream lacks fmt or data chunk");
  }
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw InvalidInputError("only 16-bit PCM and 32-bit float WAV supported");
  }
  const std::size_t frame_bytes = channels * (bits / 8);
  const std::size_t frames = data_size / frame_bytes;

  AudioClip clip;
  clip.id = std::move(id);
  clip.sample_rate = static_cast<int>(rate);
  clip.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      const std::size_t pos = data_at + f * frame_bytes + c * (bits / 8);
      if (pcm16) {
        sum += static_cast<std::int16_t>(ReadU16(bytes, pos)) / 32768.0;
      } else {
        sum += static_cast<double>(std::bit_cast<float>(ReadU32(bytes, pos)));
      }
    }
    clip.samples[f] = sum / channels;
  }
  clip.Validate();
  return clip;
}

AudioClip ReadWavFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadWav(in, path.stem().string());
}

void WriteWav(const AudioClip& clip, std::ostream& out, WavEncoding encoding) {
  if (clip.samples.empty()) throw InvalidInputError("audio clip is empty");
  if (clip.sample_rate <= 0) throw InvalidInputError("bad sample rate");
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const std::uint16_t bits = pcm16 ? 16 : 32;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(clip.samples.size() * (bits / 8));
  out.write("RIFF", 4);
  PutU32(out, 36 + data_size);
  out.write("WAVEfmt ", 8);
  PutU32(out, 16);
  PutU16(out, pcm16 ? kFormatPcm : kFormatFloat);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(clip.sample_rate));
  PutU32(out, static_cast<std::uint32_t>(clip.sample_rate) * (bits / 8));
  PutU16(out, bits / 8);
  PutU16(out, bits);
  out.write("data", 4);
  PutU32(out, data_size);
  for (double s : clip.samples) {
    if (pcm16) {
      const double clipped = std::clamp(s, -1.0, 1.0);
      const long q = std::lround(clipped * 32767.0);
      PutU16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    } else {
      PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(s)));
    }
  }
}

void WriteWavFile(const AudioClip& clip, const std::filesystem::path& path,
                  WavEncoding encoding) {
  std::ostringstream buffer;
  WriteWav(clip, buffer, encoding);
  WriteFileAtomically(path, buffer.str());
}

}  // namespace isotone
