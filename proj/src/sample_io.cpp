/*
 * Copyright 2026 The cicsim Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "cicsim/sample_io.hpp"

#include <cstdio>
#include <memory>

#include "cicsim/errors.hpp"

namespace cicsim {

namespace {

constexpr char kMagic[4] = {'C', 'I', 'C', 'S'};
constexpr uint16_t kVersion = 1;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

void put_u16(unsigned char* p, uint16_t v) {
  p[0] = static_cast<unsigned char>(v & 0xff);
  p[1] = static_cast<unsigned char>(v >> 8);
}

void put_u64(unsigned char* p, uint64_t v) {
  for (int i = 0; i < 8; ++i)
    p[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
}

uint16_t get_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint64_t get_u64(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

void write_impl(const std::string& path, int width, uint64_t fs_hz,
                size_t count, auto&& sample_at) {
  if (width < 1 || width > 32)
    throw IoError("sample format holds widths 1..32, got " +
                  std::to_string(width) + " for '" + path + "'");
  File f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  unsigned char hdr[16] = {};
  hdr[0] = kMagic[0];
  hdr[1] = kMagic[1];
  hdr[2] = kMagic[2];
  hdr[3] = kMagic[3];
  put_u16(hdr + 4, kVersion);
  hdr[6] = static_cast<unsigned char>(width);
  hdr[7] = 0;
  put_u64(hdr + 8, fs_hz);
  if (std::fwrite(hdr, 1, sizeof hdr, f.get()) != sizeof hdr)
    throw IoError("write failed for '" + path + "'");
  for (size_t i = 0; i < count; ++i) {
    const int64_t v = sample_at(i);
    if (v < FixedWord::min_value(width) || v > FixedWord::max_value(width))
      throw IoError("sample " + std::to_string(i) + " out of range for " +
                    std::to_string(width) + "-bit file '" + path + "'");
    unsigned char b[4];
    const uint32_t u = static_cast<uint32_t>(v);
    for (int k = 0; k < 4; ++k)
      b[k] = static_cast<unsigned char>((u >> (8 * k)) & 0xff);
    if (std::fwrite(b, 1, 4, f.get()) != 4)
      throw IoError("write failed for '" + path + "'");
  }
  if (std::fflush(f.get()) != 0)
    throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::vector<FixedWord> SampleData::to_words() const {
  std::vector<FixedWord> out;
  out.reserve(samples.size());
  for (int64_t v : samples) out.emplace_back(v, width);
  return out;
}

void write_samples(const std::string& path, int width, uint64_t fs_hz,
                   std::span<const int64_t> samples) {
  write_impl(path, width, fs_hz, samples.size(),
             [&](size_t i) { return samples[i]; });
}

void write_samples(const std::string& path, int width, uint64_t fs_hz,
                   std::span<const FixedWord> samples) {
  write_impl(path, width, fs_hz, samples.size(),
             [&](size_t i) { return samples[i].value(); });
}

SampleData read_samples(const std::string& path) {
  File f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  unsigned char hdr[16];
  if (std::fread(hdr, 1, sizeof hdr, f.get()) != sizeof hdr)
    throw IoError("'" + path + "' is too short for a sample header");
  if (hdr[0] != kMagic[0] || hdr[1] != kMagic[1] || hdr[2] != kMagic[2] ||
      hdr[3] != kMagic[3])
    throw IoError("'" + path + "' has no CICS magic");
  if (get_u16(hdr + 4) != kVersion)
    throw IoError("'" + path + "' has unsupported version " +
                  std::to_string(get_u16(hdr + 4)));
  SampleData d;
  d.width = hdr[6];
  d.fs_hz = get_u64(hdr + 8);
  if (d.width < 1 || d.width > 32)
    throw IoError("'" + path + "' declares invalid width " +
                  std::to_string(d.width));
  unsigned char b[4];
  while (true) {
    const size_t got = std::fread(b, 1, 4, f.get());
    if (got == 0) break;
    if (got != 4) throw IoError("'" + path + "' has a truncated sample");
    uint32_t u = 0;
    for (int k = 0; k < 4; ++k) u |= static_cast<uint32_t>(b[k]) << (8 * k);
    d.samples.push_back(static_cast<int32_t>(u));
  }
  return d;
}

}  // namespace cicsim
