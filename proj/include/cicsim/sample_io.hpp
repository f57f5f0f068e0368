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
#ifndef CICSIM_SAMPLE_IO_HPP_
#define CICSIM_SAMPLE_IO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cicsim/fixed_point.hpp"

// Binary sample file: 16-byte header (magic "CICS", version u16, width u8,
// one reserved byte, sample rate u64 in Hz, all little endian) followed by
// little-endian signed 32-bit samples.

namespace cicsim {

struct SampleData {
  int width = 0;
  uint64_t fs_hz = 0;
  std::vector<int64_t> samples;

  std::vector<FixedWord> to_words() const;
};

void write_samples(const std::string& path, int width, uint64_t fs_hz,
                   std::span<const int64_t> samples);
void write_samples(const std::string& path, int width, uint64_t fs_hz,
                   std::span<const FixedWord> samples);

SampleData read_samples(const std::string& path);

}  // namespace cicsim

#endif  // CICSIM_SAMPLE_IO_HPP_
