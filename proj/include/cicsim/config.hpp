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
#ifndef CICSIM_CONFIG_HPP_
#define CICSIM_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Flat `key = value` run configuration with [section] headers and `#`
// comments.  Keys are addressed as "section.key"; command line flags
// override file entries.

namespace cicsim {

class Config {
public:
  Config() = default;

  static Config from_file(const std::string& path);

  void set(const std::string& dotted_key, const std::string& value);

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_str(const std::string& key,
                      const std::string& fallback) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;

  std::string require_str(const std::string& key) const;
  int64_t require_int(const std::string& key) const;

  // Comma-separated integer list, e.g. "25,22,20,18,16".
  std::optional<std::vector<int>> get_int_list(const std::string& key) const;

private:
  std::map<std::string, std::string> kv_;
};

}  // namespace cicsim

#endif  // CICSIM_CONFIG_HPP_
