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
#ifndef CICSIM_ERRORS_HPP_
#define CICSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cicsim {

// Bad user-supplied parameters (widths, factors, config keys).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// An API precondition was violated by the caller.
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// File read/write failure, always carries the offending path.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A self-check (adder sweep, netlist verification) found a mismatch.
class VerifyError : public std::runtime_error {
public:
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cicsim

#endif  // CICSIM_ERRORS_HPP_
