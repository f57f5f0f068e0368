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
#ifndef CICSIM_NETLIST_HPP_
#define CICSIM_NETLIST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cicsim {

enum class GateKind { kAnd, kOr, kXor };

struct Gate {
  GateKind kind;
  std::string out;
  std::vector<std::string> ins;
};

// Combinational netlist over AND/OR/XOR gates.  Gates are stored in
// topological order: every gate input is a port or an earlier gate output.
struct Netlist {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Gate> gates;
};

// Structural form of the group look-ahead adder: ports a0..a{w-1},
// b0..b{w-1}, c0 / s0..s{w-1}, cout.  Width must be a multiple of 4.
Netlist emit_mcla_netlist(int width);

// One gate per line `<kind> <out> <in...>`, preceded by input/output port
// declarations.  UTF-8 text, LF line endings.
std::string netlist_to_text(const Netlist& nl);
Netlist netlist_from_text(const std::string& text);

// Checks topological order, single assignment, and that every gate output
// feeds a later gate or an output port.  Throws VerifyError on violation.
void lint_netlist(const Netlist& nl);

// Name-resolved evaluator over a fixed netlist.
class NetlistEval {
public:
  explicit NetlistEval(const Netlist& nl);

  // `in` holds one value per input port, in declaration order; the result
  // holds one value per output port, in declaration order.
  std::vector<bool> eval(const std::vector<bool>& in) const;

private:
  struct CompiledGate {
    GateKind kind;
    int out;
    std::vector<int> ins;
  };
  int num_inputs_;
  int num_slots_;
  std::vector<CompiledGate> gates_;
  std::vector<int> output_slots_;
};

struct NetlistAddOut {
  uint64_t sum = 0;
  bool cout = false;
};

// Drives an adder netlist with raw operand patterns.
NetlistAddOut eval_adder_netlist(const NetlistEval& ev, int width, uint64_t a,
                                 uint64_t b, bool c0);

}  // namespace cicsim

#endif  // CICSIM_NETLIST_HPP_
