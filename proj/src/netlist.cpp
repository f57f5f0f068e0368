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
#include "cicsim/netlist.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cicsim/errors.hpp"

namespace cicsim {

namespace {

std::string sig(const char* base, int i) { return base + std::to_string(i); }

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::kAnd: return "and";
    case GateKind::kOr: return "or";
    case GateKind::kXor: return "xor";
  }
  return "?";
}

GateKind kind_from_name(const std::string& s) {
  if (s == "and") return GateKind::kAnd;
  if (s == "or") return GateKind::kOr;
  if (s == "xor") return GateKind::kXor;
  throw IoError("netlist: unknown gate kind '" + s + "'");
}

}  // namespace

Netlist emit_mcla_netlist(int width) {
  if (width < 4 || width > 64 || width % 4 != 0)
    throw ConfigError("netlist width must be a multiple of 4 in [4, 64], got " +
                      std::to_string(width));
  Netlist nl;
  for (int i = 0; i < width; ++i) nl.inputs.push_back(sig("a", i));
  for (int i = 0; i < width; ++i) nl.inputs.push_back(sig("b", i));
  nl.inputs.push_back("c0");
  for (int i = 0; i < width; ++i) nl.outputs.push_back(sig("s", i));
  nl.outputs.push_back("cout");

  auto gate = [&nl](GateKind k, std::string out,
                    std::initializer_list<std::string> ins) {
    nl.gates.push_back(Gate{k, std::move(out), std::vector<std::string>(ins)});
  };

  for (int base = 0; base < width; base += 4) {
    const int blk = base / 4;
    const std::string p[4] = {sig("p", base), sig("p", base + 1),
                              sig("p", base + 2), sig("p", base + 3)};
    const std::string g[4] = {sig("g", base), sig("g", base + 1),
                              sig("g", base + 2), sig("g", base + 3)};
    // Carry into bit j is named c<j>; block 0's carry-in is the c0 port.
    const std::string cin = sig("c", base);
    const std::string c1 = sig("c", base + 1);
    const std::string c2 = sig("c", base + 2);
    const std::string c3 = sig("c", base + 3);
    const bool last = base + 4 == width;
    const std::string c4 = last ? "cout" : sig("c", base + 4);

    for (int i = 0; i < 4; ++i) {
      gate(GateKind::kXor, p[i], {sig("a", base + i), sig("b", base + i)});
      gate(GateKind::kAnd, g[i], {sig("a", base + i), sig("b", base + i)});
    }

    // c1 = g0 + p0 c0
    gate(GateKind::kAnd, c1 + "_t0", {p[0], cin});
    gate(GateKind::kOr, c1, {g[0], c1 + "_t0"});
    // c2 = g1 + p1 g0 + p1 p0 c0
    gate(GateKind::kAnd, c2 + "_t0", {p[1], g[0]});
    gate(GateKind::kAnd, c2 + "_t1", {p[1], p[0], cin});
    gate(GateKind::kOr, c2, {g[1], c2 + "_t0", c2 + "_t1"});
    // c3 = g2 + p2 g1 + p2 p1 g0 + p2 p1 p0 c0
    gate(GateKind::kAnd, c3 + "_t0", {p[2], g[1]});
    gate(GateKind::kAnd, c3 + "_t1", {p[2], p[1], g[0]});
    gate(GateKind::kAnd, c3 + "_t2", {p[2], p[1], p[0], cin});
    gate(GateKind::kOr, c3, {g[2], c3 + "_t0", c3 + "_t1", c3 + "_t2"});

    // Group propagate/generate feeding the look-ahead block.
    const std::string gp = sig("gp", blk);
    const std::string gg = sig("gg", blk);
    gate(GateKind::kAnd, gp, {p[3], p[2], p[1], p[0]});
    gate(GateKind::kAnd, gg + "_t0", {p[3], g[2]});
    gate(GateKind::kAnd, gg + "_t1", {p[3], p[2], g[1]});
    gate(GateKind::kAnd, gg + "_t2", {p[3], p[2], p[1], g[0]});
    gate(GateKind::kOr, gg, {g[3], gg + "_t0", gg + "_t1", gg + "_t2"});
    // c4 = G_G + P_G c0
    gate(GateKind::kAnd, c4 + "_t0", {gp, cin});
    gate(GateKind::kOr, c4, {gg, c4 + "_t0"});

    // Sum bits: s_i = p_i ^ c_i.
    gate(GateKind::kXor, sig("s", base), {p[0], cin});
    gate(GateKind::kXor, sig("s", base + 1), {p[1], c1});
    gate(GateKind::kXor, sig("s", base + 2), {p[2], c2});
    gate(GateKind::kXor, sig("s", base + 3), {p[3], c3});
  }
  return nl;
}

std::string netlist_to_text(const Netlist& nl) {
  std::ostringstream os;
  for (const auto& i : nl.inputs) os << "input " << i << "\n";
  for (const auto& o : nl.outputs) os << "output " << o << "\n";
  for (const auto& g : nl.gates) {
    os << kind_name(g.kind) << " " << g.out;
    for (const auto& in : g.ins) os << " " << in;
    os << "\n";
  }
  return os.str();
}

Netlist netlist_from_text(const std::string& text) {
  Netlist nl;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "input") {
      std::string name;
      ls >> name;
      nl.inputs.push_back(name);
    } else if (head == "output") {
      std::string name;
      ls >> name;
      nl.outputs.push_back(name);
    } else {
      Gate g;
      g.kind = kind_from_name(head);
      ls >> g.out;
      std::string in;
      while (ls >> in) g.ins.push_back(in);
      if (g.out.empty() || g.ins.size() < 2)
        throw IoError("netlist: malformed gate line '" + line + "'");
      nl.gates.push_back(std::move(g));
    }
  }
  return nl;
}

void lint_netlist(const Netlist& nl) {
  std::unordered_set<std::string> defined(nl.inputs.begin(), nl.inputs.end());
  std::unordered_map<std::string, bool> used;
  for (const auto& g : nl.gates) {
    for (const auto& in : g.ins) {
      if (!defined.count(in))
        throw VerifyError("netlist: gate '" + g.out +
                          "' reads undefined signal '" + in + "'");
      used[in] = true;
    }
    if (defined.count(g.out))
      throw VerifyError("netlist: signal '" + g.out + "' assigned twice");
    defined.insert(g.out);
    used.emplace(g.out, false);
  }
  for (const auto& o : nl.outputs) {
    if (!defined.count(o))
      throw VerifyError("netlist: output port '" + o + "' never driven");
    used[o] = true;
  }
  for (const auto& [name, u] : used)
    if (!u)
      throw VerifyError("netlist: dangling signal '" + name + "'");
}

NetlistEval::NetlistEval(const Netlist& nl) {
  lint_netlist(nl);
  std::unordered_map<std::string, int> slot;
  for (const auto& i : nl.inputs) slot.emplace(i, static_cast<int>(slot.size()));
  num_inputs_ = static_cast<int>(slot.size());
  gates_.reserve(nl.gates.size());
  for (const auto& g : nl.gates) {
    CompiledGate cg;
    cg.kind = g.kind;
    for (const auto& in : g.ins) cg.ins.push_back(slot.at(in));
    slot.emplace(g.out, static_cast<int>(slot.size()));
    cg.out = slot.at(g.out);
    gates_.push_back(std::move(cg));
  }
  num_slots_ = static_cast<int>(slot.size());
  for (const auto& o : nl.outputs) output_slots_.push_back(slot.at(o));
}

std::vector<bool> NetlistEval::eval(const std::vector<bool>& in) const {
  if (static_cast<int>(in.size()) != num_inputs_)
    throw ContractError("netlist eval: expected " +
                        std::to_string(num_inputs_) + " inputs, got " +
                        std::to_string(in.size()));
  std::vector<char> v(num_slots_, 0);
  for (int i = 0; i < num_inputs_; ++i) v[i] = in[i];
  for (const auto& g : gates_) {
    char acc;
    switch (g.kind) {
      case GateKind::kAnd:
        acc = 1;
        for (int s : g.ins) acc = static_cast<char>(acc & v[s]);
        break;
      case GateKind::kOr:
        acc = 0;
        for (int s : g.ins) acc = static_cast<char>(acc | v[s]);
        break;
      case GateKind::kXor:
        acc = 0;
        for (int s : g.ins) acc = static_cast<char>(acc ^ v[s]);
        break;
    }
    v[g.out] = acc;
  }
  std::vector<bool> out;
  out.reserve(output_slots_.size());
  for (int s : output_slots_) out.push_back(v[s] != 0);
  return out;
}

NetlistAddOut eval_adder_netlist(const NetlistEval& ev, int width, uint64_t a,
                                 uint64_t b, bool c0) {
  std::vector<bool> in;
  in.reserve(2 * width + 1);
  for (int i = 0; i < width; ++i) in.push_back((a >> i) & 1u);
  for (int i = 0; i < width; ++i) in.push_back((b >> i) & 1u);
  in.push_back(c0);
  const auto out = ev.eval(in);
  NetlistAddOut r;
  for (int i = 0; i < width; ++i)
    r.sum |= static_cast<uint64_t>(out[i]) << i;
  r.cout = out[width];
  return r;
}

}  // namespace cicsim
