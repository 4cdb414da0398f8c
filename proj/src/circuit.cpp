// Copyright 2026 The desq authors
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

#include "desq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace desq {

namespace {
constexpr double kUnbound = std::numeric_limits<double>::quiet_NaN();
}

void Circuit::append(GateOp op) {
  for (int q : op.targets) {
    if (q < 0 || q >= n_qubits) throw std::out_of_range("target qubit");
  }
  for (int q : op.controls) {
    if (q < 0 || q >= n_qubits) throw std::out_of_range("control qubit");
  }
  ops.push_back(std::move(op));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) throw std::invalid_argument("circuit too wide");
  int base = int(ops.size());
  for (const GateOp& op : other.ops) ops.push_back(op);
  for (auto [op_idx, pos] : other.parameter_slots) {
    parameter_slots.emplace_back(base + op_idx, pos);
  }
}

int Circuit::append_slotted(GateOp op, int param_pos) {
  if (param_pos < 0 || param_pos >= int(op.params.size())) {
    throw std::invalid_argument("bad slot position");
  }
  op.params[param_pos] = kUnbound;
  ops.push_back(std::move(op));
  parameter_slots.emplace_back(int(ops.size()) - 1, param_pos);
  return int(parameter_slots.size()) - 1;
}

void Circuit::bind(const std::vector<double>& values) {
  if (values.size() != parameter_slots.size()) {
    throw std::invalid_argument("bind: wrong number of values");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    auto [op_idx, pos] = parameter_slots[i];
    ops[op_idx].params[pos] = values[i];
  }
}

void Circuit::unbind() {
  for (auto [op_idx, pos] : parameter_slots) ops[op_idx].params[pos] = kUnbound;
}

bool Circuit::fully_bound() const {
  for (auto [op_idx, pos] : parameter_slots) {
    if (std::isnan(ops[op_idx].params[pos])) return false;
  }
  return true;
}

Circuit Circuit::adjoint() const {
  Circuit out(n_qubits);
  out.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.ops.push_back(it->adjoint());
  }
  return out;
}

Circuit::Tally Circuit::tally() const {
  Tally t;
  // depth[q]: first free layer on wire q; run[q]: a 1q run on q is already
  // counted and may absorb further 1q gates until a multi-qubit gate lands.
  std::vector<long> depth(n_qubits, 0);
  std::vector<bool> run(n_qubits, false);
  for (const GateOp& op : ops) {
    std::vector<int> qs = op.targets;
    qs.insert(qs.end(), op.controls.begin(), op.controls.end());
    if (qs.size() == 1) {
      int q = qs[0];
      if (!run[q]) {
        ++t.one_qubit;
        run[q] = true;
        depth[q] += 1;
      }
      continue;
    }
    ++t.two_qubit;
    long layer = 0;
    for (int q : qs) layer = std::max(layer, depth[q]);
    for (int q : qs) {
      depth[q] = layer + 1;
      run[q] = false;
    }
  }
  t.depth = *std::max_element(depth.begin(), depth.end());
  return t;
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["n_qubits"] = n_qubits;
  j["ops"] = nlohmann::json::array();
  for (const GateOp& op : ops) {
    j["ops"].push_back({{"kind", gate_name(op.kind)},
                        {"targets", op.targets},
                        {"controls", op.controls},
                        {"params", op.params}});
  }
  nlohmann::json slots = nlohmann::json::array();
  for (auto [op_idx, pos] : parameter_slots) slots.push_back({op_idx, pos});
  j["parameter_slots"] = slots;
  return j.dump();
}

Circuit Circuit::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Circuit c(j.at("n_qubits").get<int>());
  for (const auto& jo : j.at("ops")) {
    GateOp op;
    op.kind = gate_from_name(jo.at("kind").get<std::string>());
    op.targets = jo.at("targets").get<std::vector<int>>();
    op.controls = jo.at("controls").get<std::vector<int>>();
    op.params = jo.at("params").get<std::vector<double>>();
    c.append(std::move(op));
  }
  if (j.contains("parameter_slots")) {
    for (const auto& js : j.at("parameter_slots")) {
      c.parameter_slots.emplace_back(js.at(0).get<int>(), js.at(1).get<int>());
    }
  }
  return c;
}

StateVector run_exact(const Circuit& circuit, const StateVector& initial) {
  if (initial.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("state/circuit width mismatch");
  }
  if (!circuit.fully_bound()) throw std::invalid_argument("unbound parameter slot");
  StateVector st = initial;
  for (const GateOp& op : circuit.ops) apply_gate(st, op);
  return st;
}

StateVector run_exact(const Circuit& circuit) {
  return run_exact(circuit, StateVector::zero_state(circuit.n_qubits));
}

}  // namespace desq
