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

#ifndef DESQ_CIRCUIT_HPP
#define DESQ_CIRCUIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "desq/gates.hpp"
#include "desq/state.hpp"

namespace desq {

/// Ordered gate list. Free parameters are declared as slots pointing at an
/// (op, param position); a slot is unbound while its param holds NaN.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;
  std::vector<std::pair<int, int>> parameter_slots;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void append(GateOp op);
  void append(const Circuit& other);

  /// Appends the gate and registers params[param_pos] as a free slot.
  int append_slotted(GateOp op, int param_pos);

  void bind(const std::vector<double>& values);
  void unbind();
  bool fully_bound() const;

  Circuit adjoint() const;

  /// Counts with consecutive single-qubit gates on the same wire compiled
  /// into one, the counting convention used for the circuit cost tables.
  struct Tally {
    long one_qubit = 0;
    long two_qubit = 0;
    long depth = 0;
  };
  Tally tally() const;

  std::string to_json() const;
  static Circuit from_json(const std::string& text);
};

/// Applies all ops in order to a copy of `initial`.
StateVector run_exact(const Circuit& circuit, const StateVector& initial);
StateVector run_exact(const Circuit& circuit);

}  // namespace desq

#endif
