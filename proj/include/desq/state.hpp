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

#ifndef DESQ_STATE_HPP
#define DESQ_STATE_HPP

#include <cstdint>
#include <vector>

#include "desq/gates.hpp"

namespace desq {

/// Dense state vector over n qubits. amps[i] is the amplitude of the basis
/// state whose bit k (of i) gives the value of qubit k.
struct StateVector {
  int n_qubits = 0;
  std::vector<cx> amps;

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, uint64_t index);

  double norm_sq() const;
  std::vector<double> probabilities() const;
};

/// Applies the gate in place. Throws on out-of-range qubit indices.
void apply_gate(StateVector& state, const GateOp& op);

/// Exact partial trace onto `keep` (at most 4 qubits). Returns the reduced
/// density matrix row-major, dimension 2^keep.size(); keep[0] is the
/// least-significant bit of the row/column index.
std::vector<cx> reduced_density(const StateVector& state,
                                const std::vector<int>& keep);

/// <Z_qubit> = P(qubit = 0) - P(qubit = 1).
double expectation_z(const StateVector& state, int qubit);
double expectation_x(const StateVector& state, int qubit);
double expectation_y(const StateVector& state, int qubit);

}  // namespace desq

#endif
