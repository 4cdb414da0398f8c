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

#ifndef DESQ_SAMPLING_HPP
#define DESQ_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "desq/circuit.hpp"

namespace desq {

/// One scalar drives the whole error model: depolarizing strength eps after
/// every 1-qubit gate, 2*eps after every 2-qubit gate, and a symmetric
/// readout flip of 10*eps (capped at 1/2) on every measured bit.
struct NoiseModel {
  double eps = 0.0;

  double one_qubit_rate() const { return eps; }
  double two_qubit_rate() const { return 2.0 * eps; }
  double readout_flip() const { return std::min(10.0 * eps, 0.5); }

  /// Probability of inserting a non-identity Pauli after a gate of the given
  /// span so the trajectory average is exactly the depolarizing channel
  /// rho -> (1-rate) rho + rate I/d.
  double pauli_insert_prob(int span) const {
    double rate = (span == 1) ? one_qubit_rate() : two_qubit_rate();
    double frac = (span == 1) ? 3.0 / 4.0 : 15.0 / 16.0;
    return std::min(1.0, rate * frac);
  }
};

struct ShotResult {
  int n_qubits = 0;
  uint64_t shots = 0;
  std::vector<uint64_t> bitstrings;
  std::unordered_map<uint64_t, uint64_t> counts;

  std::vector<double> frequencies() const;
};

/// Measures `shots` samples of the circuit output in the Z basis.
/// Without noise the exact output distribution is sampled directly. With
/// noise every shot is an independent Pauli-insertion trajectory and readout
/// bits are flipped independently. Deterministic under a fixed seed.
ShotResult sample_shots(const Circuit& circuit, const StateVector& initial,
                        uint64_t shots, const std::optional<NoiseModel>& noise,
                        uint64_t seed);

}  // namespace desq

#endif
