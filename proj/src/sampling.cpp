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

#include "desq/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace desq {

namespace {

uint64_t sample_index(const std::vector<double>& cumulative, double u) {
  auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) return cumulative.size() - 1;
  return uint64_t(it - cumulative.begin());
}

std::vector<double> cumulative_of(const StateVector& st) {
  std::vector<double> c(st.amps.size());
  double acc = 0;
  for (size_t i = 0; i < st.amps.size(); ++i) {
    acc += std::norm(st.amps[i]);
    c[i] = acc;
  }
  return c;
}

void apply_pauli(StateVector& st, int which, int qubit) {
  // which: 0 -> X, 1 -> Y, 2 -> Z
  const uint64_t mask = uint64_t(1) << qubit;
  const cx i1(0, 1);
  for (uint64_t i = 0; i < st.amps.size(); ++i) {
    if (i & mask) continue;
    cx a = st.amps[i], b = st.amps[i | mask];
    switch (which) {
      case 0: st.amps[i] = b; st.amps[i | mask] = a; break;
      case 1: st.amps[i] = -i1 * b; st.amps[i | mask] = i1 * a; break;
      case 2: st.amps[i | mask] = -b; break;
    }
  }
}

}  // namespace

std::vector<double> ShotResult::frequencies() const {
  std::vector<double> f(uint64_t(1) << n_qubits, 0.0);
  for (const auto& [bits, c] : counts) f[bits] += double(c) / double(shots);
  return f;
}

ShotResult sample_shots(const Circuit& circuit, const StateVector& initial,
                        uint64_t shots, const std::optional<NoiseModel>& noise,
                        uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  ShotResult out;
  out.n_qubits = circuit.n_qubits;
  out.shots = shots;
  out.bitstrings.reserve(shots);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const bool noisy = noise.has_value() && noise->eps > 0.0;
  const double flip = noisy ? noise->readout_flip() : 0.0;

  auto record = [&](uint64_t bits) {
    if (flip > 0.0) {
      for (int q = 0; q < circuit.n_qubits; ++q) {
        if (unit(rng) < flip) bits ^= uint64_t(1) << q;
      }
    }
    out.bitstrings.push_back(bits);
    ++out.counts[bits];
  };

  if (!noisy) {
    StateVector final_state = run_exact(circuit, initial);
    std::vector<double> cum = cumulative_of(final_state);
    for (uint64_t s = 0; s < shots; ++s) record(sample_index(cum, unit(rng)));
    return out;
  }

  if (!circuit.fully_bound()) throw std::invalid_argument("unbound parameter slot");

  // Trajectory sampling. The clean (no insertion) trajectory is shared by
  // many shots, so its distribution is computed once.
  StateVector clean = run_exact(circuit, initial);
  std::vector<double> clean_cum = cumulative_of(clean);

  const size_t n_ops = circuit.ops.size();
  std::vector<double> insert_prob(n_ops);
  for (size_t g = 0; g < n_ops; ++g) {
    insert_prob[g] = noise->pauli_insert_prob(circuit.ops[g].span());
  }

  std::vector<int> hits;  // op indices whose insertion fired this shot
  std::vector<int> paulis;
  for (uint64_t s = 0; s < shots; ++s) {
    hits.clear();
    paulis.clear();
    for (size_t g = 0; g < n_ops; ++g) {
      if (unit(rng) < insert_prob[g]) {
        hits.push_back(int(g));
        int span = circuit.ops[g].span();
        if (span == 1) {
          paulis.push_back(int(unit(rng) * 3.0));  // uniform over X, Y, Z
        } else {
          // uniform over the 15 non-identity two-qubit Paulis
          int p = 1 + int(unit(rng) * 15.0);
          paulis.push_back(std::min(p, 15));
        }
      }
    }
    if (hits.empty()) {
      record(sample_index(clean_cum, unit(rng)));
      continue;
    }
    StateVector st = initial;
    size_t h = 0;
    for (size_t g = 0; g < n_ops; ++g) {
      apply_gate(st, circuit.ops[g]);
      if (h < hits.size() && hits[h] == int(g)) {
        const GateOp& op = circuit.ops[g];
        if (op.span() == 1) {
          apply_pauli(st, std::min(paulis[h], 2), op.targets[0]);
        } else {
          std::vector<int> qs = op.targets;
          qs.insert(qs.end(), op.controls.begin(), op.controls.end());
          int code = paulis[h];    // 1..15, base-4 digits (I,X,Y,Z) per qubit
          int p0 = code & 3, p1 = (code >> 2) & 3;
          if (p0 > 0) apply_pauli(st, p0 - 1, qs[0]);
          if (p1 > 0) apply_pauli(st, p1 - 1, qs[1]);
        }
        ++h;
      }
    }
    std::vector<double> cum = cumulative_of(st);
    record(sample_index(cum, unit(rng)));
  }
  return out;
}

}  // namespace desq
