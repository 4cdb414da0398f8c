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

#include "desq/state.hpp"

#include <cmath>
#include <stdexcept>

namespace desq {

StateVector StateVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, uint64_t index) {
  if (n_qubits < 1 || n_qubits > 26) throw std::invalid_argument("bad qubit count");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(uint64_t(1) << n_qubits, cx(0, 0));
  s.amps.at(index) = 1.0;
  return s;
}

double StateVector::norm_sq() const {
  double acc = 0;
  for (const cx& a : amps) acc += std::norm(a);
  return acc;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps.size());
  for (size_t i = 0; i < amps.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

namespace {

void apply_single(StateVector& st, int q, const cx* m) {
  const uint64_t n = st.amps.size();
  const uint64_t mask = uint64_t(1) << q;
  for (uint64_t i = 0; i < n; ++i) {
    if (i & mask) continue;
    cx a = st.amps[i], b = st.amps[i | mask];
    st.amps[i] = m[0] * a + m[1] * b;
    st.amps[i | mask] = m[2] * a + m[3] * b;
  }
}

// General two-qubit apply; matrix index bit 0 is qubit `q0`.
void apply_pair(StateVector& st, int q0, int q1, const cx* m) {
  const uint64_t n = st.amps.size();
  const uint64_t m0 = uint64_t(1) << q0, m1 = uint64_t(1) << q1;
  for (uint64_t i = 0; i < n; ++i) {
    if ((i & m0) || (i & m1)) continue;
    uint64_t idx[4] = {i, i | m0, i | m1, i | m0 | m1};
    cx v[4];
    for (int k = 0; k < 4; ++k) v[k] = st.amps[idx[k]];
    for (int r = 0; r < 4; ++r) {
      st.amps[idx[r]] = m[r * 4 + 0] * v[0] + m[r * 4 + 1] * v[1] +
                        m[r * 4 + 2] * v[2] + m[r * 4 + 3] * v[3];
    }
  }
}

}  // namespace

void apply_gate(StateVector& state, const GateOp& op) {
  for (int q : op.targets) {
    if (q < 0 || q >= state.n_qubits) throw std::out_of_range("target qubit");
  }
  for (int q : op.controls) {
    if (q < 0 || q >= state.n_qubits) throw std::out_of_range("control qubit");
  }
  for (double p : op.params) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite gate parameter");
  }

  if (op.span() == 1) {
    std::vector<cx> m = gate_matrix(op);
    apply_single(state, op.targets[0], m.data());
    return;
  }
  // Fast paths for the common controlled/diagonal pairs.
  const uint64_t n = state.amps.size();
  switch (op.kind) {
    case GateKind::CZ: {
      const uint64_t ma = uint64_t(1) << op.targets[0];
      const uint64_t mb = uint64_t(1) << op.targets[1];
      for (uint64_t i = 0; i < n; ++i) {
        if ((i & ma) && (i & mb)) state.amps[i] = -state.amps[i];
      }
      return;
    }
    case GateKind::CNOT:
    case GateKind::CRY: {
      std::vector<cx> k = gate_matrix(
          GateOp{op.kind == GateKind::CNOT ? GateKind::X : GateKind::RY,
                 {op.targets[0]},
                 {},
                 op.params});
      const uint64_t mc = uint64_t(1) << op.controls[0];
      const uint64_t mt = uint64_t(1) << op.targets[0];
      for (uint64_t i = 0; i < n; ++i) {
        if (!(i & mc) || (i & mt)) continue;
        cx a = state.amps[i & ~mt], b = state.amps[i];
        // i has control set and target set; partner is target clear.
        state.amps[i & ~mt] = k[0] * a + k[1] * b;
        state.amps[i] = k[2] * a + k[3] * b;
      }
      return;
    }
    default: {
      std::vector<cx> m = gate_matrix(op);
      apply_pair(state, op.targets[0], op.targets[1], m.data());
      return;
    }
  }
}

std::vector<cx> reduced_density(const StateVector& state,
                                const std::vector<int>& keep) {
  if (keep.size() > 4) throw std::invalid_argument("reduced_density: too many kept qubits");
  for (int q : keep) {
    if (q < 0 || q >= state.n_qubits) throw std::out_of_range("kept qubit");
  }
  const int kd = 1 << keep.size();
  std::vector<cx> rho(size_t(kd) * kd, cx(0, 0));
  const uint64_t n = state.amps.size();

  auto kept_bits = [&](uint64_t i) {
    int out = 0;
    for (size_t b = 0; b < keep.size(); ++b) out |= int((i >> keep[b]) & 1) << b;
    return out;
  };
  uint64_t keep_mask = 0;
  for (int q : keep) keep_mask |= uint64_t(1) << q;

  for (uint64_t i = 0; i < n; ++i) {
    if (std::norm(state.amps[i]) == 0.0) continue;
    const int r = kept_bits(i);
    const uint64_t rest = i & ~keep_mask;
    // Pair i with every j sharing the traced-out bits.
    for (int c = 0; c < kd; ++c) {
      uint64_t j = rest;
      for (size_t b = 0; b < keep.size(); ++b) {
        if ((c >> b) & 1) j |= uint64_t(1) << keep[b];
      }
      rho[size_t(r) * kd + c] += state.amps[i] * std::conj(state.amps[j]);
    }
  }
  return rho;
}

double expectation_z(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits) throw std::out_of_range("qubit");
  const uint64_t mask = uint64_t(1) << qubit;
  double acc = 0;
  for (uint64_t i = 0; i < state.amps.size(); ++i) {
    double p = std::norm(state.amps[i]);
    acc += (i & mask) ? -p : p;
  }
  return acc;
}

double expectation_x(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits) throw std::out_of_range("qubit");
  const uint64_t mask = uint64_t(1) << qubit;
  double acc = 0;
  for (uint64_t i = 0; i < state.amps.size(); ++i) {
    if (i & mask) continue;
    acc += 2 * std::real(std::conj(state.amps[i]) * state.amps[i | mask]);
  }
  return acc;
}

double expectation_y(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits) throw std::out_of_range("qubit");
  const uint64_t mask = uint64_t(1) << qubit;
  double acc = 0;
  for (uint64_t i = 0; i < state.amps.size(); ++i) {
    if (i & mask) continue;
    // <Y> = 2 Im(conj(a0) a1) with |1> carrying the +i component.
    acc += 2 * std::imag(std::conj(state.amps[i]) * state.amps[i | mask]);
  }
  return acc;
}

}  // namespace desq
