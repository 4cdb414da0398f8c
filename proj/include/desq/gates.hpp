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

#ifndef DESQ_GATES_HPP
#define DESQ_GATES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace desq {

using cx = std::complex<double>;

enum class GateKind {
  RX,
  RY,
  RZ,
  X,
  Z,
  H,
  U3,
  CNOT,
  CZ,
  CRY,
  PARTIAL_SWAP,
  PARTIAL_ISWAP,
};

const char* gate_name(GateKind kind);
GateKind gate_from_name(const std::string& name);

int gate_num_targets(GateKind kind);
int gate_num_controls(GateKind kind);
int gate_num_params(GateKind kind);

/// One gate application. `targets` and `controls` index qubits; qubit 0 is
/// the least-significant bit of a basis-state index everywhere in desq.
///
/// The matrix of a multi-qubit op is expressed over its qubit tuple
/// (targets..., controls...) with targets[0] as the least-significant bit of
/// the matrix index.
struct GateOp {
  GateKind kind;
  std::vector<int> targets;
  std::vector<int> controls;
  std::vector<double> params;

  int span() const { return int(targets.size() + controls.size()); }
  GateOp adjoint() const;
};

GateOp make_gate(GateKind kind, std::vector<int> targets,
                 std::vector<int> controls = {},
                 std::vector<double> params = {});

/// Dense row-major matrix over the op's qubit tuple, dimension 2^span.
/// Controls are folded in, so a CNOT comes back as a full 4x4.
std::vector<cx> gate_matrix(const GateOp& op);

/// max_ij |(U^dagger U - I)_ij| for the op's matrix.
double unitarity_defect(const GateOp& op);

}  // namespace desq

#endif
