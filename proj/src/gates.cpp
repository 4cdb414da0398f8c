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

#include "desq/gates.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace desq {

namespace {
constexpr cx I1(0.0, 1.0);

struct GateInfo {
  const char* name;
  int targets;
  int controls;
  int params;
};

const GateInfo kInfo[] = {
    {"RX", 1, 0, 1},   {"RY", 1, 0, 1},    {"RZ", 1, 0, 1},
    {"X", 1, 0, 0},    {"Z", 1, 0, 0},     {"H", 1, 0, 0},
    {"U3", 1, 0, 3},   {"CNOT", 1, 1, 0},  {"CZ", 2, 0, 0},
    {"CRY", 1, 1, 1},  {"PARTIAL_SWAP", 2, 0, 1},
    {"PARTIAL_ISWAP", 2, 0, 1},
};

const GateInfo& info(GateKind k) { return kInfo[static_cast<int>(k)]; }

// 2x2 helpers, row-major {m00, m01, m10, m11}.
using M2 = std::array<cx, 4>;

M2 m2_mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 rx(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {cx(c, 0), -I1 * s, -I1 * s, cx(c, 0)};
}
M2 ry(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {cx(c, 0), cx(-s, 0), cx(s, 0), cx(c, 0)};
}
M2 rz(double t) {
  return {std::exp(-I1 * (t / 2)), 0, 0, std::exp(I1 * (t / 2))};
}

M2 single_qubit_matrix(const GateOp& op) {
  switch (op.kind) {
    case GateKind::RX: return rx(op.params[0]);
    case GateKind::RY: return ry(op.params[0]);
    case GateKind::RZ: return rz(op.params[0]);
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: {
      double h = 1.0 / std::sqrt(2.0);
      return {cx(h, 0), cx(h, 0), cx(h, 0), cx(-h, 0)};
    }
    case GateKind::U3:
      // U3(a, b, c) = Rz(a) Ry(b) Rz(c), rightmost applied first.
      return m2_mul(rz(op.params[0]), m2_mul(ry(op.params[1]), rz(op.params[2])));
    case GateKind::CRY:
      return ry(op.params[0]);
    default:
      throw std::logic_error("not a single-qubit kernel");
  }
}
}  // namespace

const char* gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_from_name(const std::string& name) {
  for (int k = 0; k < int(sizeof(kInfo) / sizeof(kInfo[0])); ++k) {
    if (name == kInfo[k].name) return static_cast<GateKind>(k);
  }
  throw std::invalid_argument("unknown gate kind: " + name);
}

int gate_num_targets(GateKind kind) { return info(kind).targets; }
int gate_num_controls(GateKind kind) { return info(kind).controls; }
int gate_num_params(GateKind kind) { return info(kind).params; }

GateOp make_gate(GateKind kind, std::vector<int> targets,
                 std::vector<int> controls, std::vector<double> params) {
  GateOp op{kind, std::move(targets), std::move(controls), std::move(params)};
  const GateInfo& gi = info(kind);
  if (int(op.targets.size()) != gi.targets ||
      int(op.controls.size()) != gi.controls ||
      int(op.params.size()) != gi.params) {
    throw std::invalid_argument(std::string("malformed gate: ") + gi.name);
  }
  for (double p : op.params) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite gate parameter");
  }
  for (int t : op.targets) {
    for (int c : op.controls) {
      if (t == c) throw std::invalid_argument("target and control overlap");
    }
  }
  return op;
}

GateOp GateOp::adjoint() const {
  GateOp out = *this;
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRY:
    case GateKind::PARTIAL_SWAP:
    case GateKind::PARTIAL_ISWAP:
      out.params[0] = -params[0];
      break;
    case GateKind::U3:
      // (Rz(a) Ry(b) Rz(c))^dagger = Rz(-c) Ry(-b) Rz(-a)
      out.params = {-params[2], -params[1], -params[0]};
      break;
    case GateKind::X:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::CNOT:
    case GateKind::CZ:
      break;
  }
  return out;
}

std::vector<cx> gate_matrix(const GateOp& op) {
  const int span = op.span();
  const int dim = 1 << span;
  std::vector<cx> m(size_t(dim) * dim, cx(0, 0));

  if (op.kind == GateKind::PARTIAL_SWAP || op.kind == GateKind::PARTIAL_ISWAP) {
    // Acts on the {01, 10} block of the (targets[0], targets[1]) pair;
    // index bit 0 is targets[0].
    double c = std::cos(op.params[0] / 2), s = std::sin(op.params[0] / 2);
    m[0 * 4 + 0] = 1;
    m[3 * 4 + 3] = 1;
    if (op.kind == GateKind::PARTIAL_SWAP) {
      m[1 * 4 + 1] = c;
      m[1 * 4 + 2] = s;
      m[2 * 4 + 1] = -s;
      m[2 * 4 + 2] = c;
    } else {
      m[1 * 4 + 1] = c;
      m[1 * 4 + 2] = -I1 * s;
      m[2 * 4 + 1] = -I1 * s;
      m[2 * 4 + 2] = c;
    }
    return m;
  }
  if (op.kind == GateKind::CZ) {
    for (int i = 0; i < 4; ++i) m[i * 4 + i] = (i == 3) ? -1 : 1;
    return m;
  }
  if (op.kind == GateKind::CNOT || op.kind == GateKind::CRY) {
    // Qubit tuple (target, control): control is matrix index bit 1.
    M2 k = (op.kind == GateKind::CNOT) ? M2{0, 1, 1, 0} : ry(op.params[0]);
    m[0 * 4 + 0] = 1;
    m[2 * 4 + 2] = 1;
    m[1 * 4 + 1] = k[0];
    m[1 * 4 + 3] = k[1];
    m[3 * 4 + 1] = k[2];
    m[3 * 4 + 3] = k[3];
    return m;
  }
  M2 k = single_qubit_matrix(op);
  m[0] = k[0];
  m[1] = k[1];
  m[2] = k[2];
  m[3] = k[3];
  return m;
}

double unitarity_defect(const GateOp& op) {
  std::vector<cx> m = gate_matrix(op);
  const int dim = 1 << op.span();
  double worst = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      cx acc(0, 0);
      for (int k = 0; k < dim; ++k) acc += std::conj(m[k * dim + i]) * m[k * dim + j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace desq
