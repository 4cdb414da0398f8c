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

#include "desq/unary.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace desq::unary {

namespace {
constexpr double kHalfPi = 1.57079632679489661923;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// CNOT(control -> target) rebuilt from two partial-iSWAP(pi) gates and six
// single-qubit rotations (angles in units of pi/2, verified to machine
// precision in the unit tests).
void append_cnot_from_iswaps(Circuit& c, int control, int target) {
  auto u3 = [&](int q, int a, int b, int d) {
    c.append(make_gate(GateKind::U3, {q}, {},
                       {a * kHalfPi, b * kHalfPi, d * kHalfPi}));
  };
  u3(control, 0, 1, 1);
  u3(target, 2, -1, 0);
  c.append(make_gate(GateKind::PARTIAL_ISWAP, {target, control}, {}, {M_PI}));
  u3(control, 0, -2, 1);
  u3(target, -1, -1, 0);
  c.append(make_gate(GateKind::PARTIAL_ISWAP, {target, control}, {}, {M_PI}));
  u3(control, -2, -1, 1);
  u3(target, 0, -1, 0);
}

void append_cry(Circuit& c, int control, int target, double theta, Native native) {
  switch (native) {
    case Native::RAW:
    case Native::PARTIAL_ISWAP:
      c.append(make_gate(GateKind::CRY, {target}, {control}, {theta}));
      break;
    case Native::CNOT:
      c.append(make_gate(GateKind::RY, {target}, {}, {theta / 2}));
      c.append(make_gate(GateKind::CNOT, {target}, {control}));
      c.append(make_gate(GateKind::RY, {target}, {}, {-theta / 2}));
      c.append(make_gate(GateKind::CNOT, {target}, {control}));
      break;
  }
}

// partial-SWAP(theta) on (a, b); the CNOT route is CX(b->a), cRy(-theta)
// from a onto b, CX(b->a).
void append_pswap(Circuit& c, int a, int b, double theta, Native native) {
  switch (native) {
    case Native::RAW:
      c.append(make_gate(GateKind::PARTIAL_SWAP, {a, b}, {}, {theta}));
      break;
    case Native::PARTIAL_ISWAP:
      c.append(make_gate(GateKind::PARTIAL_ISWAP, {a, b}, {}, {theta}));
      break;
    case Native::CNOT:
      c.append(make_gate(GateKind::CNOT, {a}, {b}));
      append_cry(c, a, b, -theta, Native::CNOT);
      c.append(make_gate(GateKind::CNOT, {a}, {b}));
      break;
  }
}
}  // namespace

DistributorAngles solve_distributor_angles(const std::vector<double>& probs) {
  const int n = int(probs.size());
  if (n < 2) throw std::invalid_argument("need at least 2 bins");
  double total = 0;
  for (double p : probs) {
    if (p < 0 || !std::isfinite(p)) throw std::invalid_argument("bad probability");
    total += p;
  }
  if (total <= 0) throw std::invalid_argument("all-zero probability vector");

  DistributorAngles out;
  out.n = n;
  out.thetas.assign(n - 1, 0.0);
  const int m = n / 2;

  // Upper side, edges inward: prefix[i] = p_0 + ... + p_i.
  // sin^2(theta_i / 2) = prefix[i-1] / prefix[i] for i < m, and
  // sin^2(theta_m / 2) = prefix[m-1] (the mass routed above the hub).
  std::vector<double> prefix(n);
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += probs[i] / total;
    prefix[i] = acc;
  }
  for (int i = 1; i <= m; ++i) {
    double ratio;
    if (i == m) {
      ratio = prefix[m - 1];
    } else if (prefix[i] <= 0) {
      ratio = 0.0;  // nothing flows this far out
      out.saturated_bins.push_back(i - 1);
    } else {
      ratio = prefix[i - 1] / prefix[i];
    }
    out.thetas[i - 1] = 2.0 * std::asin(std::sqrt(clamp01(ratio)));
  }
  // Lower side: suffix[i] = p_i + ... + p_{n-1};
  // sin^2(theta_i / 2) = suffix[i] / suffix[i-1] for i > m.
  std::vector<double> suffix(n + 1, 0.0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + probs[i] / total;
  for (int i = m + 1; i <= n - 1; ++i) {
    double ratio;
    if (suffix[i - 1] <= 0) {
      ratio = 0.0;
      out.saturated_bins.push_back(i);
    } else {
      ratio = suffix[i] / suffix[i - 1];
    }
    out.thetas[i - 1] = 2.0 * std::asin(std::sqrt(clamp01(ratio)));
  }
  return out;
}

DistributorAngles solve_distributor_angles(const market::PriceGrid& grid) {
  return solve_distributor_angles(grid.probs);
}

Circuit build_distributor(const DistributorAngles& angles, Native native) {
  const int n = angles.n;
  Circuit c(n);
  const int m = angles.middle();
  c.append(make_gate(GateKind::X, {m}));
  // Ladder steps move outwards; theta_i couples qubits (i-1, i).
  append_pswap(c, m - 1, m, angles.thetas[m - 1], native);
  for (int step = 1; step < n; ++step) {
    const int up = m - step;      // gate theta_up on (up-1, up)
    const int down = m + step;    // gate theta_down on (down-1, down)
    if (up >= 1) append_pswap(c, up - 1, up, angles.thetas[up - 1], native);
    if (down <= n - 1) append_pswap(c, down - 1, down, angles.thetas[down - 1], native);
    if (up < 1 && down > n - 1) break;
  }
  return c;
}

Circuit build_payoff(const market::PriceGrid& grid, double k, Native native) {
  const int n = grid.bins();
  Circuit c(n + 1);
  const double smax = grid.prices.back();
  if (smax <= k) return c;  // no bin pays; the ancilla stays |0>
  for (int i = 0; i < n; ++i) {
    if (grid.prices[i] <= k) continue;
    const double ratio = clamp01((grid.prices[i] - k) / (smax - k));
    const double phi = 2.0 * std::asin(std::sqrt(ratio));
    append_cry(c, i, n, phi, native);
  }
  return c;
}

Circuit build_ansatz(const market::PriceGrid& grid, double k, Native native) {
  DistributorAngles angles = solve_distributor_angles(grid);
  Circuit dist = build_distributor(angles, native);
  Circuit c(grid.bins() + 1);
  // Skip the initial X: A acts on the already-initialized one-hot state.
  for (size_t i = 1; i < dist.ops.size(); ++i) c.append(dist.ops[i]);
  c.append(build_payoff(grid, k, native));
  return c;
}

namespace {
void append_s_psi0(Circuit& c, int ancilla) {
  c.append(make_gate(GateKind::X, {ancilla}));
  c.append(make_gate(GateKind::Z, {ancilla}));
  c.append(make_gate(GateKind::X, {ancilla}));
}

void append_s0(Circuit& c, int init_qubit, int ancilla, Native native) {
  c.append(make_gate(GateKind::X, {ancilla}));
  c.append(make_gate(GateKind::H, {ancilla}));
  if (native == Native::PARTIAL_ISWAP) {
    append_cnot_from_iswaps(c, init_qubit, ancilla);
  } else {
    c.append(make_gate(GateKind::CNOT, {ancilla}, {init_qubit}));
  }
  c.append(make_gate(GateKind::H, {ancilla}));
  c.append(make_gate(GateKind::X, {ancilla}));
}
}  // namespace

Circuit build_grover(const market::PriceGrid& grid, double k, Native native) {
  const int n = grid.bins();
  const int ancilla = n;
  Circuit ansatz = build_ansatz(grid, k, native);
  Circuit c(n + 1);
  append_s_psi0(c, ancilla);
  c.append(ansatz.adjoint());
  append_s0(c, n / 2, ancilla, native);
  c.append(ansatz);
  return c;
}

Circuit build_full(const market::PriceGrid& grid, double k, int m,
                   Native native) {
  if (m < 0) throw std::invalid_argument("negative grover power");
  const int n = grid.bins();
  Circuit c(n + 1);
  c.append(make_gate(GateKind::X, {n / 2}));
  c.append(build_ansatz(grid, k, native));
  if (m > 0) {
    Circuit round = build_grover(grid, k, native);
    for (int i = 0; i < m; ++i) c.append(round);
  }
  return c;
}

PricedResult run_priced(const market::PriceGrid& grid, double k, int m,
                        Native native, uint64_t shots,
                        const std::optional<NoiseModel>& noise, uint64_t seed) {
  const int n = grid.bins();
  Circuit c = build_full(grid, k, m, native);
  ShotResult shot = sample_shots(c, StateVector::zero_state(n + 1), shots, noise, seed);

  PricedResult out;
  out.shots = shots;
  out.seed = seed;
  const uint64_t price_mask = (uint64_t(1) << n) - 1;
  for (const auto& [bits, count] : shot.counts) {
    const uint64_t price_bits = bits & price_mask;
    if (std::popcount(price_bits) != 1) continue;  // outside the unary basis
    out.accepted += count;
    if (bits >> n) out.ones += count;
  }
  if (out.accepted == 0) {
    out.all_rejected = true;
    return out;
  }
  out.p_hat = double(out.ones) / double(out.accepted);
  out.payoff_estimate = out.p_hat * (grid.prices.back() - k);
  return out;
}

double kl_divergence(const std::vector<double>& target,
                     const std::vector<double>& measured, uint64_t shots) {
  if (target.size() != measured.size()) throw std::invalid_argument("length mismatch");
  std::vector<double> q = measured;
  const double pseudo = shots > 0 ? 1.0 / (2.0 * double(shots)) : 1e-12;
  double qtot = 0;
  for (double& v : q) {
    if (v <= 0) v = pseudo;
    qtot += v;
  }
  double kl = 0;
  for (size_t i = 0; i < target.size(); ++i) {
    if (target[i] <= 0) continue;
    kl += target[i] * std::log(target[i] / (q[i] / qtot));
  }
  return std::max(0.0, kl);
}

// ---------------------------------------------------------------------------

GateCounts table_counts(const GateCountModel& model, Part part) {
  const double n = model.n;
  const double kp = model.kappa;
  const double l = model.l;
  const bool cnot = model.native != CountNative::PARTIAL_ISWAP;
  if (model.representation == Representation::UNARY) {
    const bool best = model.native == CountNative::BEST;
    switch (part) {
      case Part::DISTRIBUTOR:
        if (cnot && !best) return {2 * n, 4 * n, 3 * n};
        return {1, n, n / 2};
      case Part::PAYOFF:
        if (cnot || best) return {2 * kp * n, 2 * kp * n, 4 * kp * n};
        return {10 * kp * n, 5 * kp * n, 15 * kp * n};
      case Part::S_PSI0:
        return {1, 0, 1};
      case Part::S_0:
        if (cnot || best) return {4, 1, 5};
        return {9, 2, 10};
      case Part::FULL_M1: {
        GateCounts d = table_counts(model, Part::DISTRIBUTOR);
        GateCounts p = table_counts(model, Part::PAYOFF);
        GateCounts sp = table_counts(model, Part::S_PSI0);
        GateCounts s0 = table_counts(model, Part::S_0);
        return {3 * (d.one_qubit + p.one_qubit) + sp.one_qubit + s0.one_qubit,
                3 * (d.two_qubit + p.two_qubit) + sp.two_qubit + s0.two_qubit,
                3 * (d.depth + p.depth) + sp.depth + s0.depth};
      }
    }
  } else {
    switch (part) {
      case Part::DISTRIBUTOR:
        if (cnot) return {3 * n * l, n * l, n * l + l};
        return {8 * n * l, 2 * n * l, 6 * n * l + l};
      case Part::PAYOFF:
        if (cnot) return {(16 + 5 * kp) * n, 14 * n, (27 + 2 * kp) * n};
        return {(86 + 5 * kp) * n, 28 * n, (97 + 2 * kp) * n};
      case Part::S_PSI0:
        return {1, 0, 1};
      case Part::S_0:
        if (cnot) return {20 * n - 23, 12 * n - 18, 24 * n - 30};
        return {80 * n - 113, 24 * n - 36, 90 * n - 129};
      case Part::FULL_M1: {
        GateCounts d = table_counts(model, Part::DISTRIBUTOR);
        GateCounts p = table_counts(model, Part::PAYOFF);
        GateCounts sp = table_counts(model, Part::S_PSI0);
        GateCounts s0 = table_counts(model, Part::S_0);
        return {3 * (d.one_qubit + p.one_qubit) + sp.one_qubit + s0.one_qubit,
                3 * (d.two_qubit + p.two_qubit) + sp.two_qubit + s0.two_qubit,
                3 * (d.depth + p.depth) + sp.depth + s0.depth};
      }
    }
  }
  throw std::logic_error("unreachable");
}

GateCounts exact_unary_counts(CountNative native, int n, int paying_bins,
                              Part part) {
  const double c = paying_bins;
  const double ladder_steps = (n + 1) / 2;  // ceil(n/2)
  switch (part) {
    case Part::DISTRIBUTOR:
      if (native == CountNative::CNOT) {
        return {2.0 * (n - 1) + 1, 4.0 * (n - 1), 6 * ladder_steps + 1};
      }
      return {1, double(n - 1), ladder_steps + 1};
    case Part::PAYOFF:
      if (native == CountNative::CNOT || native == CountNative::BEST) {
        return {2 * c, 2 * c, 4 * c};
      }
      return {0, c, c};
    case Part::S_PSI0:
      return {1, 0, 1};  // X Z X on one wire compiles to a single rotation
    case Part::S_0:
      if (native == CountNative::CNOT || native == CountNative::BEST) {
        return {2, 1, 3};  // {X H | CNOT | H X} after compiling the runs
      }
      return {6, 2, 5};
    case Part::FULL_M1:
      // Composition is not exactly additive under run compilation (runs can
      // bridge part boundaries); use table_counts for full-circuit curves.
      throw std::invalid_argument("exact counts are per part");
  }
  throw std::logic_error("unreachable");
}

double table_total_full(Representation rep, CountNative native, double bins,
                        double kappa) {
  GateCountModel model;
  model.representation = rep;
  model.kappa = kappa;
  model.native = native;
  if (rep == Representation::UNARY) {
    model.n = int(bins);
    GateCounts g = table_counts(model, Part::FULL_M1);
    return g.total();
  }
  const double q = std::log2(bins);
  model.n = 0;  // the binary forms are evaluated on the real-valued register size
  const double l = q / 2;
  // Evaluate the binary rows with n = q, l = q/2 directly.
  const bool cnot = native != CountNative::PARTIAL_ISWAP;
  double d1, d2, p1, p2, s01, s02;
  if (cnot) {
    d1 = 3 * q * l; d2 = q * l;
    p1 = (16 + 5 * kappa) * q; p2 = 14 * q;
    s01 = 20 * q - 23; s02 = 12 * q - 18;
  } else {
    d1 = 8 * q * l; d2 = 2 * q * l;
    p1 = (86 + 5 * kappa) * q; p2 = 28 * q;
    s01 = 80 * q - 113; s02 = 24 * q - 36;
  }
  return 3 * (d1 + d2 + p1 + p2) + 1 + s01 + s02;
}

int crossover_bins(CountNative native, double kappa, int max_bins) {
  for (int bins = 4; bins <= max_bins; ++bins) {
    const double u = table_total_full(Representation::UNARY, native, bins, kappa);
    const double b = table_total_full(Representation::BINARY, native, bins, kappa);
    if (u > b) return bins;
  }
  return -1;
}

}  // namespace desq::unary
