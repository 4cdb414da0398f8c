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

#ifndef DESQ_UNARY_HPP
#define DESQ_UNARY_HPP

#include <optional>
#include <vector>

#include "desq/circuit.hpp"
#include "desq/market.hpp"
#include "desq/sampling.hpp"

namespace desq::unary {

enum class Native { CNOT, PARTIAL_ISWAP, RAW };

/// Angles theta_1..theta_{n-1} of the amplitude-distributor ladder; gate
/// theta_i couples price qubits (i-1, i). The ladder starts from an X on the
/// middle qubit floor(n/2) and works outwards.
struct DistributorAngles {
  int n = 0;
  std::vector<double> thetas;          // size n-1, thetas[i-1] = theta_i
  std::vector<int> saturated_bins;     // zero-probability bins hit a limit angle

  int middle() const { return n / 2; }
};

/// Solves the ladder angles so the distributor loads sqrt(p_i)|i> exactly.
DistributorAngles solve_distributor_angles(const std::vector<double>& probs);
DistributorAngles solve_distributor_angles(const market::PriceGrid& grid);

/// Distributor D on n price qubits (includes the initializing X). RAW keeps
/// partial-SWAP gates; PARTIAL_ISWAP swaps them for partial-iSWAPs (same
/// loaded probabilities, different phases); CNOT expands each one per the
/// CX - cRy - CX decomposition.
Circuit build_distributor(const DistributorAngles& angles,
                          Native native = Native::RAW);

/// Payoff calculator C+R on n+1 qubits, ancilla last: for every bin with
/// S_i > k, a cRy of 2 asin sqrt((S_i - k)/(S_max - k)) from qubit i onto
/// the ancilla. Empty circuit when no bin pays.
Circuit build_payoff(const market::PriceGrid& grid, double k,
                     Native native = Native::RAW);

/// A = D then C+R on n+1 qubits (no initial X; the unary algorithm is taken
/// as starting from the one-hot state the X prepares).
Circuit build_ansatz(const market::PriceGrid& grid, double k, Native native);

/// One Grover round as wired in the full circuit: S_psi0 (XZX on the
/// ancilla), A^dagger, S_0 (X-H-CNOT-H-X on the ancilla, control on the
/// initialization qubit), A.
Circuit build_grover(const market::PriceGrid& grid, double k, Native native);

/// Full pricing circuit: X on the middle qubit, A, then m Grover rounds.
Circuit build_full(const market::PriceGrid& grid, double k, int m,
                   Native native);

struct PricedResult {
  uint64_t shots = 0;
  uint64_t accepted = 0;   // shots whose price register read exactly one-hot
  uint64_t ones = 0;       // accepted shots with ancilla = 1
  double p_hat = 0;        // ones / accepted
  double payoff_estimate = 0;
  bool all_rejected = false;
  uint64_t seed = 0;
};

/// Samples the full circuit, post-selects on the unary subspace and converts
/// the accepted ancilla fraction to a payoff estimate (valid as-is for m=0;
/// for m>0 the fraction feeds amplitude estimation).
PricedResult run_priced(const market::PriceGrid& grid, double k, int m,
                        Native native, uint64_t shots,
                        const std::optional<NoiseModel>& noise, uint64_t seed);

/// KL(target || measured) with zero measured bins given a pseudo-count of
/// 1/(2 shots) before renormalization.
double kl_divergence(const std::vector<double>& target,
                     const std::vector<double>& measured, uint64_t shots);

// ---------------------------------------------------------------------------
// Gate-count model

enum class Representation { UNARY, BINARY };
enum class CountNative { CNOT, PARTIAL_ISWAP, BEST };
enum class Part { DISTRIBUTOR, PAYOFF, S_PSI0, S_0, FULL_M1 };

struct GateCounts {
  double one_qubit = 0;
  double two_qubit = 0;
  double depth = 0;
  double total() const { return one_qubit + two_qubit; }
};

struct GateCountModel {
  Representation representation = Representation::UNARY;
  CountNative native = CountNative::CNOT;
  int n = 0;          // bins (unary) or register qubits (binary)
  double kappa = 0.5; // strike position fraction
  double l = 0;       // qGAN layers, binary only
};

/// Closed forms as printed in the circuit cost table (leading order; the
/// published curves and the crossover use these).
GateCounts table_counts(const GateCountModel& model, Part part);

/// Exact closed forms for the unary circuits as constructed here; these are
/// the numbers the built circuits tally to. `paying_bins` is the number of
/// bins above the strike (kappa * n in the table's notation).
GateCounts exact_unary_counts(CountNative native, int n, int paying_bins,
                              Part part);

/// Total gates of the full m=1 circuit per the printed table, unary vs
/// binary with q = log2(bins) register qubits and l = q/2 qGAN layers.
double table_total_full(Representation rep, CountNative native, double bins,
                        double kappa = 0.5);

/// Smallest bin count at which the binary total drops below the unary one.
int crossover_bins(CountNative native, double kappa = 0.5, int max_bins = 4096);

}  // namespace desq::unary

#endif
