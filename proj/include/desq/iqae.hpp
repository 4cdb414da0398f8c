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

#ifndef DESQ_IQAE_HPP
#define DESQ_IQAE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desq/unary.hpp"

namespace desq::iqae {

struct SchedulePolicy {
  enum class Kind { LINEAR, EXPONENTIAL } kind = Kind::LINEAR;
  int max_rounds = 4;  // J; rounds run j = 0..J

  /// Grover power of round j: j for LINEAR, {0, 1, 2, 4, ...} for EXPONENTIAL.
  int power(int j) const;
  std::vector<int> powers() const;
};

/// Candidate angles of round m: [theta0, pi - theta0, pi + theta0, ...]
/// divided by (2m + 1), length 2m + 1, with theta0 = asin(sqrt(a)).
std::vector<double> multiple_values_arcsin(double a, int m);

struct Round {
  int m = 0;
  uint64_t shots = 0;
  uint64_t accepted = 0;
  double a_hat = 0;
  double theta = 0;       // disambiguated candidate
  double dtheta = 0;      // z / (2 (2m+1) sqrt(accepted))
  bool tie_broken = false;
};

struct EstimationRecord {
  std::vector<Round> rounds;
  double fused_theta = 0;
  double fused_dtheta = 0;
  double fused_a = 0;
  double fused_da = 0;
  double alpha = 0.05;
  uint64_t seed = 0;
  bool complete = false;
  int failed_round = -1;  // set when a round had zero accepted shots

  std::string to_json() const;
  std::string to_csv() const;
};

struct RoundUpdate {
  double theta_j = 0;
  double dtheta_j = 0;
  double fused_theta = 0;
  double fused_dtheta = 0;
  bool tie_broken = false;
};

/// One iteration of the Gaussian estimation loop: pick the candidate nearest
/// the running estimate (ties to the smaller), attach its confidence width,
/// then fuse by inverse-variance weighting. Round 0 must have m = 0.
RoundUpdate round_update(double prev_theta, double prev_dtheta, double a_hat,
                         int m_j, uint64_t shots, double alpha, bool first_round);

/// Runs the full post-selected estimation on the unary pricing circuits.
/// Uncertainty denominators use accepted (not requested) shots.
EstimationRecord estimate(const market::PriceGrid& grid, double strike,
                          const SchedulePolicy& policy, uint64_t shots_per_round,
                          const std::optional<NoiseModel>& noise, double alpha,
                          uint64_t seed,
                          unary::Native native = unary::Native::RAW);

/// Closed-form fused width after running the schedule with N shots per
/// round: z/(2 sqrt(N)) * (sum_j (2 m_j + 1)^2)^(-1/2).
double predicted_fused_dtheta(const SchedulePolicy& policy, uint64_t shots,
                              double alpha);

/// One-sigma version of the same prediction (width divided by z).
double predicted_fused_sigma(const SchedulePolicy& policy, uint64_t shots);

/// Classical-sampling and optimal-amplitude-estimation sigma bounds at equal
/// oracle-call count: 1/(2 sqrt(N sum(2m+1))) and 1/(2 sqrt(N) sum(2m+1)).
double classical_sigma_bound(const SchedulePolicy& policy, uint64_t shots);
double optimal_sigma_bound(const SchedulePolicy& policy, uint64_t shots);

struct AdvantageBound {
  double retained_threshold = 0;  // minimal retained fraction p~_J = M^(1-2a)
  double gate_error_bound = 0;    // p_e < 1 - m_J^((2-4a)/((a n + b) m_J))
};

/// Post-selection advantage bounds; `alpha_exponent` is 3/4 for the linear
/// schedule and 1 for the exponential one, (a, b) the per-round gate scaling.
AdvantageBound advantage_bound(double a_coeff, double b_coeff, int n, int m_max,
                               double alpha_exponent);

double normal_quantile(double p);

}  // namespace desq::iqae

#endif
