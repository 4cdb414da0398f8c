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

#include "desq/iqae.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace desq::iqae {

double normal_quantile(double p) {
  static const boost::math::normal_distribution<double> n01(0.0, 1.0);
  return boost::math::quantile(n01, p);
}

int SchedulePolicy::power(int j) const {
  if (j < 0 || j > max_rounds) throw std::out_of_range("round index");
  if (kind == Kind::LINEAR) return j;
  return j == 0 ? 0 : (1 << (j - 1));
}

std::vector<int> SchedulePolicy::powers() const {
  std::vector<int> out;
  for (int j = 0; j <= max_rounds; ++j) out.push_back(power(j));
  return out;
}

std::vector<double> multiple_values_arcsin(double a, int m) {
  if (a < 0 || a > 1) throw std::invalid_argument("a outside [0, 1]");
  if (m < 0) throw std::invalid_argument("negative grover power");
  const double theta0 = std::asin(std::sqrt(a));
  std::vector<double> arr(2 * m + 1, 0.0);
  arr[0] = theta0;
  for (int k = 1; k <= m; ++k) {
    arr[2 * k - 1] = k * M_PI - theta0;
    arr[2 * k] = k * M_PI + theta0;
  }
  for (double& v : arr) v /= double(2 * m + 1);
  return arr;
}

RoundUpdate round_update(double prev_theta, double prev_dtheta, double a_hat,
                         int m_j, uint64_t shots, double alpha,
                         bool first_round) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (first_round && m_j != 0) {
    throw std::invalid_argument("the first round must use m = 0");
  }
  const double z = normal_quantile(1.0 - alpha / 2.0);

  RoundUpdate up;
  if (first_round) {
    up.theta_j = std::asin(std::sqrt(a_hat));
    up.dtheta_j = z / (2.0 * std::sqrt(double(shots)));
    up.fused_theta = up.theta_j;
    up.fused_dtheta = up.dtheta_j;
    return up;
  }

  const std::vector<double> candidates = multiple_values_arcsin(a_hat, m_j);
  double best = candidates[0];
  double best_dist = std::abs(candidates[0] - prev_theta);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const double d = std::abs(candidates[i] - prev_theta);
    if (d < best_dist - 1e-15) {
      best = candidates[i];
      best_dist = d;
    } else if (std::abs(d - best_dist) <= 1e-15 && candidates[i] < best) {
      best = candidates[i];  // equidistant candidates resolve to the smaller
      up.tie_broken = true;
    }
  }
  up.theta_j = best;
  up.dtheta_j = z / (2.0 * (2.0 * m_j + 1.0) * std::sqrt(double(shots)));

  const double w_new = 1.0 / (up.dtheta_j * up.dtheta_j);
  const double w_old = 1.0 / (prev_dtheta * prev_dtheta);
  up.fused_theta = (up.theta_j * w_new + prev_theta * w_old) / (w_new + w_old);
  up.fused_dtheta = 1.0 / std::sqrt(w_new + w_old);
  return up;
}

EstimationRecord estimate(const market::PriceGrid& grid, double strike,
                          const SchedulePolicy& policy, uint64_t shots_per_round,
                          const std::optional<NoiseModel>& noise, double alpha,
                          uint64_t seed, unary::Native native) {
  EstimationRecord rec;
  rec.alpha = alpha;
  rec.seed = seed;

  double fused_theta = 0, fused_dtheta = 0;
  for (int j = 0; j <= policy.max_rounds; ++j) {
    const int m = policy.power(j);
    const uint64_t round_seed = seed * 0x9E3779B97F4A7C15ull + uint64_t(j) + 1;
    unary::PricedResult pr = unary::run_priced(grid, strike, m, native,
                                               shots_per_round, noise, round_seed);
    Round round;
    round.m = m;
    round.shots = shots_per_round;
    round.accepted = pr.accepted;
    round.a_hat = pr.p_hat;
    if (pr.all_rejected) {
      rec.rounds.push_back(round);
      rec.failed_round = j;
      return rec;
    }
    RoundUpdate up = round_update(fused_theta, fused_dtheta, pr.p_hat, m,
                                  pr.accepted, alpha, j == 0);
    round.theta = up.theta_j;
    round.dtheta = up.dtheta_j;
    round.tie_broken = up.tie_broken;
    rec.rounds.push_back(round);
    fused_theta = up.fused_theta;
    fused_dtheta = up.fused_dtheta;
  }
  // The principal branch is enough: sin^2 is symmetric about pi/2.
  rec.fused_theta = std::min(std::max(fused_theta, 0.0), M_PI / 2.0);
  rec.fused_dtheta = fused_dtheta;
  rec.fused_a = std::pow(std::sin(rec.fused_theta), 2);
  rec.fused_da = std::abs(std::sin(2.0 * rec.fused_theta)) * fused_dtheta;
  rec.complete = true;
  return rec;
}

double predicted_fused_dtheta(const SchedulePolicy& policy, uint64_t shots,
                              double alpha) {
  const double z = normal_quantile(1.0 - alpha / 2.0);
  return z * predicted_fused_sigma(policy, shots);
}

double predicted_fused_sigma(const SchedulePolicy& policy, uint64_t shots) {
  double sum_sq = 0;
  for (int m : policy.powers()) sum_sq += double(2 * m + 1) * double(2 * m + 1);
  return 1.0 / (2.0 * std::sqrt(double(shots)) * std::sqrt(sum_sq));
}

double classical_sigma_bound(const SchedulePolicy& policy, uint64_t shots) {
  double calls = 0;
  for (int m : policy.powers()) calls += double(2 * m + 1);
  return 1.0 / (2.0 * std::sqrt(double(shots) * calls));
}

double optimal_sigma_bound(const SchedulePolicy& policy, uint64_t shots) {
  double calls = 0;
  for (int m : policy.powers()) calls += double(2 * m + 1);
  return 1.0 / (2.0 * std::sqrt(double(shots)) * calls);
}

AdvantageBound advantage_bound(double a_coeff, double b_coeff, int n, int m_max,
                               double alpha_exponent) {
  if (m_max < 2) throw std::invalid_argument("bound degenerate for m_J < 2");
  AdvantageBound out;
  // M = sum of the schedule's grover powers up to m_J.
  double big_m = 0;
  if (alpha_exponent == 1.0) {
    for (int p = 1; p <= m_max; p *= 2) big_m += p;
  } else {
    big_m = double(m_max) * (m_max + 1) / 2.0;
  }
  out.retained_threshold = std::pow(big_m, 1.0 - 2.0 * alpha_exponent);
  const double expo =
      (2.0 - 4.0 * alpha_exponent) / ((a_coeff * n + b_coeff) * m_max);
  out.gate_error_bound = 1.0 - std::pow(double(m_max), expo);
  return out;
}

std::string EstimationRecord::to_json() const {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["seed"] = seed;
  j["complete"] = complete;
  if (failed_round >= 0) j["failed_round"] = failed_round;
  j["fused"] = {{"theta", fused_theta},
                {"dtheta", fused_dtheta},
                {"a", fused_a},
                {"da", fused_da}};
  j["rounds"] = nlohmann::json::array();
  for (const Round& r : rounds) {
    j["rounds"].push_back({{"m", r.m},
                           {"shots", r.shots},
                           {"accepted", r.accepted},
                           {"a_hat", r.a_hat},
                           {"theta", r.theta},
                           {"dtheta", r.dtheta},
                           {"tie_broken", r.tie_broken}});
  }
  return j.dump();
}

std::string EstimationRecord::to_csv() const {
  std::ostringstream os;
  os.precision(15);
  os << "round,m,shots,accepted,theta,dtheta\n";
  for (size_t i = 0; i < rounds.size(); ++i) {
    const Round& r = rounds[i];
    os << i << "," << r.m << "," << r.shots << "," << r.accepted << ","
       << r.theta << "," << r.dtheta << "\n";
  }
  return os.str();
}

}  // namespace desq::iqae
