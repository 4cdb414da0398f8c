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

#ifndef DESQ_MARKET_HPP
#define DESQ_MARKET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace desq::market {

/// European option contract and market parameters.
struct OptionSpec {
  double s0 = 0;     // spot price at t = 0
  double r = 0;      // interest rate, 1/year
  double sigma = 0;  // volatility, 1/sqrt(year)
  double t = 0;      // maturity, years
  double k = 0;      // strike price

  void validate() const;
};

/// Discretized terminal-price distribution: equal-width bins, probabilities
/// from exact CDF differences renormalized over the window.
struct PriceGrid {
  std::vector<double> prices;  // bin centers, ascending
  std::vector<double> probs;   // sums to 1
  double lo = 0, hi = 0;       // window edges

  int bins() const { return int(prices.size()); }
  std::string to_csv() const;
};

enum class StrikeAlignment { NONE, CENTER, EDGE };

/// Density of S_T = s0 * exp(N((r - sigma^2/2) t, sigma sqrt(t))).
double lognormal_pdf(const OptionSpec& spec, double s);
double lognormal_cdf(const OptionSpec& spec, double s);

/// Mean and standard deviation of the terminal price S_T.
double terminal_mean(const OptionSpec& spec);
double terminal_stddev(const OptionSpec& spec);

/// n equal-width bins spanning mean +- width * stddev of S_T (floored just
/// above 0). With CENTER/EDGE alignment the window is shifted by at most
/// half a bin so the strike lands on a bin center or edge.
PriceGrid discretize(const OptionSpec& spec, int n, double width = 3.0,
                     StrikeAlignment align = StrikeAlignment::NONE);

/// Black-Scholes call price, discounted: s0 Phi(d1) - k e^{-rt} Phi(d2).
double analytic_payoff(const OptionSpec& spec);

/// Undiscounted expected payoff E[max(0, S_T - k)] in closed form.
double expected_payoff_undiscounted(const OptionSpec& spec);

/// Quadrature of (s - k)^+ over the density restricted to [lo, hi],
/// renormalized by the window mass: the continuum limit of a PriceGrid.
double windowed_expected_payoff(const OptionSpec& spec, double lo, double hi);

/// Sum of p_i * max(0, S_i - k) over the grid.
double binned_payoff(const PriceGrid& grid, double k);

struct MonteCarloResult {
  double estimate = 0;
  double std_error = 0;
  uint64_t paths = 0;
};
MonteCarloResult monte_carlo_payoff(const OptionSpec& spec, uint64_t paths,
                                    uint64_t seed);

}  // namespace desq::market

#endif
