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

#include "desq/market.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace desq::market {

namespace {
const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);

double phi(double x) { return boost::math::cdf(kStdNormal, x); }
}  // namespace

void OptionSpec::validate() const {
  for (double v : {s0, r, sigma, t, k}) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite option parameter");
  }
  if (s0 <= 0 || sigma <= 0 || t <= 0 || k <= 0) {
    throw std::invalid_argument("option parameters must be positive");
  }
}

double lognormal_pdf(const OptionSpec& spec, double s) {
  if (s <= 0) throw std::invalid_argument("price must be positive");
  const double mu = (spec.r - 0.5 * spec.sigma * spec.sigma) * spec.t;
  const double sd = spec.sigma * std::sqrt(spec.t);
  const double z = (std::log(s / spec.s0) - mu) / sd;
  return std::exp(-0.5 * z * z) / (s * sd * std::sqrt(2.0 * M_PI));
}

double lognormal_cdf(const OptionSpec& spec, double s) {
  if (s <= 0) return 0.0;
  const double mu = (spec.r - 0.5 * spec.sigma * spec.sigma) * spec.t;
  const double sd = spec.sigma * std::sqrt(spec.t);
  return phi((std::log(s / spec.s0) - mu) / sd);
}

double terminal_mean(const OptionSpec& spec) {
  return spec.s0 * std::exp(spec.r * spec.t);
}

double terminal_stddev(const OptionSpec& spec) {
  const double v = spec.sigma * spec.sigma * spec.t;
  return terminal_mean(spec) * std::sqrt(std::expm1(v));
}

PriceGrid discretize(const OptionSpec& spec, int n, double width,
                     StrikeAlignment align) {
  spec.validate();
  if (n < 2) throw std::invalid_argument("need at least 2 bins");
  if (width <= 0) throw std::invalid_argument("width must be positive");

  const double mean = terminal_mean(spec);
  const double sd = terminal_stddev(spec);
  double lo = std::max(mean - width * sd, 1e-12);
  double hi = mean + width * sd;
  const double step = (hi - lo) / n;

  if (align != StrikeAlignment::NONE) {
    // Shift the window by less than a bin so the strike sits on a center
    // (offset step/2 from lo) or an edge (offset 0).
    const double anchor = (align == StrikeAlignment::CENTER) ? step / 2 : 0.0;
    const double misfit = std::fmod(spec.k - (lo + anchor), step);
    double shift = misfit;
    if (shift > step / 2) shift -= step;
    if (shift < -step / 2) shift += step;
    lo += shift;
    hi += shift;
    lo = std::max(lo, 1e-12);
  }

  PriceGrid grid;
  grid.lo = lo;
  grid.hi = hi;
  grid.prices.resize(n);
  grid.probs.resize(n);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const double a = lo + i * step, b = lo + (i + 1) * step;
    grid.prices[i] = 0.5 * (a + b);
    grid.probs[i] = lognormal_cdf(spec, b) - lognormal_cdf(spec, a);
    total += grid.probs[i];
  }
  if (total <= 0) throw std::runtime_error("empty probability window");
  for (double& p : grid.probs) p /= total;
  return grid;
}

double analytic_payoff(const OptionSpec& spec) {
  spec.validate();
  const double sd = spec.sigma * std::sqrt(spec.t);
  const double d1 =
      (std::log(spec.s0 / spec.k) + (spec.r + 0.5 * spec.sigma * spec.sigma) * spec.t) / sd;
  const double d2 = d1 - sd;
  return spec.s0 * phi(d1) - spec.k * std::exp(-spec.r * spec.t) * phi(d2);
}

double expected_payoff_undiscounted(const OptionSpec& spec) {
  spec.validate();
  const double sd = spec.sigma * std::sqrt(spec.t);
  const double d1 =
      (std::log(spec.s0 / spec.k) + (spec.r + 0.5 * spec.sigma * spec.sigma) * spec.t) / sd;
  const double d2 = d1 - sd;
  return terminal_mean(spec) * phi(d1) - spec.k * phi(d2);
}

double windowed_expected_payoff(const OptionSpec& spec, double lo, double hi) {
  spec.validate();
  if (!(hi > lo) || lo <= 0) throw std::invalid_argument("bad window");
  using boost::math::quadrature::gauss_kronrod;
  auto payoff_density = [&](double s) {
    return std::max(0.0, s - spec.k) * lognormal_pdf(spec, s);
  };
  // Split at the strike: the integrand has a kink there.
  double num = 0;
  if (spec.k > lo && spec.k < hi) {
    num = gauss_kronrod<double, 61>::integrate(payoff_density, spec.k, hi, 12, 1e-13);
  } else {
    num = gauss_kronrod<double, 61>::integrate(payoff_density, lo, hi, 12, 1e-13);
  }
  const double mass = lognormal_cdf(spec, hi) - lognormal_cdf(spec, lo);
  if (mass <= 0) throw std::runtime_error("empty probability window");
  return num / mass;
}

double binned_payoff(const PriceGrid& grid, double k) {
  double acc = 0;
  for (int i = 0; i < grid.bins(); ++i) {
    acc += grid.probs[i] * std::max(0.0, grid.prices[i] - k);
  }
  return acc;
}

MonteCarloResult monte_carlo_payoff(const OptionSpec& spec, uint64_t paths,
                                    uint64_t seed) {
  spec.validate();
  if (paths < 1) throw std::invalid_argument("paths must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double mu = (spec.r - 0.5 * spec.sigma * spec.sigma) * spec.t;
  const double sd = spec.sigma * std::sqrt(spec.t);
  double sum = 0, sum_sq = 0;
  for (uint64_t i = 0; i < paths; ++i) {
    const double s = spec.s0 * std::exp(mu + sd * gauss(rng));
    const double pay = std::max(0.0, s - spec.k);
    sum += pay;
    sum_sq += pay * pay;
  }
  MonteCarloResult res;
  res.paths = paths;
  res.estimate = sum / double(paths);
  const double var =
      std::max(0.0, sum_sq / double(paths) - res.estimate * res.estimate);
  res.std_error = std::sqrt(var / double(paths));
  return res;
}

std::string PriceGrid::to_csv() const {
  std::ostringstream os;
  os.precision(15);
  os << "bin,price,prob\n";
  for (int i = 0; i < bins(); ++i) {
    os << i << "," << prices[i] << "," << probs[i] << "\n";
  }
  return os.str();
}

}  // namespace desq::market
