// Copyright 2026 The Deid Authors
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

#include "deid/ldp/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deid/errors.hpp"

namespace deid::ldp {

namespace {

constexpr double kPi = 3.14159265358979323846;

double nonzero_uniform(Rng& rng) {
  double p = rng.uniform();
  while (p == 0.0) p = rng.uniform();
  return p;
}

// Worst-case ratio of the truncation normalizer over the interval: the mass
// is largest for a center at the midpoint and smallest at the edges.
double normalizer_ratio(double width, double b) {
  const double c_max = 1.0 - std::exp(-width / (2.0 * b));
  const double c_min = 0.5 * (1.0 - std::exp(-width / b));
  return c_max / c_min;
}

// Laplace CDF at x for center v, scale b.
double laplace_cdf(double x, double v, double b) {
  if (x < v) return 0.5 * std::exp((x - v) / b);
  return 1.0 - 0.5 * std::exp(-(x - v) / b);
}

}  // namespace

NoiseScale::NoiseScale(double delta_, double epsilon_)
    : delta(delta_), epsilon(epsilon_) {
  if (!(delta > 0.0) || !(epsilon > 0.0)) {
    throw ConfigError("noise scale requires delta > 0 and epsilon > 0 (got " +
                      std::to_string(delta_) + ", " + std::to_string(epsilon_) +
                      ")");
  }
}

double laplace(double v, const NoiseScale& s, Rng& rng) {
  const double b = s.scale();
  const double u = nonzero_uniform(rng) - 0.5;  // (-0.5, 0.5)
  const double magnitude = -b * std::log(1.0 - 2.0 * std::abs(u));
  return u < 0.0 ? v - magnitude : v + magnitude;
}

double bounded_laplace_scale(double width, const NoiseScale& s) {
  // Fixed point b = Δ / (ε − ln ΔC(b)). The penalty ln ΔC(b) shrinks as b
  // grows (toward 0) and is at most ln 2, so a solution with positive
  // denominator always exists; walk b up until the denominator is positive,
  // then iterate to convergence.
  double b = s.scale();
  while (s.epsilon - std::log(normalizer_ratio(width, b)) <= 0.0) b *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double next =
        s.delta / (s.epsilon - std::log(normalizer_ratio(width, b)));
    if (std::abs(next - b) <= 1e-13 * b) return next;
    b = next;
  }
  return b;
}

double bounded_laplace(double v, double lower, double upper,
                       const NoiseScale& s, Rng& rng) {
  if (!(lower < upper)) {
    throw ValueOutOfDomain("bounded_laplace requires lower < upper");
  }
  if (v < lower || v > upper) {
    throw ValueOutOfDomain("value " + std::to_string(v) + " outside [" +
                           std::to_string(lower) + ", " +
                           std::to_string(upper) + "]");
  }
  const double b = bounded_laplace_scale(upper - lower, s);
  // Inverse-CDF sampling of the Laplace restricted to [lower, upper].
  const double f_lo = laplace_cdf(lower, v, b);
  const double f_hi = laplace_cdf(upper, v, b);
  const double q = f_lo + rng.uniform() * (f_hi - f_lo);
  double x;
  if (q < 0.5) {
    x = v + b * std::log(2.0 * q);
  } else {
    x = v - b * std::log(2.0 * (1.0 - q));
  }
  return std::clamp(x, lower, upper);
}

double lambert_w_minus1(double x) {
  constexpr double kInvE = 0.36787944117144232;  // 1/e
  if (x < -kInvE || x >= 0.0) {
    throw ValueOutOfDomain("lambert_w_minus1 domain is [-1/e, 0); got " +
                           std::to_string(x));
  }
  auto f = [](double w) { return w * std::exp(w); };
  // On the secondary branch (w ≤ −1) f decreases from −1/e toward 0⁻ as w
  // goes to −∞. Expand the far end until the root is bracketed.
  double hi = -1.0;  // f(hi) = −1/e ≤ x
  double lo = -2.0;
  while (f(lo) < x) lo *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= x) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-12 * std::max(1.0, -lo)) break;
  }
  return 0.5 * (lo + hi);
}

double planar_laplace_radius(double epsilon, double p) {
  if (!(epsilon > 0.0)) {
    throw ConfigError("planar laplace requires epsilon > 0");
  }
  if (p <= 0.0) return 0.0;
  constexpr double kInvE = 0.36787944117144232;
  return -(lambert_w_minus1((p - 1.0) * kInvE) + 1.0) / epsilon;
}

PolarOffset planar_laplace(double epsilon, Rng& rng) {
  const double theta = 2.0 * kPi * rng.uniform();
  const double r = planar_laplace_radius(epsilon, rng.uniform());
  return PolarOffset{r, theta};
}

}  // namespace deid::ldp
