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

#ifndef DEID_LDP_MECHANISMS_HPP
#define DEID_LDP_MECHANISMS_HPP

#include "deid/ldp/rng.hpp"

namespace deid::ldp {

// Amplitude Δ and budget ε of one noised release; scale = Δ/ε.
struct NoiseScale {
  double delta;
  double epsilon;

  NoiseScale(double delta_, double epsilon_);

  double scale() const { return delta / epsilon; }
};

// v + Lap(0, Δ/ε): the classic mechanism over an unbounded range.
double laplace(double v, const NoiseScale& s, Rng& rng);

// Truncated-and-renormalized Laplace over [lower, upper], centered at v,
// with the scale enlarged so the ε-LDP density-ratio bound still holds for
// any pair of inputs in the interval (plain truncation would break it).
// Throws ValueOutOfDomain when v is outside [lower, upper].
double bounded_laplace(double v, double lower, double upper,
                       const NoiseScale& s, Rng& rng);

// Exposed for tests: the corrected scale b solving
// b = Δ / (ε − ln ΔC(b)), where ΔC(b) is the worst-case ratio of the
// truncation normalizer over the interval width.
double bounded_laplace_scale(double width, const NoiseScale& s);

// Secondary real branch of the Lambert W function: returns w ≤ −1 with
// w·e^w = x, for x in [−1/e, 0). Bracketed bisection, relative error
// ≤ 1e−9.
double lambert_w_minus1(double x);

// One polar sample of the planar Laplace distribution used for
// geo-indistinguishability: theta uniform on [0, 2π), radius drawn from the
// Gamma(shape 2, scale 1/ε) radial law via Lambert-W inversion.
struct PolarOffset {
  double r;      // same distance unit as 1/epsilon (we use km)
  double theta;  // radians
};

PolarOffset planar_laplace(double epsilon, Rng& rng);

// The radius for a given CDF quantile p ∈ [0, 1); exposed for tests.
double planar_laplace_radius(double epsilon, double p);

}  // namespace deid::ldp

#endif  // DEID_LDP_MECHANISMS_HPP
