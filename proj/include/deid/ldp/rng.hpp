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

#ifndef DEID_LDP_RNG_HPP
#define DEID_LDP_RNG_HPP

#include <cstdint>
#include <random>

namespace deid::ldp {

// Uniform randomness source. Two implementations: a seedable generator for
// tests and reproducible runs, and a nondeterministic source as the
// production default.
class Rng {
 public:
  virtual ~Rng() = default;

  // Uniform double in [0, 1), 53 bits of precision.
  virtual double uniform() = 0;

  // Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }
};

// Deterministic under a fixed seed; identical across platforms because the
// engine (mt19937_64) and the 53-bit reduction are both fully specified.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  double uniform() override {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Nondeterministic source backed by std::random_device.
class SecureRng final : public Rng {
 public:
  double uniform() override {
    const std::uint64_t hi = dev_();
    const std::uint64_t lo = dev_();
    return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
  }

 private:
  std::random_device dev_;
};

}  // namespace deid::ldp

#endif  // DEID_LDP_RNG_HPP
