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

#include "deid/geo/sanitizer.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "deid/errors.hpp"
#include "deid/ldp/mechanisms.hpp"
#include "deid/log.hpp"
#include "deid/utf8.hpp"

namespace deid::geo {

namespace {

constexpr double kKmPerDegree = 111.32;
constexpr double kPi = 3.14159265358979323846;

// Folded key with ASCII punctuation turned into separators, so address
// fragments like "dole, bermont" tokenize cleanly.
std::string address_key(std::string_view surface) {
  std::string cleaned(surface);
  for (char& c : cleaned) {
    if (c == ',' || c == ';' || c == '.' || c == '(' || c == ')') c = ' ';
  }
  return utf8::fold_key(cleaned);
}

std::vector<std::string> tokenize(const std::string& key) {
  std::vector<std::string> tokens;
  std::string token;
  for (char c : key) {
    if (c == ' ') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

bool is_five_digits(std::string_view s) {
  if (s.size() != 5) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& tokens, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::size_t resolve(const Gazetteer& gaz, std::string_view surface) {
  const std::string key = address_key(surface);
  if (auto hit = gaz.find_by_name(key)) return *hit;

  const std::vector<std::string> tokens = tokenize(key);
  for (const std::string& token : tokens) {
    if (is_five_digits(token)) {
      if (auto hit = gaz.find_by_zip(token)) return *hit;
    }
  }
  // Street-level addresses put the commune last; try ever-shorter suffixes.
  for (std::size_t from = 1; from < tokens.size(); ++from) {
    if (auto hit = gaz.find_by_name(join(tokens, from))) return *hit;
  }
  throw UnresolvedLocation("no gazetteer match for '" + std::string(surface) +
                           "'");
}

std::size_t perturb(const Gazetteer& gaz, std::size_t city_index,
                    double epsilon, LocationMemo& memo, ldp::Rng& rng) {
  if (auto it = memo.by_city.find(city_index); it != memo.by_city.end()) {
    return it->second;
  }
  const City& z = gaz.city(city_index);
  const ldp::PolarOffset offset = ldp::planar_laplace(epsilon, rng);
  const double lat = z.latitude + offset.r * std::cos(offset.theta) /
                                      kKmPerDegree;
  const double cos_lat =
      std::cos(z.latitude * kPi / 180.0);
  // Keep the longitude step finite near the poles; the gazetteer is
  // commune-scale data, so this guard is theoretical.
  const double lon = z.longitude + offset.r * std::sin(offset.theta) /
                                       (kKmPerDegree * std::max(cos_lat, 1e-6));
  const std::size_t snapped = gaz.nearest(lat, lon);
  memo.by_city.emplace(city_index, snapped);
  return snapped;
}

std::string substitute_location(const Gazetteer& gaz, const TaggedSpan& span,
                                double epsilon, LocationMemo& memo,
                                ldp::Rng& rng) {
  std::size_t surrogate = 0;
  bool resolved = true;
  try {
    surrogate = perturb(gaz, resolve(gaz, span.surface), epsilon, memo, rng);
  } catch (const UnresolvedLocation&) {
    resolved = false;
    const std::string key = address_key(span.surface);
    if (auto it = memo.by_surface.find(key); it != memo.by_surface.end()) {
      surrogate = it->second;
    } else {
      surrogate = rng.uniform_index(gaz.size());
      memo.by_surface.emplace(key, surrogate);
      log::info("location '" + span.surface +
                "' not in gazetteer; substituted with a random city");
    }
  }
  const City& y = gaz.city(surrogate);
  // A bare zip code keeps the zip shape; anything else renders as the
  // city name (streets elided).
  const std::string key = address_key(span.surface);
  if (resolved && is_five_digits(key)) {
    return y.zip.empty() ? y.name : y.zip;
  }
  return y.name;
}

}  // namespace deid::geo
