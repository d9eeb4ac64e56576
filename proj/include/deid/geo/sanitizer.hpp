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

#ifndef DEID_GEO_SANITIZER_HPP
#define DEID_GEO_SANITIZER_HPP

#include <string>
#include <string_view>
#include <unordered_map>

#include "deid/annotation.hpp"
#include "deid/geo/gazetteer.hpp"
#include "deid/ldp/rng.hpp"

namespace deid::geo {

// Per-document original→surrogate memo. Resolved locations key on the
// gazetteer index (so a city-name mention and its zip mention share one
// surrogate); unresolved surfaces key on their folded text.
struct LocationMemo {
  std::unordered_map<std::size_t, std::size_t> by_city;
  std::unordered_map<std::string, std::size_t> by_surface;
};

// Maps a LOC surface to a gazetteer city: exact folded-name match, then
// zip-code match on any 5-digit run, then a trailing-token match for
// street-level addresses ("3 rue pierre dole, Bermont" → Bermont). Throws
// UnresolvedLocation when nothing matches.
std::size_t resolve(const Gazetteer& gaz, std::string_view surface);

// Geo-indistinguishable surrogate: planar-Laplace offset of the city's
// coordinates (epsilon is per km), snapped to the nearest gazetteer city,
// memoized per document.
std::size_t perturb(const Gazetteer& gaz, std::size_t city_index,
                    double epsilon, LocationMemo& memo, ldp::Rng& rng);

// Replacement text for a LOC span: city names become the surrogate's name,
// pure zip codes its zip, street-level addresses the surrogate's name only
// (street elided). Unresolved surfaces fall back to a uniformly random
// gazetteer city, logged and memoized by surface.
std::string substitute_location(const Gazetteer& gaz, const TaggedSpan& span,
                                double epsilon, LocationMemo& memo,
                                ldp::Rng& rng);

}  // namespace deid::geo

#endif  // DEID_GEO_SANITIZER_HPP
