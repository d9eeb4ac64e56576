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

#ifndef DEID_GEO_GAZETTEER_HPP
#define DEID_GEO_GAZETTEER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deid/geo/kdtree.hpp"

namespace deid::geo {

struct City {
  std::string name;
  std::string zip;  // empty when unknown
  double latitude;  // degrees, |lat| ≤ 90
  double longitude; // degrees, |lon| ≤ 180
};

// The city list used for location resolution and surrogate snapping.
// Name lookups go through accent/case folding; nearest-neighbor queries go
// through a k-d tree over the unit-sphere embedding (chord distance is
// monotone in great-circle distance, so the nearest chord neighbor is the
// nearest great-circle neighbor; ties resolve to the smaller index).
class Gazetteer {
 public:
  // CSV with a mandatory `name,zip,latitude,longitude` header row.
  static Gazetteer load(const std::string& path);
  static Gazetteer from_cities(std::vector<City> cities);

  const std::vector<City>& cities() const { return cities_; }
  const City& city(std::size_t index) const { return cities_[index]; }
  std::size_t size() const { return cities_.size(); }

  std::optional<std::size_t> find_by_name(std::string_view surface) const;
  std::optional<std::size_t> find_by_zip(std::string_view zip) const;
  std::size_t nearest(double latitude, double longitude) const;

 private:
  explicit Gazetteer(std::vector<City> cities);

  std::vector<City> cities_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::unordered_map<std::string, std::size_t> by_zip_;
  KdTree3 tree_;
};

// Unit-sphere embedding of geographic coordinates (degrees).
Point3 to_unit_sphere(double latitude, double longitude);

// Great-circle distance in km (haversine, mean earth radius 6371 km).
double great_circle_km(double lat1, double lon1, double lat2, double lon2);

}  // namespace deid::geo

#endif  // DEID_GEO_GAZETTEER_HPP
