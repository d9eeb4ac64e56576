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

#include "deid/geo/gazetteer.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "deid/errors.hpp"
#include "deid/log.hpp"
#include "deid/utf8.hpp"

namespace deid::geo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEarthRadiusKm = 6371.0;

double radians(double degrees) { return degrees * kPi / 180.0; }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

Point3 to_unit_sphere(double latitude, double longitude) {
  const double lat = radians(latitude);
  const double lon = radians(longitude);
  return Point3{std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                std::sin(lat)};
}

double great_circle_km(double lat1, double lon1, double lat2, double lon2) {
  const double phi1 = radians(lat1);
  const double phi2 = radians(lat2);
  const double dphi = radians(lat2 - lat1);
  const double dlambda = radians(lon2 - lon1);
  const double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(phi1) * std::cos(phi2) * std::sin(dlambda / 2) *
                       std::sin(dlambda / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

Gazetteer::Gazetteer(std::vector<City> cities)
    : cities_(std::move(cities)), tree_([this] {
        std::vector<Point3> points;
        points.reserve(cities_.size());
        for (const City& c : cities_) {
          points.push_back(to_unit_sphere(c.latitude, c.longitude));
        }
        return points;
      }()) {
  for (std::size_t i = 0; i < cities_.size(); ++i) {
    const City& c = cities_[i];
    if (std::abs(c.latitude) > 90.0 || std::abs(c.longitude) > 180.0) {
      throw ConfigError("city '" + c.name + "' has out-of-range coordinates");
    }
    const std::string key = utf8::fold_key(c.name);
    if (key.empty()) {
      throw ConfigError("gazetteer contains a city with an empty name");
    }
    // First entry wins on duplicate names/zips; later ones stay reachable
    // through nearest-neighbor snapping.
    by_name_.emplace(key, i);
    if (!c.zip.empty()) by_zip_.emplace(c.zip, i);
  }
}

Gazetteer Gazetteer::from_cities(std::vector<City> cities) {
  if (cities.empty()) {
    throw ConfigError("gazetteer requires at least one city");
  }
  return Gazetteer(std::move(cities));
}

Gazetteer Gazetteer::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open gazetteer: " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("gazetteer is empty: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "name,zip,latitude,longitude") {
    throw ConfigError("gazetteer header must be 'name,zip,latitude,longitude'"
                      ", got '" + line + "'");
  }
  std::vector<City> cities;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw ConfigError("gazetteer line " + std::to_string(line_no) +
                        ": expected 4 fields, got " +
                        std::to_string(fields.size()));
    }
    try {
      cities.push_back(City{fields[0], fields[1], std::stod(fields[2]),
                            std::stod(fields[3])});
    } catch (const std::exception&) {
      throw ConfigError("gazetteer line " + std::to_string(line_no) +
                        ": bad coordinates");
    }
  }
  if (cities.empty()) {
    throw ConfigError("gazetteer has no data rows: " + path);
  }
  return Gazetteer(std::move(cities));
}

std::optional<std::size_t> Gazetteer::find_by_name(
    std::string_view surface) const {
  const auto it = by_name_.find(utf8::fold_key(surface));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Gazetteer::find_by_zip(std::string_view zip) const {
  const auto it = by_zip_.find(std::string(zip));
  if (it == by_zip_.end()) return std::nullopt;
  return it->second;
}

std::size_t Gazetteer::nearest(double latitude, double longitude) const {
  return tree_.nearest(to_unit_sphere(latitude, longitude));
}

}  // namespace deid::geo
