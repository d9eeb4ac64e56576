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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "deid/errors.hpp"
#include "deid/geo/gazetteer.hpp"
#include "deid/geo/sanitizer.hpp"
#include "testutil.hpp"

using namespace deid;
using geo::City;
using geo::Gazetteer;
using geo::LocationMemo;

namespace {

std::vector<City> random_cities(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> lat(41.0, 51.5);
  std::uniform_real_distribution<double> lon(-5.0, 8.5);
  std::vector<City> cities;
  cities.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cities.push_back(
        City{"ville" + std::to_string(i), "", lat(gen), lon(gen)});
  }
  return cities;
}

TaggedSpan loc_span(const std::string& surface) {
  return TaggedSpan{0, 1, Tag::LOC, Source::MERGED, surface};
}

Gazetteer tiny_gazetteer() {
  return Gazetteer::from_cities({
      City{"Paris", "75001", 48.8566, 2.3522},
      City{"Besançon", "25000", 47.2378, 6.0241},
      City{"Bermont", "90400", 47.5889, 6.8583},
      City{"Danjoutin", "90400", 47.6206, 6.8614},
      City{"Châtenois-les-Forges", "90700", 47.5586, 6.8486},
  });
}

}  // namespace

TEST_CASE("unit-sphere embedding and haversine agree with the oracle") {
  const auto p = geo::to_unit_sphere(48.8566, 2.3522);
  CHECK(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Paris ↔ Lyon, computed independently.
  const double d = geo::great_circle_km(48.8566, 2.3522, 45.7640, 4.8357);
  CHECK(d == doctest::Approx(
                 testutil::haversine_km(48.8566, 2.3522, 45.7640, 4.8357))
                 .epsilon(1e-9));
  CHECK(d == doctest::Approx(392.0).epsilon(0.01));
  CHECK(geo::great_circle_km(47.0, 6.0, 47.0, 6.0) == 0.0);
}

TEST_CASE("kd-tree nearest matches a linear scan") {
  std::vector<City> cities = random_cities(300, 2024);
  // Exact duplicates exercise the smaller-index tie rule.
  cities.push_back(City{"dupA", "", cities[10].latitude, cities[10].longitude});
  const Gazetteer gaz = Gazetteer::from_cities(cities);

  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> lat(40.0, 52.0);
  std::uniform_real_distribution<double> lon(-6.0, 10.0);
  for (int i = 0; i < 3000; ++i) {
    const double qlat = lat(gen);
    const double qlon = lon(gen);
    const std::size_t got = gaz.nearest(qlat, qlon);
    std::size_t want = 0;
    double best = 1e30;
    for (std::size_t j = 0; j < gaz.size(); ++j) {
      const double d = testutil::haversine_km(
          qlat, qlon, gaz.city(j).latitude, gaz.city(j).longitude);
      if (d < best) {
        best = d;
        want = j;
      }
    }
    REQUIRE(got == want);
  }

  // A query exactly on the duplicated coordinates returns the earlier city.
  CHECK(gaz.nearest(cities[10].latitude, cities[10].longitude) == 10);
}

TEST_CASE("gazetteer loads the CSV format") {
  testutil::TempDir dir;
  const std::string path = dir.file("cities.csv");
  testutil::write_file(path,
                       "name,zip,latitude,longitude\n"
                       "Paris,75001,48.8566,2.3522\n"
                       "\"Ay, Champagne\",51160,49.054,4.002\n"
                       "Besançon,25000,47.2378,6.0241\n");
  const Gazetteer gaz = Gazetteer::load(path);
  REQUIRE(gaz.size() == 3);
  CHECK(gaz.city(1).name == "Ay, Champagne");
  CHECK(gaz.find_by_name("BESANCON").has_value());
  CHECK(gaz.find_by_zip("75001") == std::size_t{0});
  CHECK_FALSE(gaz.find_by_zip("99999").has_value());
}

TEST_CASE("gazetteer rejects malformed input") {
  testutil::TempDir dir;
  CHECK_THROWS_AS(Gazetteer::load(dir.file("missing.csv")), ConfigError);

  const std::string bad_header = dir.file("header.csv");
  testutil::write_file(bad_header, "ville,cp,lat,lon\nParis,75001,48.85,2.35\n");
  CHECK_THROWS_AS(Gazetteer::load(bad_header), ConfigError);

  const std::string short_row = dir.file("short.csv");
  testutil::write_file(short_row,
                       "name,zip,latitude,longitude\nParis,75001,48.85\n");
  try {
    Gazetteer::load(short_row);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  const std::string bad_coord = dir.file("coord.csv");
  testutil::write_file(bad_coord,
                       "name,zip,latitude,longitude\nParis,75001,north,2.35\n");
  CHECK_THROWS_AS(Gazetteer::load(bad_coord), ConfigError);

  const std::string no_rows = dir.file("empty.csv");
  testutil::write_file(no_rows, "name,zip,latitude,longitude\n");
  CHECK_THROWS_AS(Gazetteer::load(no_rows), ConfigError);

  CHECK_THROWS_AS(Gazetteer::from_cities({}), ConfigError);
  CHECK_THROWS_AS(
      Gazetteer::from_cities({City{"Nowhere", "", 95.0, 0.0}}),
      ConfigError);
  CHECK_THROWS_AS(Gazetteer::from_cities({City{"", "", 45.0, 0.0}}),
                  ConfigError);
}

TEST_CASE("the shipped gazetteer loads and covers the dense cluster") {
  const Gazetteer gaz = Gazetteer::load(testutil::data_file("gazetteer_fr.csv"));
  CHECK(gaz.size() >= 50);
  REQUIRE(gaz.find_by_name("Bermont").has_value());
  REQUIRE(gaz.find_by_zip("90400").has_value());
  const std::size_t bermont = *gaz.find_by_name("Bermont");
  CHECK(gaz.city(bermont).zip == "90400");
}

TEST_CASE("resolve matches names, zips, and address suffixes") {
  const Gazetteer gaz = tiny_gazetteer();
  CHECK(geo::resolve(gaz, "Bermont") == 2);
  CHECK(geo::resolve(gaz, "BERMONT") == 2);
  CHECK(geo::resolve(gaz, "besancon") == 1);
  // A 5-digit run anywhere in the surface resolves through the zip index;
  // the first city carrying that zip wins.
  CHECK(geo::resolve(gaz, "90400") == 2);
  CHECK(geo::resolve(gaz, "3 rue Pierre Dole, 90700 quelque part") == 4);
  // Street-level addresses resolve through their trailing commune tokens.
  CHECK(geo::resolve(gaz, "3 rue Pierre Dole, Bermont") == 2);
  CHECK(geo::resolve(gaz, "12 avenue Thiers, Châtenois-les-Forges") == 4);
  CHECK_THROWS_AS(geo::resolve(gaz, "Atlantis"), UnresolvedLocation);
  CHECK_THROWS_AS(geo::resolve(gaz, "99999"), UnresolvedLocation);
}

TEST_CASE("perturb with zero radius snaps back to the origin city") {
  const Gazetteer gaz = tiny_gazetteer();
  LocationMemo memo;
  testutil::ScriptedRng rng({0.0, 0.0});  // theta 0, radius quantile 0
  CHECK(geo::perturb(gaz, 2, 1.0, memo, rng) == 2);
}

TEST_CASE("perturb memoizes per city and stops drawing noise") {
  const Gazetteer gaz = tiny_gazetteer();
  LocationMemo memo;
  ldp::SeededRng rng(31);
  const std::size_t first = geo::perturb(gaz, 2, 0.05, memo, rng);
  for (int i = 0; i < 10; ++i) {
    CHECK(geo::perturb(gaz, 2, 0.05, memo, rng) == first);
  }
  CHECK(memo.by_city.size() == 1);
  // A different origin city gets its own draw.
  geo::perturb(gaz, 0, 0.05, memo, rng);
  CHECK(memo.by_city.size() == 2);
}

TEST_CASE("substitute renders by surface shape") {
  const Gazetteer gaz = tiny_gazetteer();
  // Zero-radius draws make the surrogate the resolved city itself.
  testutil::ScriptedRng rng({0.0});
  LocationMemo memo;
  CHECK(geo::substitute_location(gaz, loc_span("Bermont"), 1.0, memo, rng) ==
        "Bermont");
  // The zip mention shares the memoized surrogate and keeps the zip shape.
  CHECK(geo::substitute_location(gaz, loc_span("90400"), 1.0, memo, rng) ==
        "90400");
  // Street-level address: surrogate commune name only, street elided.
  CHECK(geo::substitute_location(gaz, loc_span("3 rue Pierre Dole, Bermont"),
                                 1.0, memo, rng) == "Bermont");
}

TEST_CASE("unresolved surfaces fall back to a memoized random city") {
  const Gazetteer gaz = tiny_gazetteer();
  LocationMemo memo;
  // uniform_index(5) consumes one uniform: 0.5 -> index 2.
  testutil::ScriptedRng rng({0.5});
  const std::string first =
      geo::substitute_location(gaz, loc_span("Xanadu"), 1.0, memo, rng);
  CHECK(first == "Bermont");
  // Repeats reuse the surface memo rather than redrawing.
  testutil::ScriptedRng other({0.9});
  CHECK(geo::substitute_location(gaz, loc_span("Xanadu"), 1.0, memo, other) ==
        first);
  CHECK(geo::substitute_location(gaz, loc_span("XANADU"), 1.0, memo, other) ==
        first);  // folded memo key
  CHECK(memo.by_surface.size() == 1);
  // An unresolved zip renders as a name: there is no real zip to mirror.
  const std::string zip_fallback =
      geo::substitute_location(gaz, loc_span("99999"), 1.0, memo, other);
  bool is_city_name = false;
  for (std::size_t i = 0; i < gaz.size(); ++i) {
    if (gaz.city(i).name == zip_fallback) is_city_name = true;
  }
  CHECK(is_city_name);
}
