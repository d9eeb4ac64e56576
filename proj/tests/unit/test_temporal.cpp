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
#include <string>

#include "doctest.h"
#include "testutil.hpp"

#include "deid/detect/detector.hpp"
#include "deid/detect/temporal.hpp"
#include "deid/document.hpp"
#include "deid/errors.hpp"

using namespace deid;
using detect::SurfaceForm;
using detect::TemporalKind;
using detect::TemporalMention;

namespace {

// Detects the single span of `text` and normalizes it.
TemporalMention mention_of(const std::string& text,
                           const Date& reference = Date{2019, 3, 20}) {
  const Document doc("d", text, reference);
  const AnnotationSet set = detect::detect_structured(doc);
  REQUIRE(set.size() == 1);
  return detect::normalize_temporal(doc, set.spans()[0]);
}

}  // namespace

TEST_CASE("absolute dates normalize without touching the reference") {
  const TemporalMention m = mention_of("12/03/2019");
  CHECK(m.kind == TemporalKind::ABSOLUTE_DATE);
  CHECK(m.normalized.day == 12);
  CHECK(m.normalized.month == 3);
  CHECK(m.normalized.year == 2019);
  CHECK(m.form == SurfaceForm::DAY_MONTH_YEAR);

  const TemporalMention iso = mention_of("2019-03-12");
  CHECK(iso.form == SurfaceForm::ISO);
  CHECK(iso.normalized.to_days() == m.normalized.to_days());

  const TemporalMention dotted = mention_of("3.1.2019");
  CHECK(dotted.normalized.day == 3);
  CHECK(dotted.normalized.month == 1);
  CHECK(dotted.separator == '.');
  CHECK(dotted.day_digits == 1);
}

TEST_CASE("month names, with and without a day") {
  const TemporalMention named = mention_of("le 5 août 2019");
  CHECK(named.form == SurfaceForm::DAY_MONTHNAME_YEAR);
  CHECK(named.normalized.day == 5);
  CHECK(named.normalized.month == 8);

  const TemporalMention premier = mention_of("1er janvier 2020");
  CHECK(premier.normalized.day == 1);
  CHECK(premier.normalized.month == 1);
  CHECK(premier.normalized.year == 2020);

  // Month precision pins the day to the middle of the month.
  const TemporalMention monthly = mention_of("février 2018");
  CHECK(monthly.form == SurfaceForm::MONTHNAME_YEAR);
  CHECK(monthly.normalized.day == 15);
  CHECK(monthly.normalized.month == 2);

  const TemporalMention numeric = mention_of("03/2019");
  CHECK(numeric.form == SurfaceForm::MONTH_YEAR);
  CHECK(numeric.normalized.day == 15);
  CHECK(numeric.normalized.month == 3);
}

TEST_CASE("relative dates resolve against the reference date") {
  const Date ref{2020, 1, 10};
  CHECK(mention_of("dans 3 jours", ref).normalized.to_days() ==
        Date{2020, 1, 13}.to_days());
  CHECK(mention_of("dans 2 semaines", ref).normalized.to_days() ==
        Date{2020, 1, 24}.to_days());
  CHECK(mention_of("dans 3 mois", ref).normalized.to_days() ==
        Date{2020, 4, 10}.to_days());
  CHECK(mention_of("depuis 2 semaines", ref).normalized.to_days() ==
        Date{2019, 12, 27}.to_days());
  CHECK(mention_of("depuis 1 an", ref).normalized.to_days() ==
        Date{2019, 1, 10}.to_days());
  CHECK(mention_of("il y a 15 ans", ref).normalized.to_days() ==
        Date{2005, 1, 10}.to_days());
  CHECK(mention_of("il y a 10 jours", ref).normalized.to_days() ==
        Date{2019, 12, 31}.to_days());
  CHECK(mention_of("hier", ref).normalized.to_days() ==
        Date{2020, 1, 9}.to_days());
  CHECK(mention_of("avant-hier", ref).normalized.to_days() ==
        Date{2020, 1, 8}.to_days());
  CHECK(mention_of("demain", ref).normalized.to_days() ==
        Date{2020, 1, 11}.to_days());
  CHECK(mention_of("après-demain", ref).normalized.to_days() ==
        Date{2020, 1, 12}.to_days());
  CHECK(mention_of("aujourd'hui", ref).normalized.to_days() == ref.to_days());
  for (const char* phrase : {"dans 3 jours", "hier", "il y a 2 mois"}) {
    CHECK(mention_of(phrase, ref).kind == TemporalKind::RELATIVE_DATE);
  }
}

TEST_CASE("ages resolve to reference minus round(years * 365.25) days") {
  const Date ref{2020, 1, 1};
  const TemporalMention m = mention_of("75 ans", ref);
  CHECK(m.kind == TemporalKind::AGE);
  // Independent oracle through Julian day numbers.
  const long expected_days =
      testutil::days_since_epoch_oracle(2020, 1, 1) -
      std::lround(75 * 365.25);
  CHECK(m.normalized.to_days() == expected_days);
  CHECK(m.normalized.year == 1944);
  CHECK(m.normalized.month == 12);
  CHECK(m.normalized.day == 31);

  const TemporalMention one = mention_of("1 an", ref);
  CHECK(one.normalized.to_days() ==
        ref.to_days() - std::lround(1 * 365.25));
}

TEST_CASE("normalization rejects impossible or foreign spans") {
  const Document doc("d", "le 31/02/2019 et Jean", Date{2020, 1, 1});
  const AnnotationSet set = detect::detect_structured(doc);
  REQUIRE(set.size() == 1);  // the detector is shape-only
  CHECK_THROWS_AS(detect::normalize_temporal(doc, set.spans()[0]),
                  UnparseableTemporal);

  TaggedSpan per{17, 21, Tag::PER, Source::EXTERNAL, "Jean"};
  CHECK_THROWS_AS(detect::normalize_temporal(doc, per), UnparseableTemporal);
}

TEST_CASE("rendering reproduces the observed surface shape") {
  const Date d{2021, 7, 4};
  CHECK(detect::render_date(mention_of("12/03/2019"), d) == "04/07/2021");
  CHECK(detect::render_date(mention_of("3.1.2019"), d) == "4.7.2021");
  CHECK(detect::render_date(mention_of("2019-03-12"), d) == "2021-07-04");
  CHECK(detect::render_date(mention_of("le 5 août 2019"), d) ==
        "4 juillet 2021");
  CHECK(detect::render_date(mention_of("le 5 août 2019"), Date{2021, 7, 1}) ==
        "1er juillet 2021");
  CHECK(detect::render_date(mention_of("février 2018"), d) == "juillet 2021");
  CHECK(detect::render_date(mention_of("03/2019"), d) == "07/2021");
  // Relative phrases have no absolute shape to preserve; they come back as
  // a plain date.
  CHECK(detect::render_date(mention_of("dans 3 jours", Date{2020, 1, 10}), d) ==
        "04/07/2021");
  CHECK(detect::render_age(75) == "75 ans");
  CHECK(detect::render_age(1) == "1 an");
}

TEST_CASE("round trip: normalize after render is the identity on dates") {
  const Date ref{2019, 3, 20};
  for (const char* surface : {"12/03/2019", "01/01/1995", "31/12/2003"}) {
    const TemporalMention m = mention_of(surface, ref);
    const std::string again = detect::render_date(m, m.normalized);
    CHECK(again == surface);
    const TemporalMention back = mention_of(again, ref);
    CHECK(back.normalized.to_days() == m.normalized.to_days());
  }
}
