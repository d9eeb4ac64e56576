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

#ifndef DEID_DETECT_TEMPORAL_HPP
#define DEID_DETECT_TEMPORAL_HPP

#include <string>

#include "deid/annotation.hpp"
#include "deid/date.hpp"
#include "deid/document.hpp"

namespace deid::detect {

enum class TemporalKind { ABSOLUTE_DATE, RELATIVE_DATE, AGE };

// The shape a mention was written in; sanitized values are rendered back in
// the same shape so the rewritten text stays plausible.
enum class SurfaceForm {
  DAY_MONTH_YEAR,      // 12/03/2019, 12.03.2019
  ISO,                 // 2019-03-12
  DAY_MONTHNAME_YEAR,  // 3 mars 2019, 1er avril 2020
  MONTHNAME_YEAR,      // mars 2019 (day defaults to 15)
  MONTH_YEAR,          // 03/2019 (day defaults to 15)
  RELATIVE,            // dans 3 jours, il y a 2 mois, hier, ...
  AGE_YEARS,           // 75 ans
};

struct TemporalMention {
  TaggedSpan span;
  TemporalKind kind = TemporalKind::ABSOLUTE_DATE;
  Date normalized;  // the resolved calendar date
  SurfaceForm form = SurfaceForm::DAY_MONTH_YEAR;
  char separator = '/';  // DAY_MONTH_YEAR and MONTH_YEAR only
  int day_digits = 2;    // observed zero-padding
  int month_digits = 2;
};

// Resolves a DATE or AGE span to a calendar date. Relative phrases and ages
// are anchored at the document reference date; an age of N years maps to
// reference minus round(N * 365.25) days; month-precision dates resolve to
// the 15th. Throws UnparseableTemporal when the surface matches no known
// shape or names an invalid calendar date.
TemporalMention normalize_temporal(const Document& doc,
                                   const TaggedSpan& span);

// Renders `d` in the shape of `mention`. Relative phrases have no faithful
// inverse once the anchor moves, so they fall back to dd/mm/yyyy.
std::string render_date(const TemporalMention& mention, const Date& d);

// Renders an age mention with a new year count ("1 an", "82 ans").
std::string render_age(long years);

}  // namespace deid::detect

#endif  // DEID_DETECT_TEMPORAL_HPP
