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

#include "deid/detect/temporal.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <regex>
#include <string_view>

#include "deid/errors.hpp"
#include "deid/utf8.hpp"

namespace deid::detect {

namespace {

constexpr std::array<std::string_view, 12> kMonthKeys = {
    "janvier", "fevrier", "mars",      "avril",   "mai",      "juin",
    "juillet", "aout",    "septembre", "octobre", "novembre", "decembre"};

// Accented spellings used when rendering back into text.
constexpr std::array<std::string_view, 12> kMonthNames = {
    "janvier", "février", "mars",      "avril",   "mai",      "juin",
    "juillet", "août",    "septembre", "octobre", "novembre", "décembre"};

int month_from_key(const std::string& key) {
  for (std::size_t i = 0; i < kMonthKeys.size(); ++i) {
    if (kMonthKeys[i] == key) return static_cast<int>(i) + 1;
  }
  return 0;
}

const std::string kMonthAlt =
    "(janvier|fevrier|mars|avril|mai|juin|juillet|aout|septembre|octobre|"
    "novembre|decembre)";
const std::string kUnitAlt = "(jours?|semaines?|mois|ans?)";

const std::regex kDmySlash(R"(^(\d{1,2})/(\d{1,2})/(\d{4})$)");
const std::regex kDmyDot(R"(^(\d{1,2})\.(\d{1,2})\.(\d{4})$)");
// Matched against the folded key, where the ISO hyphens become spaces.
const std::regex kIso(R"(^(\d{4}) (\d{1,2}) (\d{1,2})$)");
const std::regex kDayNameYear("^(\\d{1,2})(er)? " + kMonthAlt + " (\\d{4})$");
const std::regex kNameYear("^" + kMonthAlt + " (\\d{4})$");
const std::regex kMonthYear(R"(^(\d{1,2})/(\d{4})$)");
const std::regex kShift("^(dans|depuis) (\\d{1,3}) " + kUnitAlt + "$");
const std::regex kAgo("^il y a (\\d{1,3}) " + kUnitAlt + "$");
const std::regex kDeictic("^(avant hier|hier|demain|apres demain|aujourd "
                          "hui)$");
const std::regex kAge(R"(^(\d{1,3}) ans?$)");

[[noreturn]] void unparseable(const Document& doc, const TaggedSpan& span,
                              const std::string& why) {
  throw UnparseableTemporal("doc " + doc.id() + " span [" +
                            std::to_string(span.start) + "," +
                            std::to_string(span.end) + ") '" + span.surface +
                            "': " + why);
}

Date checked_date(const Document& doc, const TaggedSpan& span, int y, int m,
                  int d) {
  Date date{y, m, d};
  if (!date.is_valid()) {
    unparseable(doc, span, "not a valid calendar date");
  }
  return date;
}

Date shift_reference(const Date& ref, long count, std::string_view unit) {
  if (unit.substr(0, 4) == "jour") return ref.plus_days(count);
  if (unit.substr(0, 7) == "semaine") return ref.plus_days(7 * count);
  if (unit == "mois") return ref.plus_months(static_cast<int>(count));
  return ref.plus_years(static_cast<int>(count));  // an / ans
}

std::string pad_number(int value, int digits) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%0*d", digits, value);
  return buf;
}

}  // namespace

TemporalMention normalize_temporal(const Document& doc,
                                   const TaggedSpan& span) {
  if (span.tag != Tag::DATE && span.tag != Tag::AGE) {
    unparseable(doc, span,
                "tag " + std::string(to_string(span.tag)) + " is not temporal");
  }
  const std::string surface =
      span.surface.empty() ? std::string(doc.slice(span.start, span.end))
                           : span.surface;
  const std::string key = utf8::fold_key(surface);

  TemporalMention m;
  m.span = span;
  m.span.surface = surface;

  std::smatch g;
  if (span.tag == Tag::AGE) {
    if (!std::regex_match(key, g, kAge)) {
      unparseable(doc, span, "unrecognized age shape");
    }
    const long years = std::stol(g[1].str());
    m.kind = TemporalKind::AGE;
    m.form = SurfaceForm::AGE_YEARS;
    m.normalized = doc.reference_date().plus_days(
        -std::lround(static_cast<double>(years) * 365.25));
    return m;
  }

  if (std::regex_match(key, g, kDmySlash) ||
      std::regex_match(key, g, kDmyDot)) {
    m.kind = TemporalKind::ABSOLUTE_DATE;
    m.form = SurfaceForm::DAY_MONTH_YEAR;
    m.separator = key.find('/') != std::string::npos ? '/' : '.';
    m.day_digits = static_cast<int>(g[1].length());
    m.month_digits = static_cast<int>(g[2].length());
    m.normalized = checked_date(doc, span, std::stoi(g[3].str()),
                                std::stoi(g[2].str()), std::stoi(g[1].str()));
    return m;
  }
  if (std::regex_match(key, g, kIso)) {
    m.kind = TemporalKind::ABSOLUTE_DATE;
    m.form = SurfaceForm::ISO;
    m.day_digits = static_cast<int>(g[3].length());
    m.month_digits = static_cast<int>(g[2].length());
    m.normalized = checked_date(doc, span, std::stoi(g[1].str()),
                                std::stoi(g[2].str()), std::stoi(g[3].str()));
    return m;
  }
  if (std::regex_match(key, g, kDayNameYear)) {
    m.kind = TemporalKind::ABSOLUTE_DATE;
    m.form = SurfaceForm::DAY_MONTHNAME_YEAR;
    m.day_digits = static_cast<int>(g[1].length());
    m.normalized = checked_date(doc, span, std::stoi(g[4].str()),
                                month_from_key(g[3].str()),
                                std::stoi(g[1].str()));
    return m;
  }
  if (std::regex_match(key, g, kNameYear)) {
    m.kind = TemporalKind::ABSOLUTE_DATE;
    m.form = SurfaceForm::MONTHNAME_YEAR;
    m.normalized = checked_date(doc, span, std::stoi(g[2].str()),
                                month_from_key(g[1].str()), 15);
    return m;
  }
  if (std::regex_match(key, g, kMonthYear)) {
    m.kind = TemporalKind::ABSOLUTE_DATE;
    m.form = SurfaceForm::MONTH_YEAR;
    m.month_digits = static_cast<int>(g[1].length());
    m.normalized = checked_date(doc, span, std::stoi(g[2].str()),
                                std::stoi(g[1].str()), 15);
    return m;
  }

  const Date& ref = doc.reference_date();
  if (std::regex_match(key, g, kShift)) {
    const long n = std::stol(g[2].str());
    m.kind = TemporalKind::RELATIVE_DATE;
    m.form = SurfaceForm::RELATIVE;
    // "dans N ..." looks forward; "depuis N ..." anchors in the past.
    m.normalized =
        shift_reference(ref, g[1].str() == "dans" ? n : -n, g[3].str());
    return m;
  }
  if (std::regex_match(key, g, kAgo)) {
    m.kind = TemporalKind::RELATIVE_DATE;
    m.form = SurfaceForm::RELATIVE;
    m.normalized = shift_reference(ref, -std::stol(g[1].str()), g[2].str());
    return m;
  }
  if (std::regex_match(key, g, kDeictic)) {
    m.kind = TemporalKind::RELATIVE_DATE;
    m.form = SurfaceForm::RELATIVE;
    const std::string& word = g[1].str();
    long offset = 0;
    if (word == "hier") offset = -1;
    else if (word == "avant hier") offset = -2;
    else if (word == "demain") offset = 1;
    else if (word == "apres demain") offset = 2;
    m.normalized = ref.plus_days(offset);
    return m;
  }
  unparseable(doc, span, "unrecognized temporal shape");
}

std::string render_date(const TemporalMention& mention, const Date& d) {
  switch (mention.form) {
    case SurfaceForm::DAY_MONTH_YEAR:
      return pad_number(d.day, mention.day_digits) + mention.separator +
             pad_number(d.month, mention.month_digits) + mention.separator +
             pad_number(d.year, 4);
    case SurfaceForm::ISO:
      return pad_number(d.year, 4) + "-" +
             pad_number(d.month, mention.month_digits) + "-" +
             pad_number(d.day, mention.day_digits);
    case SurfaceForm::DAY_MONTHNAME_YEAR: {
      std::string day = std::to_string(d.day);
      if (d.day == 1) day += "er";
      return day + " " + std::string(kMonthNames[d.month - 1]) + " " +
             pad_number(d.year, 4);
    }
    case SurfaceForm::MONTHNAME_YEAR:
      return std::string(kMonthNames[d.month - 1]) + " " +
             pad_number(d.year, 4);
    case SurfaceForm::MONTH_YEAR:
      return pad_number(d.month, mention.month_digits) + mention.separator +
             pad_number(d.year, 4);
    case SurfaceForm::RELATIVE:
    case SurfaceForm::AGE_YEARS:
      break;
  }
  return d.to_dmy_string();
}

std::string render_age(long years) {
  return std::to_string(years) + (years > 1 ? " ans" : " an");
}

}  // namespace deid::detect
