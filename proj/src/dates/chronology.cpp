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

#include "deid/dates/chronology.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "deid/errors.hpp"
#include "deid/ldp/mechanisms.hpp"
#include "deid/log.hpp"

namespace deid::dates {

IntervalCategory categorize(long interval_days, const CategoryBounds& bounds) {
  if (interval_days <= bounds.short_days) return IntervalCategory::SHORT;
  if (interval_days <= bounds.medium_days) return IntervalCategory::MEDIUM;
  return IntervalCategory::LONG;
}

long amplitude(IntervalCategory category, const CategoryBounds& bounds) {
  switch (category) {
    case IntervalCategory::SHORT:
      return bounds.short_days;
    case IntervalCategory::MEDIUM:
      return bounds.medium_days;
    case IntervalCategory::LONG:
      break;
  }
  return bounds.long_days;
}

TemporalSequence build_chronology(
    const std::vector<detect::TemporalMention>& mentions,
    const Date& reference) {
  if (mentions.empty()) {
    throw EmptyChronology("document has no temporal mentions");
  }
  const long ref_days = reference.to_days();
  // Newest-first grouping of mention days.
  std::map<long, std::vector<std::size_t>, std::greater<long>> by_day;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    long days = mentions[i].normalized.to_days();
    if (days > ref_days) {
      log::warn("temporal mention '" + mentions[i].span.surface +
                "' is dated after the reference date; clamped");
      days = ref_days;
    }
    by_day[days].push_back(i);
  }
  TemporalSequence s;
  s.reference = reference;
  s.elements.push_back(ChronologyElement{reference, {}});
  for (const auto& [days, indices] : by_day) {
    s.elements.push_back(ChronologyElement{Date::from_days(days), indices});
  }
  return s;
}

std::vector<long> intervals(const TemporalSequence& s) {
  if (s.elements.size() < 2) {
    throw EmptyChronology("chronology has fewer than two elements");
  }
  std::vector<long> out;
  out.reserve(s.elements.size() - 1);
  for (std::size_t i = 0; i + 1 < s.elements.size(); ++i) {
    out.push_back(
        days_between(s.elements[i].date, s.elements[i + 1].date));
  }
  return out;
}

std::vector<long> uniqueness_fingerprint(const TemporalSequence& s) {
  if (s.elements.size() < 3) return {};
  std::vector<long> all = intervals(s);
  return std::vector<long>(all.begin() + 1, all.end());
}

SanitizedChronology sanitize_dates(
    const TemporalSequence& s,
    const std::vector<detect::TemporalMention>& mentions,
    ldp::PrivacyBudget& budget, ldp::Rng& rng, const CategoryBounds& bounds) {
  const std::vector<long> original = intervals(s);
  const std::vector<double> epsilons =
      budget.allocate(ldp::Pool::DATE_AGE, original.size());

  SanitizedChronology out;
  out.sequence.reference = s.reference;
  out.sequence.elements.push_back(ChronologyElement{s.reference, {}});
  long current = s.reference.to_days();
  for (std::size_t k = 0; k < original.size(); ++k) {
    const long amp = amplitude(categorize(original[k], bounds), bounds);
    const double noisy = ldp::bounded_laplace(
        static_cast<double>(original[k]), 0.0, static_cast<double>(amp),
        ldp::NoiseScale(static_cast<double>(amp), epsilons[k]), rng);
    const long rounded =
        std::clamp(std::lround(noisy), 0L, amp);
    current -= rounded;
    out.sequence.elements.push_back(ChronologyElement{
        Date::from_days(current), s.elements[k + 1].mentions});
  }

  const long ref_days = s.reference.to_days();
  for (std::size_t k = 1; k < out.sequence.elements.size(); ++k) {
    const ChronologyElement& element = out.sequence.elements[k];
    for (std::size_t idx : element.mentions) {
      const detect::TemporalMention& mention = mentions[idx];
      std::string text;
      if (mention.kind == detect::TemporalKind::AGE) {
        const long age = static_cast<long>(std::floor(
            static_cast<double>(ref_days - element.date.to_days()) / 365.25));
        text = detect::render_age(age);
      } else {
        if (mention.form == detect::SurfaceForm::RELATIVE) {
          log::debug("relative mention '" + mention.span.surface +
                     "' rendered as dd/mm/yyyy");
        }
        text = detect::render_date(mention, element.date);
      }
      out.replacements.push_back(Replacement{mention.span, std::move(text)});
    }
  }
  return out;
}

}  // namespace deid::dates
