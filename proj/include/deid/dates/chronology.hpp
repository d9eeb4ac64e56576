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

#ifndef DEID_DATES_CHRONOLOGY_HPP
#define DEID_DATES_CHRONOLOGY_HPP

#include <vector>

#include "deid/date.hpp"
#include "deid/detect/temporal.hpp"
#include "deid/ldp/budget.hpp"
#include "deid/ldp/rng.hpp"

namespace deid::dates {

// Interval categories and their amplitudes in days. The classification
// thresholds equal the amplitudes so each amplitude is a true domain bound
// for the bounded noise; boundary values take the smaller category.
enum class IntervalCategory { SHORT, MEDIUM, LONG };

struct CategoryBounds {
  long short_days = 61;
  long medium_days = 660;
  long long_days = 36000;
};

IntervalCategory categorize(long interval_days,
                            const CategoryBounds& bounds = {});
long amplitude(IntervalCategory category, const CategoryBounds& bounds = {});

// One chronology element: a date plus the indices (into the mention list
// the chronology was built from) of every mention that resolved to it.
// The reference element e_0 carries no mention indices.
struct ChronologyElement {
  Date date;
  std::vector<std::size_t> mentions;
};

// The document chronology S_e: newest-first, elements[0] is the reference
// date e_0, duplicate mention dates are collapsed into one element.
struct TemporalSequence {
  Date reference;
  std::vector<ChronologyElement> elements;
};

// Builds S_e from normalized mentions. Mentions dated after the reference
// date are clamped to it with a warning (they still form their own element,
// distinct from e_0). Throws EmptyChronology when `mentions` is empty.
TemporalSequence build_chronology(
    const std::vector<detect::TemporalMention>& mentions,
    const Date& reference);

// S_i: consecutive day differences e_i − e_{i+1} (all ≥ 0). Throws
// EmptyChronology when the sequence has fewer than two elements.
std::vector<long> intervals(const TemporalSequence& s);

// S'_i: S_i with its first element removed — the shift-invariant
// chronological fingerprint. Empty when there are fewer than two intervals.
std::vector<long> uniqueness_fingerprint(const TemporalSequence& s);

// One rewritten mention: the original span and its replacement text.
struct Replacement {
  TaggedSpan span;
  std::string text;
};

struct SanitizedChronology {
  TemporalSequence sequence;  // e'_0 = e_0; same back-references
  std::vector<Replacement> replacements;
};

// Noises every interval with bounded Laplace on [0, Δ_category] under a
// uniform split of the date&age pool, reconstitutes dates backward from the
// unchanged reference date, and renders each back-referenced mention in its
// original surface shape (ages re-derive the year count). Throws
// BudgetExhausted when the pool is gone and EmptyChronology when there is
// nothing to noise.
SanitizedChronology sanitize_dates(
    const TemporalSequence& s,
    const std::vector<detect::TemporalMention>& mentions,
    ldp::PrivacyBudget& budget, ldp::Rng& rng,
    const CategoryBounds& bounds = {});

}  // namespace deid::dates

#endif  // DEID_DATES_CHRONOLOGY_HPP
