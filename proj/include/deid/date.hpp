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

#ifndef DEID_DATE_HPP
#define DEID_DATE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace deid {

// Proleptic Gregorian calendar date. Arithmetic goes through the day count
// since the civil epoch (1970-01-01) so interval math is exact.
struct Date {
  int year = 1970;
  int month = 1;  // 1-12
  int day = 1;    // 1-31

  bool is_valid() const;

  // Days since 1970-01-01 (negative before the epoch).
  long to_days() const;
  static Date from_days(long days);

  Date plus_days(long days) const;
  // Calendar-aware shifts; the day of month is clamped to the target
  // month's length (31/01 + 1 month -> 28/02 or 29/02).
  Date plus_months(int months) const;
  Date plus_years(int years) const;

  // "dd/mm/yyyy", zero-padded.
  std::string to_dmy_string() const;
  // "yyyy-mm-dd", zero-padded.
  std::string to_iso_string() const;

  // Accepts "dd/mm/yyyy" or "yyyy-mm-dd" (single-digit day/month allowed).
  static std::optional<Date> parse(std::string_view text);

  friend auto operator<=>(const Date&, const Date&) = default;
};

// d1 - d2 in days.
inline long days_between(const Date& d1, const Date& d2) {
  return d1.to_days() - d2.to_days();
}

}  // namespace deid

#endif  // DEID_DATE_HPP
