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

#include "deid/date.hpp"

#include <chrono>
#include <cstdio>

namespace deid {

namespace {

namespace chrono = std::chrono;

chrono::year_month_day to_ymd(const Date& d) {
  return chrono::year_month_day{chrono::year{d.year},
                                chrono::month{static_cast<unsigned>(d.month)},
                                chrono::day{static_cast<unsigned>(d.day)}};
}

Date from_ymd(const chrono::year_month_day& ymd) {
  return Date{int(ymd.year()), int(unsigned(ymd.month())),
              int(unsigned(ymd.day()))};
}

Date clamp_to_month(chrono::year_month ym, unsigned day) {
  const auto last = chrono::year_month_day_last{ym.year(),
                                                chrono::month_day_last{ym.month()}};
  const unsigned max_day = unsigned(last.day());
  return Date{int(ym.year()), int(unsigned(ym.month())),
              int(day > max_day ? max_day : day)};
}

}  // namespace

bool Date::is_valid() const { return to_ymd(*this).ok(); }

long Date::to_days() const {
  return chrono::sys_days{to_ymd(*this)}.time_since_epoch().count();
}

Date Date::from_days(long days) {
  return from_ymd(chrono::year_month_day{chrono::sys_days{chrono::days{days}}});
}

Date Date::plus_days(long days) const { return from_days(to_days() + days); }

Date Date::plus_months(int months) const {
  auto ym = chrono::year_month{chrono::year{year},
                               chrono::month{static_cast<unsigned>(month)}} +
            chrono::months{months};
  return clamp_to_month(ym, static_cast<unsigned>(day));
}

Date Date::plus_years(int years) const { return plus_months(years * 12); }

std::string Date::to_dmy_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", day, month, year);
  return buf;
}

std::string Date::to_iso_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::optional<Date> Date::parse(std::string_view text) {
  int a = 0, b = 0, c = 0;
  char sep = 0;
  std::string s(text);
  if (std::sscanf(s.c_str(), "%d%c%d%c%d", &a, &sep, &b, &sep, &c) == 5) {
    Date d;
    if (s.find('/') != std::string::npos) {
      d = Date{c, b, a};  // dd/mm/yyyy
    } else if (s.find('-') != std::string::npos) {
      d = Date{a, b, c};  // yyyy-mm-dd
    } else {
      return std::nullopt;
    }
    if (d.is_valid()) return d;
  }
  return std::nullopt;
}

}  // namespace deid
