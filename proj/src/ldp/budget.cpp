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

#include "deid/ldp/budget.hpp"

#include <cmath>

#include "deid/errors.hpp"

namespace deid::ldp {

namespace {

const char* pool_name(Pool pool) {
  return pool == Pool::LOCATION ? "location" : "date&age";
}

}  // namespace

PrivacyBudget::PrivacyBudget(double epsilon_total, SplitPolicy policy,
                             double location_fraction,
                             double date_age_fraction)
    : epsilon_total_(epsilon_total),
      policy_(policy),
      fraction_{location_fraction, date_age_fraction},
      planned_(policy != SplitPolicy::PROPORTIONAL_OCCURRENCES),
      pool_spent_{false, false} {
  if (!(epsilon_total > 0.0)) {
    throw ConfigError("epsilon_total must be positive");
  }
}

PrivacyBudget::PrivacyBudget(double epsilon_total, SplitPolicy policy)
    : PrivacyBudget(epsilon_total, policy,
                    policy == SplitPolicy::FIXED_QUARTERS ? 0.25 : 0.0,
                    policy == SplitPolicy::FIXED_QUARTERS ? 0.75 : 0.0) {
  if (policy == SplitPolicy::CUSTOM) {
    throw ConfigError("CUSTOM policy requires explicit fractions");
  }
}

PrivacyBudget PrivacyBudget::custom(double epsilon_total,
                                    double location_fraction,
                                    double date_age_fraction) {
  if (location_fraction < 0.0 || date_age_fraction < 0.0 ||
      std::abs(location_fraction + date_age_fraction - 1.0) > 1e-9) {
    throw ConfigError("custom pool fractions must be non-negative and sum "
                      "to 1");
  }
  return PrivacyBudget(epsilon_total, SplitPolicy::CUSTOM, location_fraction,
                       date_age_fraction);
}

void PrivacyBudget::plan(std::size_t location_occurrences,
                         std::size_t date_age_occurrences) {
  if (policy_ != SplitPolicy::PROPORTIONAL_OCCURRENCES) return;
  const std::size_t total = location_occurrences + date_age_occurrences;
  if (total == 0) {
    fraction_[0] = fraction_[1] = 0.0;
  } else {
    fraction_[0] = static_cast<double>(location_occurrences) /
                   static_cast<double>(total);
    fraction_[1] = static_cast<double>(date_age_occurrences) /
                   static_cast<double>(total);
  }
  planned_ = true;
}

double PrivacyBudget::pool_fraction(Pool pool) const {
  if (!planned_) {
    throw ConfigError("PROPORTIONAL_OCCURRENCES budget used before plan()");
  }
  return fraction_[static_cast<int>(pool)];
}

double PrivacyBudget::spent() const {
  double total = 0.0;
  for (const LedgerEntry& entry : ledger_) total += entry.epsilon;
  return total;
}

std::vector<double> PrivacyBudget::allocate(Pool pool,
                                            std::size_t n_occurrences) {
  if (n_occurrences == 0) {
    throw ConfigError("allocate requires at least one occurrence");
  }
  const double pool_epsilon = pool_fraction(pool) * epsilon_total_;
  if (!(pool_epsilon > 0.0)) {
    throw BudgetExhausted(std::string("pool '") + pool_name(pool) +
                          "' has no budget under the active split policy");
  }
  if (pool_spent_[static_cast<int>(pool)]) {
    throw BudgetExhausted(std::string("pool '") + pool_name(pool) +
                          "' already spent");
  }
  // Composition bound, checked before anything is recorded.
  if (spent() + pool_epsilon > epsilon_total_ * (1.0 + 1e-12)) {
    throw BudgetExhausted("allocating " + std::to_string(pool_epsilon) +
                          " to pool '" + pool_name(pool) +
                          "' would exceed epsilon_total");
  }
  pool_spent_[static_cast<int>(pool)] = true;
  ledger_.push_back(LedgerEntry{
      std::string(pool_name(pool)) + " pool (" +
          std::to_string(n_occurrences) + " occurrences)",
      pool_epsilon});
  return std::vector<double>(n_occurrences,
                             pool_epsilon / static_cast<double>(n_occurrences));
}

}  // namespace deid::ldp
