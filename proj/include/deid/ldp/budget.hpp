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

#ifndef DEID_LDP_BUDGET_HPP
#define DEID_LDP_BUDGET_HPP

#include <string>
#include <vector>

namespace deid::ldp {

enum class SplitPolicy { FIXED_QUARTERS, PROPORTIONAL_OCCURRENCES, CUSTOM };

// The two noised categories. Everything else is substituted without noise
// and spends no budget.
enum class Pool { LOCATION, DATE_AGE };

struct LedgerEntry {
  std::string label;
  double epsilon;
};

// Per-document accountant for the global ε. A pool is spent in full by one
// allocate() call, which divides it uniformly across the pool's
// occurrences; composition holds because the ledger total never exceeds
// epsilon_total.
class PrivacyBudget {
 public:
  explicit PrivacyBudget(double epsilon_total,
                         SplitPolicy policy = SplitPolicy::FIXED_QUARTERS);

  // CUSTOM policy: explicit pool fractions, must sum to 1.
  static PrivacyBudget custom(double epsilon_total, double location_fraction,
                              double date_age_fraction);

  // PROPORTIONAL_OCCURRENCES sizes the pools by these counts; must be
  // called before allocate() under that policy. Ignored by the others.
  void plan(std::size_t location_occurrences,
            std::size_t date_age_occurrences);

  // Spends the whole pool, returning one ε per occurrence (uniform split).
  // Throws BudgetExhausted if the pool was already spent or the ledger
  // would exceed epsilon_total; ConfigError on zero occurrences or an
  // unplanned PROPORTIONAL budget.
  std::vector<double> allocate(Pool pool, std::size_t n_occurrences);

  double epsilon_total() const { return epsilon_total_; }
  SplitPolicy policy() const { return policy_; }
  double pool_fraction(Pool pool) const;
  double spent() const;
  const std::vector<LedgerEntry>& ledger() const { return ledger_; }

 private:
  PrivacyBudget(double epsilon_total, SplitPolicy policy,
                double location_fraction, double date_age_fraction);

  double epsilon_total_;
  SplitPolicy policy_;
  double fraction_[2];  // indexed by Pool
  bool planned_;
  bool pool_spent_[2];
  std::vector<LedgerEntry> ledger_;
};

}  // namespace deid::ldp

#endif  // DEID_LDP_BUDGET_HPP
