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

#include <vector>

#include "doctest.h"

#include "deid/errors.hpp"
#include "deid/ldp/budget.hpp"

using namespace deid;
using ldp::Pool;
using ldp::PrivacyBudget;
using ldp::SplitPolicy;

TEST_CASE("fixed quarters splits one and three quarters") {
  PrivacyBudget budget(1.0);
  CHECK(budget.policy() == SplitPolicy::FIXED_QUARTERS);
  CHECK(budget.pool_fraction(Pool::LOCATION) == 0.25);
  CHECK(budget.pool_fraction(Pool::DATE_AGE) == 0.75);

  const std::vector<double> locations = budget.allocate(Pool::LOCATION, 5);
  REQUIRE(locations.size() == 5);
  for (const double e : locations) CHECK(e == 0.25 / 5.0);

  const std::vector<double> dates = budget.allocate(Pool::DATE_AGE, 3);
  REQUIRE(dates.size() == 3);
  for (const double e : dates) CHECK(e == 0.75 / 3.0);

  // The ledger records the pool totals, not the per-occurrence shares, so
  // it sums to epsilon_total without rounding drift.
  REQUIRE(budget.ledger().size() == 2);
  CHECK(budget.ledger()[0].epsilon == 0.25);
  CHECK(budget.ledger()[1].epsilon == 0.75);
  CHECK(budget.spent() == 1.0);
}

TEST_CASE("a pool can be spent only once") {
  PrivacyBudget budget(2.0);
  budget.allocate(Pool::DATE_AGE, 1);
  CHECK_THROWS_AS(budget.allocate(Pool::DATE_AGE, 1), BudgetExhausted);
  // The other pool is unaffected.
  CHECK_NOTHROW(budget.allocate(Pool::LOCATION, 2));
  CHECK(budget.spent() == 2.0);
}

TEST_CASE("allocation rejects zero occurrences") {
  PrivacyBudget budget(1.0);
  CHECK_THROWS_AS(budget.allocate(Pool::LOCATION, 0), ConfigError);
  // Nothing was recorded by the failed call.
  CHECK(budget.ledger().empty());
  CHECK(budget.spent() == 0.0);
}

TEST_CASE("budget requires a positive epsilon") {
  CHECK_THROWS_AS(PrivacyBudget(0.0), ConfigError);
  CHECK_THROWS_AS(PrivacyBudget(-1.0), ConfigError);
}

TEST_CASE("custom fractions are validated") {
  CHECK_THROWS_AS(PrivacyBudget::custom(1.0, 0.5, 0.6), ConfigError);
  CHECK_THROWS_AS(PrivacyBudget::custom(1.0, -0.1, 1.1), ConfigError);
  CHECK_THROWS_AS(PrivacyBudget(1.0, SplitPolicy::CUSTOM), ConfigError);

  PrivacyBudget budget = PrivacyBudget::custom(2.0, 0.1, 0.9);
  CHECK(budget.pool_fraction(Pool::LOCATION) == 0.1);
  const std::vector<double> shares = budget.allocate(Pool::DATE_AGE, 2);
  CHECK(shares[0] == doctest::Approx(0.9));

  // An all-or-nothing split leaves the empty pool unusable.
  PrivacyBudget skewed = PrivacyBudget::custom(1.0, 0.0, 1.0);
  CHECK_THROWS_AS(skewed.allocate(Pool::LOCATION, 1), BudgetExhausted);
  CHECK_NOTHROW(skewed.allocate(Pool::DATE_AGE, 1));
}

TEST_CASE("proportional policy sizes pools by occurrence counts") {
  PrivacyBudget budget(1.0, SplitPolicy::PROPORTIONAL_OCCURRENCES);
  // Using the budget before plan() is a sequencing bug, not exhaustion.
  CHECK_THROWS_AS(budget.allocate(Pool::LOCATION, 1), ConfigError);
  CHECK_THROWS_AS(budget.pool_fraction(Pool::LOCATION), ConfigError);

  budget.plan(2, 6);
  CHECK(budget.pool_fraction(Pool::LOCATION) == 0.25);
  CHECK(budget.pool_fraction(Pool::DATE_AGE) == 0.75);
  const std::vector<double> shares = budget.allocate(Pool::LOCATION, 2);
  CHECK(shares[0] == doctest::Approx(0.125));

  // With no occurrences at all, both pools are empty.
  PrivacyBudget idle(1.0, SplitPolicy::PROPORTIONAL_OCCURRENCES);
  idle.plan(0, 0);
  CHECK(idle.pool_fraction(Pool::LOCATION) == 0.0);
  CHECK_THROWS_AS(idle.allocate(Pool::DATE_AGE, 1), BudgetExhausted);
}

TEST_CASE("plan is a no-op under fixed policies") {
  PrivacyBudget budget(1.0);
  budget.plan(100, 0);
  CHECK(budget.pool_fraction(Pool::LOCATION) == 0.25);
  CHECK(budget.pool_fraction(Pool::DATE_AGE) == 0.75);
}

TEST_CASE("ledger total never exceeds epsilon_total") {
  for (const double epsilon : {0.1, 0.7, 1.0, 10.0}) {
    PrivacyBudget budget(epsilon);
    budget.allocate(Pool::LOCATION, 7);
    budget.allocate(Pool::DATE_AGE, 13);
    double total = 0.0;
    for (const auto& entry : budget.ledger()) total += entry.epsilon;
    CHECK(total <= epsilon * (1.0 + 1e-12));
    CHECK(total == doctest::Approx(epsilon).epsilon(1e-12));
  }
}
