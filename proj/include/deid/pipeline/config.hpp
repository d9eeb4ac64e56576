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

#ifndef DEID_PIPELINE_CONFIG_HPP
#define DEID_PIPELINE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "deid/date.hpp"
#include "deid/dates/chronology.hpp"
#include "deid/ldp/budget.hpp"

namespace deid::pipeline {

// Everything a corpus run needs, loadable from one JSON file. Keys:
//   epsilon_total        number, > 0 (default 1.0)
//   split_policy         "fixed_quarters" | "proportional" | "custom"
//   location_fraction    number (custom policy only)
//   date_age_fraction    number (custom policy only)
//   category_amplitudes  {"short": days, "medium": days, "long": days}
//   pattern_file         path (default: built-in French rules)
//   gazetteer_file       path (required to de-identify)
//   names_dir            path holding male/female/unisex/family.txt
//   seed                 integer; omitted → nondeterministic randomness
//   reference_date       "dd/mm/yyyy" or "yyyy-mm-dd" fallback for
//                        documents without a sidecar; omitted → today
//   include_ages         bool, AGE mentions join the date chronology
//                        (default true; false masks their digits instead)
//   substitute_org       bool (default false, ORG spans left in place)
//   emit_audit_map       bool (default false)
//   audit_map_path       path (required when emit_audit_map)
//   jobs                 worker count (default 1)
// Unknown keys are rejected.
struct PipelineConfig {
  double epsilon_total = 1.0;
  ldp::SplitPolicy split_policy = ldp::SplitPolicy::FIXED_QUARTERS;
  double location_fraction = 0.25;
  double date_age_fraction = 0.75;
  dates::CategoryBounds category_bounds;
  std::string pattern_file;
  std::string gazetteer_file;
  std::string names_dir;
  std::optional<std::uint64_t> seed;
  std::optional<Date> reference_date;
  bool include_ages = true;
  bool substitute_org = false;
  bool emit_audit_map = false;
  std::string audit_map_path;
  int jobs = 1;

  static PipelineConfig from_json(const std::string& text);
  static PipelineConfig from_json_file(const std::string& path);

  // Throws ConfigError when fields are inconsistent (bad fractions, audit
  // map without a path, non-positive epsilon, ...).
  void validate() const;

  ldp::PrivacyBudget make_budget() const;
};

}  // namespace deid::pipeline

#endif  // DEID_PIPELINE_CONFIG_HPP
