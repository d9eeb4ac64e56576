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

#include "deid/pipeline/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "deid/errors.hpp"

namespace deid::pipeline {

namespace {

using nlohmann::json;

Date parse_date_or_throw(const std::string& text, const char* key) {
  std::optional<Date> d = Date::parse(text);
  if (!d) {
    throw ConfigError(std::string("config '") + key +
                      "': cannot parse date '" + text + "'");
  }
  return *d;
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const std::string& text) {
  json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.is_object()) {
    throw ConfigError("config is not a JSON object");
  }
  static const std::set<std::string> known = {
      "epsilon_total",  "split_policy",    "location_fraction",
      "date_age_fraction", "category_amplitudes", "pattern_file",
      "gazetteer_file", "names_dir",       "seed",
      "reference_date", "include_ages",    "substitute_org",
      "emit_audit_map", "audit_map_path",  "jobs"};
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (known.count(key) == 0) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  PipelineConfig cfg;
  if (root.contains("epsilon_total")) {
    if (!root["epsilon_total"].is_number()) {
      throw ConfigError("config 'epsilon_total' must be a number");
    }
    cfg.epsilon_total = root["epsilon_total"].get<double>();
  }
  if (root.contains("split_policy")) {
    const std::string policy = root["split_policy"].get<std::string>();
    if (policy == "fixed_quarters") {
      cfg.split_policy = ldp::SplitPolicy::FIXED_QUARTERS;
    } else if (policy == "proportional") {
      cfg.split_policy = ldp::SplitPolicy::PROPORTIONAL_OCCURRENCES;
    } else if (policy == "custom") {
      cfg.split_policy = ldp::SplitPolicy::CUSTOM;
    } else {
      throw ConfigError("config 'split_policy' must be fixed_quarters, "
                        "proportional, or custom");
    }
  }
  if (root.contains("location_fraction")) {
    cfg.location_fraction = root["location_fraction"].get<double>();
  }
  if (root.contains("date_age_fraction")) {
    cfg.date_age_fraction = root["date_age_fraction"].get<double>();
  }
  if (root.contains("category_amplitudes")) {
    const json& amp = root["category_amplitudes"];
    if (!amp.is_object()) {
      throw ConfigError("config 'category_amplitudes' must be an object");
    }
    if (amp.contains("short")) {
      cfg.category_bounds.short_days = amp["short"].get<long>();
    }
    if (amp.contains("medium")) {
      cfg.category_bounds.medium_days = amp["medium"].get<long>();
    }
    if (amp.contains("long")) {
      cfg.category_bounds.long_days = amp["long"].get<long>();
    }
  }
  if (root.contains("pattern_file")) {
    cfg.pattern_file = root["pattern_file"].get<std::string>();
  }
  if (root.contains("gazetteer_file")) {
    cfg.gazetteer_file = root["gazetteer_file"].get<std::string>();
  }
  if (root.contains("names_dir")) {
    cfg.names_dir = root["names_dir"].get<std::string>();
  }
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) {
      throw ConfigError("config 'seed' must be an integer");
    }
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("reference_date")) {
    cfg.reference_date = parse_date_or_throw(
        root["reference_date"].get<std::string>(), "reference_date");
  }
  if (root.contains("include_ages")) {
    cfg.include_ages = root["include_ages"].get<bool>();
  }
  if (root.contains("substitute_org")) {
    cfg.substitute_org = root["substitute_org"].get<bool>();
  }
  if (root.contains("emit_audit_map")) {
    cfg.emit_audit_map = root["emit_audit_map"].get<bool>();
  }
  if (root.contains("audit_map_path")) {
    cfg.audit_map_path = root["audit_map_path"].get<std::string>();
  }
  if (root.contains("jobs")) {
    cfg.jobs = root["jobs"].get<int>();
  }
  cfg.validate();
  return cfg;
}

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void PipelineConfig::validate() const {
  if (!(epsilon_total > 0.0)) {
    throw ConfigError("epsilon_total must be positive");
  }
  if (split_policy == ldp::SplitPolicy::CUSTOM) {
    if (location_fraction < 0.0 || date_age_fraction < 0.0 ||
        std::abs(location_fraction + date_age_fraction - 1.0) > 1e-9) {
      throw ConfigError("custom split fractions must be non-negative and "
                        "sum to 1");
    }
  }
  const auto& b = category_bounds;
  if (!(0 < b.short_days && b.short_days < b.medium_days &&
        b.medium_days < b.long_days)) {
    throw ConfigError("category amplitudes must satisfy "
                      "0 < short < medium < long");
  }
  if (emit_audit_map && audit_map_path.empty()) {
    throw ConfigError("emit_audit_map requires audit_map_path");
  }
  if (jobs < 1) {
    throw ConfigError("jobs must be at least 1");
  }
}

ldp::PrivacyBudget PipelineConfig::make_budget() const {
  if (split_policy == ldp::SplitPolicy::CUSTOM) {
    return ldp::PrivacyBudget::custom(epsilon_total, location_fraction,
                                      date_age_fraction);
  }
  return ldp::PrivacyBudget(epsilon_total, split_policy);
}

}  // namespace deid::pipeline
