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

#include "deid/eval/attack.hpp"

#include <map>

#include "json.hpp"

namespace deid::eval {

UniquenessReport uniqueness_attack(
    const std::vector<std::vector<long>>& fingerprints) {
  std::map<std::vector<long>, std::size_t> groups;
  for (const std::vector<long>& f : fingerprints) ++groups[f];

  UniquenessReport report;
  report.n_docs = fingerprints.size();
  for (const std::vector<long>& f : fingerprints) {
    if (f.empty() || groups[f] > 1) ++report.n_non_unique;
  }
  report.fraction_unique =
      report.n_docs == 0
          ? 0.0
          : static_cast<double>(report.n_docs - report.n_non_unique) /
                static_cast<double>(report.n_docs);
  return report;
}

std::string to_json(const UniquenessReport& report) {
  nlohmann::json root = {{"n_docs", report.n_docs},
                         {"n_non_unique", report.n_non_unique},
                         {"fraction_unique", report.fraction_unique}};
  return root.dump(2);
}

}  // namespace deid::eval
