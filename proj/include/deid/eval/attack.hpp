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

#ifndef DEID_EVAL_ATTACK_HPP
#define DEID_EVAL_ATTACK_HPP

#include <string>
#include <vector>

namespace deid::eval {

struct UniquenessReport {
  std::size_t n_docs = 0;
  std::size_t n_non_unique = 0;
  double fraction_unique = 0.0;
};

// The interval-sequence re-identification analysis: documents are grouped
// by exact equality of their chronological fingerprints (S'_i); a document
// is non-unique iff another document shares its fingerprint. An empty
// fingerprint carries no identifying signal and is always counted
// non-unique.
UniquenessReport uniqueness_attack(
    const std::vector<std::vector<long>>& fingerprints);

std::string to_json(const UniquenessReport& report);

}  // namespace deid::eval

#endif  // DEID_EVAL_ATTACK_HPP
