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

#ifndef DEID_SURROGATE_NAMES_HPP
#define DEID_SURROGATE_NAMES_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "deid/ldp/rng.hpp"

namespace deid::surrogate {

// Pre-compiled public name lists the substitutes are drawn from.
struct NamePools {
  std::vector<std::string> male;
  std::vector<std::string> female;
  std::vector<std::string> unisex;
  std::vector<std::string> family;

  // Reads male.txt, female.txt, unisex.txt, family.txt (one name per line)
  // from `dir`.
  static NamePools load(const std::string& dir);
};

// Per-document name substitution with affiliation preservation: a repeated
// full name keeps its substitute, and names sharing a surname get
// substitutes sharing a surname. Honorifics are kept verbatim and, when
// gendered, select the first-name pool.
class NameLookupTable {
 public:
  explicit NameLookupTable(const NamePools* pools) : pools_(pools) {}

  std::string substitute(const std::string& surface, ldp::Rng& rng);

 private:
  const NamePools* pools_;
  std::unordered_map<std::string, std::string> full_names_;  // folded → text
  std::unordered_map<std::string, std::string> surnames_;
};

}  // namespace deid::surrogate

#endif  // DEID_SURROGATE_NAMES_HPP
