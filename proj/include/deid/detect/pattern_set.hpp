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

#ifndef DEID_DETECT_PATTERN_SET_HPP
#define DEID_DETECT_PATTERN_SET_HPP

#include <regex>
#include <string>
#include <vector>

#include "deid/tag.hpp"

namespace deid::detect {

struct Rule {
  Tag tag;
  std::string pattern_text;
  std::regex pattern;
};

// Ordered collection of detection rules. File format: one rule per line,
// `TAG<tab>regex`, UTF-8; blank lines and lines starting with '#' are
// skipped. Rule order matters: when two rules match the exact same span,
// the earlier rule wins the tie.
class PatternSet {
 public:
  static PatternSet load(const std::string& path);
  static PatternSet parse(const std::string& content);
  // Compiled-in copy of the shipped data/patterns.tsv.
  static const PatternSet& builtin();

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<Rule> rules_;
};

// Source text of the builtin rules (kept in sync with data/patterns.tsv; a
// unit test compares them).
const char* builtin_pattern_text();

}  // namespace deid::detect

#endif  // DEID_DETECT_PATTERN_SET_HPP
