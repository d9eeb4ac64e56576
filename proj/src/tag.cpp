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

#include "deid/tag.hpp"

#include "deid/errors.hpp"
#include "deid/log.hpp"

namespace deid {

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::PER: return "PER";
    case Tag::LOC: return "LOC";
    case Tag::ORG: return "ORG";
    case Tag::DATE: return "DATE";
    case Tag::AGE: return "AGE";
    case Tag::PHONE: return "PHONE";
    case Tag::EMAIL: return "EMAIL";
    case Tag::URL: return "URL";
    case Tag::ID: return "ID";
    case Tag::MISC: return "MISC";
    case Tag::O: return "O";
  }
  return "O";
}

std::optional<Tag> tag_from_string(std::string_view name) {
  for (Tag tag : kAllTags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

std::set<int> tag_to_hipaa(Tag tag) {
  switch (tag) {
    case Tag::PER: return {1};
    case Tag::LOC: return {2};
    case Tag::ORG: return {2};  // geographic/organizational quasi-identifier
    case Tag::DATE: return {3};
    case Tag::AGE: return {3};
    case Tag::PHONE: return {4, 5};
    case Tag::EMAIL: return {6};
    case Tag::URL: return {14};
    case Tag::ID: return {7, 8, 9, 10, 11, 18};
    case Tag::MISC:
      log::warn("MISC carries no HIPAA category mapping");
      return {};
    case Tag::O:
      throw NonPhiTag("O is not a PHI tag");
  }
  return {};
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::RULE: return "RULE";
    case Source::EXTERNAL: return "EXTERNAL";
    case Source::MERGED: return "MERGED";
  }
  return "RULE";
}

}  // namespace deid
