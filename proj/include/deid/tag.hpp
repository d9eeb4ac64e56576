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

#ifndef DEID_TAG_HPP
#define DEID_TAG_HPP

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace deid {

// Entity tags. O ("Outside") is the unique non-PHI value; every other tag
// maps onto at least one HIPAA safe-harbor category, except MISC which is a
// training-set artifact and carries no mapping.
enum class Tag {
  PER,
  LOC,
  ORG,
  DATE,
  AGE,
  PHONE,
  EMAIL,
  URL,
  ID,
  MISC,
  O,
};

inline constexpr std::array<Tag, 11> kAllTags = {
    Tag::PER,   Tag::LOC, Tag::ORG, Tag::DATE, Tag::AGE, Tag::PHONE,
    Tag::EMAIL, Tag::URL, Tag::ID,  Tag::MISC, Tag::O,
};

std::string_view to_string(Tag tag);
std::optional<Tag> tag_from_string(std::string_view name);

// HIPAA safe-harbor category numbers covered by a tag. ORG is returned as a
// geographic/organizational quasi-identifier (category 2); MISC yields the
// empty set and logs a warning. Throws NonPhiTag for O.
std::set<int> tag_to_hipaa(Tag tag);

// Source attribution of an annotation stream.
enum class Source { RULE, EXTERNAL, MERGED };

std::string_view to_string(Source source);

}  // namespace deid

#endif  // DEID_TAG_HPP
