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

#include "deid/detect/detector.hpp"

#include <regex>
#include <string>
#include <vector>

#include "deid/errors.hpp"
#include "deid/log.hpp"

namespace deid::detect {

AnnotationSet detect_structured(const Document& doc,
                                const PatternSet& patterns) {
  const std::string& text = doc.text();
  std::vector<TaggedSpan> raw;
  for (const Rule& rule : patterns.rules()) {
    auto begin = std::sregex_iterator(text.begin(), text.end(), rule.pattern);
    auto end = std::sregex_iterator();
    for (auto it = begin; it != end; ++it) {
      const std::size_t byte_start = static_cast<std::size_t>(it->position());
      const std::size_t byte_end =
          byte_start + static_cast<std::size_t>(it->length());
      std::size_t start, stop;
      try {
        start = doc.scalar_offset_at_byte(byte_start);
        stop = doc.scalar_offset_at_byte(byte_end);
      } catch (const OffsetOutOfRange&) {
        // A pattern matched a partial UTF-8 sequence; skip it rather than
        // emit a span that cannot be sliced.
        log::warn("rule " + std::string(to_string(rule.tag)) +
                  " matched mid-scalar at byte " + std::to_string(byte_start) +
                  " in doc " + doc.id() + "; skipped");
        continue;
      }
      raw.push_back(TaggedSpan{start, stop, rule.tag, Source::RULE,
                               std::string(it->str())});
    }
  }
  AnnotationSet kept = validate_annotation_set(doc, raw);
  if (kept.spans().size() != raw.size() &&
      log::level() <= log::Level::DEBUG) {
    for (const TaggedSpan& r : raw) {
      bool survives = false;
      for (const TaggedSpan& k : kept.spans()) {
        if (k.start == r.start && k.end == r.end && k.tag == r.tag) {
          survives = true;
          break;
        }
      }
      if (!survives) {
        log::debug("doc " + doc.id() + ": dropped overlapped " +
                   std::string(to_string(r.tag)) + " match [" +
                   std::to_string(r.start) + "," + std::to_string(r.end) +
                   ") '" + r.surface + "'");
      }
    }
  }
  return kept;
}

AnnotationSet detect_structured(const Document& doc) {
  return detect_structured(doc, PatternSet::builtin());
}

}  // namespace deid::detect
