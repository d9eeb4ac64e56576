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

#include "deid/annotation.hpp"

#include <algorithm>

#include "deid/errors.hpp"

namespace deid {

AnnotationSet AnnotationSet::from_spans(std::string doc_id,
                                        std::vector<TaggedSpan> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const TaggedSpan& a, const TaggedSpan& b) {
              if (a.start != b.start) return a.start < b.start;
              return a.end < b.end;
            });
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const TaggedSpan& span = spans[i];
    if (span.tag == Tag::O) {
      throw MalformedRecord("span [" + std::to_string(span.start) + ", " +
                            std::to_string(span.end) +
                            ") in document " + doc_id + " carries tag O");
    }
    if (span.start >= span.end) {
      throw MalformedRecord("span [" + std::to_string(span.start) + ", " +
                            std::to_string(span.end) + ") in document " +
                            doc_id + " is empty or inverted");
    }
    if (i > 0 && spans[i - 1].overlaps(span)) {
      throw MalformedRecord(
          "spans [" + std::to_string(spans[i - 1].start) + ", " +
          std::to_string(spans[i - 1].end) + ") and [" +
          std::to_string(span.start) + ", " + std::to_string(span.end) +
          ") overlap in document " + doc_id);
    }
  }
  return AnnotationSet(std::move(doc_id), std::move(spans));
}

AnnotationSet validate_annotation_set(const Document& doc,
                                      std::vector<TaggedSpan> raw) {
  std::vector<TaggedSpan> candidates;
  candidates.reserve(raw.size());
  for (TaggedSpan& span : raw) {
    if (span.tag == Tag::O) continue;
    if (span.start >= span.end || span.end > doc.length()) {
      throw OffsetOutOfRange(
          "span [" + std::to_string(span.start) + ", " +
          std::to_string(span.end) + ") is out of range for document " +
          doc.id() + " of length " + std::to_string(doc.length()));
    }
    const std::string_view slice = doc.slice(span.start, span.end);
    if (span.surface.empty()) {
      span.surface = std::string(slice);
    } else if (span.surface != slice) {
      throw SurfaceMismatch("span [" + std::to_string(span.start) + ", " +
                            std::to_string(span.end) + ") surface \"" +
                            span.surface + "\" does not match text \"" +
                            std::string(slice) + "\" in document " + doc.id());
    }
    candidates.push_back(std::move(span));
  }

  // Overlap resolution: repeatedly keep the longest remaining span (ties:
  // smaller start, then earlier raw position) and discard everything that
  // overlaps it.
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const TaggedSpan& sa = candidates[a];
                     const TaggedSpan& sb = candidates[b];
                     if (sa.length() != sb.length())
                       return sa.length() > sb.length();
                     if (sa.start != sb.start) return sa.start < sb.start;
                     return a < b;
                   });

  std::vector<TaggedSpan> kept;
  kept.reserve(candidates.size());
  for (std::size_t idx : order) {
    const TaggedSpan& span = candidates[idx];
    const bool clashes =
        std::any_of(kept.begin(), kept.end(),
                    [&](const TaggedSpan& k) { return k.overlaps(span); });
    if (!clashes) kept.push_back(span);
  }

  std::sort(kept.begin(), kept.end(),
            [](const TaggedSpan& a, const TaggedSpan& b) {
              return a.start < b.start;
            });
  return AnnotationSet(doc.id(), std::move(kept));
}

}  // namespace deid
